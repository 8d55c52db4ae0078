"""Path matrices for dented half-hexagons and exact determinants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .formulas import gen_binomial

Point = tuple[int, int]


@dataclass(frozen=True)
class PathMatrix:
    entries: tuple[tuple[Fraction, ...], ...]
    sources: tuple[Point, ...]
    sinks: tuple[Point, ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def det(self) -> Fraction:
        return determinant_exact(self.entries)


def v_sources(b: int, u: Sequence[int]) -> list[Point]:
    """Side sources then dent sources, sorted by ascending y."""
    n = len(u)
    pts = [(i - 1, b - i) for i in range(1, b + 1)]
    pts += [(0, 2 * b + 2 * n - ui) for ui in u]
    return sorted(pts, key=lambda p: (p[1], p[0]))


def _sinks(a: int, b: int, n: int, lift: int) -> list[Point]:
    return [(a + b + n - j, 2 * j - 2 + lift) for j in range(1, b + n + 1)]


def lattice_paths(dx: int, dy: int) -> Fraction:
    """Paths with dx east steps and dy northeast steps: C(dx+dy, dy)."""
    if dy < 0 or dx < 0:
        return Fraction(0)
    return gen_binomial(dx + dy, dy)


def _matrix(sources, sinks, entry) -> PathMatrix:
    rows = tuple(
        tuple(entry(tx - sx, ty - sy) for tx, ty in sinks) for sx, sy in sources
    )
    return PathMatrix(rows, tuple(sources), tuple(sinks))


def path_matrix_V(a: int, b: int, u: Sequence[int]) -> PathMatrix:
    n = len(u)
    return _matrix(v_sources(b, u), _sinks(a, b, n, 0), lattice_paths)


def path_matrix_Vplus(a: int, b: int, u: Sequence[int]) -> PathMatrix:
    n = len(u)
    return _matrix(v_sources(b, u), _sinks(a, b, n, 1), lattice_paths)


def vplusbar_entry(a: Fraction | int, k1: int, k2: int) -> Fraction:
    """Paths split by their last step; a final diagonal step weighs 1/2.

    ``k1`` and ``k2`` are the coordinate differences measured with the tube
    length removed, so the sink sits at x-offset a + k1.  Valid for rational a.
    """
    a = Fraction(a)
    top = a + k1 + k2 - 1
    return gen_binomial(top, k2) + Fraction(1, 2) * gen_binomial(top, k2 - 1)


def path_matrix_VplusBar(a: Fraction | int, b: int, u: Sequence[int]) -> PathMatrix:
    n = len(u)
    src = v_sources(b, u)
    sinks0 = _sinks(0, b, n, 1)
    rows = tuple(
        tuple(vplusbar_entry(a, tx - sx, ty - sy) for tx, ty in sinks0) for sx, sy in src
    )
    shown = _sinks(int(a), b, n, 1) if Fraction(a).denominator == 1 else sinks0
    return PathMatrix(rows, tuple(src), tuple(shown))


def vplus_entry_poly_point(a: Fraction | int, k1: int, k2: int) -> Fraction:
    """The unweighted entry C(a+k1+k2, k2) evaluated at a rational a."""
    return gen_binomial(Fraction(a) + k1 + k2, k2)


def path_matrix_Vplus_at(a: Fraction | int, b: int, u: Sequence[int]) -> PathMatrix:
    """V+ matrix with entries read as polynomials in a, evaluated at any rational a."""
    n = len(u)
    src = v_sources(b, u)
    sinks0 = _sinks(0, b, n, 1)
    rows = tuple(
        tuple(vplus_entry_poly_point(a, tx - sx, ty - sy) for tx, ty in sinks0)
        for sx, sy in src
    )
    return PathMatrix(rows, tuple(src), tuple(sinks0))


# determinants

def _bareiss(m: list[list[int]]) -> int:
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _gauss(m: list[list[Fraction]]) -> Fraction:
    n = len(m)
    det = Fraction(1)
    for k in range(n):
        pivot = next((r for r in range(k, n) if m[r][k] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            det = -det
        det *= m[k][k]
        inv = 1 / m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] * inv
            if f:
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
    return det


def determinant_exact(rows) -> Fraction:
    """Bareiss for integer matrices, fraction Gaussian elimination otherwise."""
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    if all(x.denominator == 1 for row in m for x in row):
        return Fraction(_bareiss([[int(x) for x in row] for row in m]))
    return _gauss(m)
