"""Exact univariate polynomials and tiling-function interpolation."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Sequence

from .lattice import Region
from .oracle import count_tilings
from .regions import TubeySpec, tubey


@dataclass(frozen=True)
class RatPoly:
    """Coefficients in ascending degree with no trailing zeros."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        c = [Fraction(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "RatPoly") -> "RatPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        pad = lambda p: p.coeffs + (Fraction(0),) * (n - len(p.coeffs))  # noqa: E731
        return RatPoly(tuple(x + y for x, y in zip(pad(self), pad(other))))

    def scale(self, k) -> "RatPoly":
        return RatPoly(tuple(Fraction(k) * c for c in self.coeffs))

    def __mul__(self, other: "RatPoly") -> "RatPoly":
        if not self.coeffs or not other.coeffs:
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return RatPoly(tuple(out))

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)


class DuplicateAbscissa(ValueError):
    pass


def interpolate(points: Iterable[tuple]) -> RatPoly:
    """Newton divided differences; the result has degree < len(points)."""
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa("interpolation nodes must be distinct")
    table = [y for _, y in pts]
    n = len(pts)
    newton = []
    for level in range(n):
        newton.append(table[0])
        table = [
            (table[i + 1] - table[i]) / (xs[i + level + 1] - xs[i]) for i in range(len(table) - 1)
        ]
    poly = RatPoly()
    basis = RatPoly((Fraction(1),))
    for k, c in enumerate(newton):
        poly = poly + basis.scale(c)
        basis = basis * RatPoly((-xs[k], Fraction(1)))
    return poly


def shift(p: RatPoly, d) -> RatPoly:
    """q with q(a) = p(a + d), by binomial expansion."""
    d = Fraction(d)
    out = [Fraction(0)] * len(p.coeffs)
    for k, c in enumerate(p.coeffs):
        for j in range(k + 1):
            out[j] += c * comb(k, j) * d ** (k - j)
    return RatPoly(tuple(out))


# families

@dataclass(frozen=True)
class TubeyFamily:
    """Tubey regions indexed by a: the tube has doubled length 2a + offset.

    offset = 1 gives g(a) = M(R_z(a + 1/2)); offset = 0 gives M(R_z(a)).
    """

    core: Region
    anchor: tuple[int, int]
    h: int
    weighted: bool = False
    offset: int = 1

    def region(self, a: int) -> Region:
        return tubey(TubeySpec(self.core, self.anchor, self.h, 2 * a + self.offset, self.weighted))


@dataclass(frozen=True)
class RegionFamily:
    build: Callable[[int], Region]
    name: str = "family"

    def region(self, a: int) -> Region:
        return self.build(a)


class InterpolationError(ValueError):
    def __init__(self, message: str, mismatches: Sequence[tuple] = ()) -> None:
        super().__init__(message)
        self.mismatches = list(mismatches)


@dataclass
class PolyResult:
    poly: RatPoly
    samples: list[tuple[int, Fraction]]
    checks: list[tuple[int, Fraction, Fraction]]
    heuristic: bool = False
    notes: list[str] = field(default_factory=list)


MAX_ADAPTIVE_DEGREE = 24


def tiling_polynomial(
    fam,
    degree_hint: int | None = None,
    count: Callable[[Region], Fraction] = count_tilings,
) -> PolyResult:
    """Interpolate M(fam.region(a)) at a = 0..D+1 and confirm at D+2, D+3.

    Without a hint D grows from 0 until two extra points agree; the result is
    then flagged heuristic.
    """
    cache: dict[int, Fraction] = {}

    def value(a: int) -> Fraction:
        if a not in cache:
            cache[a] = count(fam.region(a))
        return cache[a]

    degrees = [degree_hint] if degree_hint is not None else range(0, MAX_ADAPTIVE_DEGREE + 1)
    last_bad: list[tuple] = []
    for d in degrees:
        samples = [(a, value(a)) for a in range(d + 2)]
        poly = interpolate(samples)
        checks = [(a, value(a), poly(a)) for a in (d + 2, d + 3)]
        bad = [c for c in checks if c[1] != c[2]]
        if not bad:
            res = PolyResult(poly, samples, checks, heuristic=degree_hint is None)
            if poly.degree < 0:
                res.notes.append("zero polynomial: the family has no tilings at the sampled lengths")
            return res
        last_bad = bad
    raise InterpolationError(
        "verification points disagree with the interpolant", last_bad
    )


def degree_bound_fplus(b: int, n: int, u: Sequence[int]) -> int:
    from .formulas import underlines

    return b + n + comb(b + n, 2) - sum(underlines(b, u))
