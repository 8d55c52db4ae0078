"""Closed-form tiling functions and tileability predicates.

Every function is exact.  ``(x)_k`` always means the rising factorial.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

Rational = Fraction | int


def pochhammer(x: Rational, k: int) -> Fraction:
    if k < 0:
        raise ValueError("pochhammer needs k >= 0")
    out = Fraction(1)
    x = Fraction(x)
    for i in range(k):
        out *= x + i
    return out


def macmahon_P(a: int, b: int, c: int) -> Fraction:
    out = Fraction(1)
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                out *= Fraction(i + j + k - 1, i + j + k - 2)
    return out


def P_minus(a: Rational, b: int) -> Fraction:
    """Horizontally symmetric tilings of H_{2a,b,b}.

    ``a`` may be rational so the function can be probed as a polynomial.
    """
    a = Fraction(a)
    out = gen_binomial(2 * a + b, b)
    for i in range(1, b + 1):
        for j in range(i + 1, b + 1):
            out *= (2 * a + i + j) / Fraction(i + j)
    return out


def P_vert(a: Rational, b: int) -> Fraction:
    """Vertically symmetric tilings of H_{2a,b,b}."""
    a = Fraction(a)
    if b == 0:
        return Fraction(1)
    out = pochhammer(a + 1, b - 1) / pochhammer(2 * a + 1, b - 1)
    for i in range(1, b):
        for j in range(i, b):
            out *= (2 * a + i + j - 1) / Fraction(i + j - 1)
    return out


def gen_binomial(p: Rational, q: int) -> Fraction:
    """C(p, q) = p(p-1)...(p-q+1)/q! for q >= 0 and 0 for q < 0."""
    if q < 0:
        return Fraction(0)
    p = Fraction(p)
    out = Fraction(1)
    for i in range(q):
        out *= p - i
    return out / factorial(q)


def underline_stat(b: int, n: int, i: int, ui: int) -> int:
    """Dent statistic b + n + i - u_i for the i-th dent (1-based)."""
    if not 1 <= i <= n:
        raise ValueError(f"dent index {i} outside 1..{n}")
    return b + n + i - ui


def underlines(b: int, u: Sequence[int]) -> list[int]:
    n = len(u)
    return [underline_stat(b, n, i, ui) for i, ui in enumerate(u, start=1)]


def _dent_product(shift: Rational, u: Sequence[int], lens: Sequence[int]) -> Fraction:
    out = Fraction(1)
    for ui, k in zip(u, lens):
        out *= pochhammer(Fraction(shift) + ui, k)
    return out


class ZeroDenominator(ZeroDivisionError):
    pass


def F_norm(a: Rational, b: int, u: Sequence[int]) -> Fraction:
    """P_|(a, b+n) over prod (2a + u_i)_{underline u_i}."""
    a = Fraction(a)
    lens = underlines(b, u)
    den = _dent_product(2 * a, u, lens)
    if den == 0:
        raise ZeroDenominator(f"dent product vanishes at a = {a}")
    return P_vert(a, b + len(u)) / den


def dented_half_count(a: Rational, b: int, u: Sequence[int], f0: Rational) -> Fraction:
    """Tiling count of V(a,b,n,u) from its value f0 at a = 0."""
    f0 = Fraction(f0)
    if f0 == 0:
        return Fraction(0)
    a = Fraction(a)
    lens = underlines(b, u)
    num = f0 * _dent_product(0, u, lens) * P_vert(a, b + len(u))
    den = _dent_product(2 * a, u, lens)
    if den == 0:
        raise ZeroDenominator(f"dent product vanishes at a = {a}")
    return num / den


def weighted_half_count(a: Rational, b: int, u: Sequence[int], g0: Rational) -> Fraction:
    """Weighted count of the half-weighted weakly-west half from its a = 0 value."""
    g0 = Fraction(g0)
    if g0 == 0:
        return Fraction(0)
    a = Fraction(a)
    lens = underlines(b, u)
    num = g0 * _dent_product(0, u, lens) * P_minus(a, b + len(u))
    den = _dent_product(2 * a, u, lens)
    if den == 0:
        raise ZeroDenominator(f"dent product vanishes at a = {a}")
    return num / den


def dented_hexagon_count(
    a: Rational,
    b: int,
    c: int,
    u: Sequence[int],
    v: Sequence[int],
    base: Rational,
) -> Fraction:
    """Count of the dented hexagon H_{a,b,c,m+n,u,v} from its a = 0 value.

    NE dents u (m of them) use the statistic b + n + i - u_i and NW dents v
    (n of them) use c + m + j - v_j: the distance to the corner below the
    dent minus the dents in between.
    """
    base = Fraction(base)
    if base == 0:
        return Fraction(0)
    m, n = len(u), len(v)
    ulen = [b + n + i - ui for i, ui in enumerate(u, start=1)]
    vlen = [c + m + j - vj for j, vj in enumerate(v, start=1)]
    num = base * _dent_product(0, u, ulen) * _dent_product(0, v, vlen)
    num *= macmahon_P(a, b + n, c + m)
    den = _dent_product(a, u, ulen) * _dent_product(a, v, vlen)
    return num / den


# tileability predicates

def hexagon_tileable(
    a: int, b: int, c: int, t: int, u: Sequence[int], v: Sequence[int]
) -> bool:
    """Tileable iff at most N dents lie north of the N-th row below the top.

    A dent counts as north of row N when its triangle lies strictly above it.
    The caller is expected to pass balanced dent data (t = m + n).
    """
    if t != len(u) + len(v):
        return False
    dents = list(u) + list(v)
    rows = max(b, c) + t
    for line in range(1, rows + 1):
        # dent number d occupies the row band just above line d
        north = sum(1 for d in dents if d <= line)
        if north > line:
            return False
    return True


def half_hexagon_tileable(n: int, u: Sequence[int]) -> bool:
    return all(2 * i <= ui for i, ui in enumerate(u, start=1))


def vplus_tileable(n: int, u: Sequence[int]) -> bool:
    """V+(a,b,n,u) is V(a,b+1,n,u+1) after forced lozenges, hence this shift."""
    return half_hexagon_tileable(n, [ui + 1 for ui in u])


def symmetric_tilings_exist(apar: int, n: int, u: Sequence[int]) -> bool:
    return apar % 2 == 0 and half_hexagon_tileable(n, u)
