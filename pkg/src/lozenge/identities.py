"""Identity checks evaluated with the enumeration oracle.

Each check returns a :class:`Report` whose lines read
``PASS|FAIL <identity> <params> lhs=<p/q> rhs=<p/q>``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Sequence

from .formulas import P_minus, P_vert, macmahon_P
from .lattice import (
    BoundaryError,
    Orient,
    Region,
    TriRef,
    boundary_cycle,
    boundary_positions,
    is_balanced,
    remove_forced,
)
from .oracle import count_tilings, enumerate_tilings
from .regions import (
    LatticeLine,
    LineKind,
    SplitError,
    TubeySpec,
    crossing_pairs,
    factorization_split,
    lozenges_crossing,
    split_along_line,
    tubey,
)


class PreconditionError(ValueError):
    """Raised when an identity's hypotheses do not hold for the input."""


def fmt(q: Fraction | int) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass
class Report:
    lines: list[str] = field(default_factory=list)
    ok: bool = True

    def add(self, identity: str, params: str, lhs, rhs) -> bool:
        good = Fraction(lhs) == Fraction(rhs)
        tag = "PASS" if good else "FAIL"
        self.lines.append(f"{tag} {identity} {params} lhs={fmt(lhs)} rhs={fmt(rhs)}")
        self.ok = self.ok and good
        return good

    def extend(self, other: "Report") -> "Report":
        self.lines.extend(other.lines)
        self.ok = self.ok and other.ok
        return self

    def text(self) -> str:
        return "\n".join(self.lines)


# Kuo condensation

class KuoForm(Enum):
    PRODUCT = "product"
    SUM = "sum"


def cyclic_order_ok(r: Region, quad: Sequence[TriRef]) -> bool:
    """True if the four triangles touch the outer boundary in cyclic order.

    Either direction of travel is accepted; each triangle may touch at any of
    its boundary corners or edges, but the four chosen places must differ.
    """
    try:
        walk = boundary_cycle(r)
    except BoundaryError:
        return False
    size = 2 * len(walk)
    places = [sorted(boundary_positions(walk, t)) for t in quad]
    if any(not p for p in places):
        return False
    for choice in itertools.product(*places):
        if len(set(choice)) < 4:
            continue
        rel = [(p - choice[0]) % size for p in choice[1:]]
        if rel == sorted(rel) or rel == sorted(rel, reverse=True):
            return True
    return False


def kuo_precondition(r: Region, quad: Sequence[TriRef], form: KuoForm) -> None:
    if len(set(quad)) != 4:
        raise PreconditionError("the four triangles must be distinct")
    missing = [t for t in quad if t not in r]
    if missing:
        raise PreconditionError(f"{missing[0]!r} is not in the region")
    orients = [t.orient for t in quad]
    if form is KuoForm.PRODUCT and len(set(orients)) != 1:
        raise PreconditionError("product form needs four triangles of one orientation")
    if form is KuoForm.SUM and max(orients.count(o) for o in Orient) < 3:
        raise PreconditionError("sum form needs at least three triangles of one orientation")
    if not cyclic_order_ok(r, quad):
        raise PreconditionError("triangles do not touch the boundary in the stated cyclic order")


def check_kuo_four(
    r: Region,
    alpha: TriRef,
    beta: TriRef,
    gamma: TriRef,
    delta: TriRef,
    form: KuoForm,
    label: str = "",
    count: Callable[[Region], Fraction] = count_tilings,
) -> Report:
    """Kuo's condensation identities for four boundary triangles in cyclic order.

    Product form, pairing the crossing diagonals alpha-gamma and beta-delta:
        M(R-a-b) M(R-g-d) = M(R-a-g) M(R-b-d) - M(R-a-d) M(R-b-g)
    Sum form:
        M(R-a) M(R-b-g-d) + M(R-g) M(R-a-b-d) = M(R-b) M(R-a-g-d) + M(R-d) M(R-a-b-g)
    """
    quad = (alpha, beta, gamma, delta)
    kuo_precondition(r, quad, form)
    m = lambda *ts: count(r.without(ts))  # noqa: E731
    a, b, g, d = quad
    rep = Report()
    if form is KuoForm.PRODUCT:
        lhs = m(a, b) * m(g, d)
        rhs = m(a, g) * m(b, d) - m(a, d) * m(b, g)
        rep.add("kuo-product", label, lhs, rhs)
    else:
        lhs = m(a) * m(b, g, d) + m(g) * m(a, b, d)
        rhs = m(b) * m(a, g, d) + m(d) * m(a, b, g)
        rep.add("kuo-sum", label, lhs, rhs)
    return rep


# factorization, splitting, product identities

def check_factorization(r: Region, label: str = "", axis2: int | None = None) -> Report:
    if not is_balanced(r):
        raise PreconditionError("factorization needs a balanced region")
    try:
        split = factorization_split(r, axis2)
    except SplitError as exc:
        raise PreconditionError(str(exc)) from exc
    lhs = count_tilings(r)
    rhs = 2**split.k * count_tilings(split.rminus) * count_tilings(split.rplus)
    rep = Report()
    rep.add("factorization", f"{label} k={split.k}".strip(), lhs, rhs)
    return rep


def check_symmetric_product(a: int, b: int) -> bool:
    return P_minus(a, b) * P_vert(a, b) == macmahon_P(2 * a, b, b)


def check_splitting(r: Region, line: LatticeLine, label: str = "", per_tiling: bool = False) -> Report:
    """Region splitting along a lattice line, using the crossing count n of P."""
    p, q, n = split_along_line(r, line)
    rep = Report()
    total = count_tilings(r)
    params = f"{label} n={n}".strip()
    if n == 0:
        rep.add("splitting", params, total, count_tilings(p) * count_tilings(q))
    elif n < 0:
        rep.add("splitting", params, total, 0)
    else:
        rep.add("splitting-sum", params, total, crossing_sum(r, line, n))
    if per_tiling and n >= 0:
        crossings = {lozenges_crossing(t.lozenges, line) for t in enumerate_tilings(r)}
        rep.add("splitting-crossings", params, len(crossings - {n}), 0)
    return rep


def crossing_sum(r: Region, line: LatticeLine, n: int) -> Fraction:
    """Sum over n-subsets of crossing positions of M(P - S_P) M(Q - S_Q)."""
    p, q, _ = split_along_line(r, line)
    pairs = crossing_pairs(r, line)
    total = Fraction(0)
    for chosen in itertools.combinations(pairs, n):
        left = [s for s, _ in chosen]
        right = [t for _, t in chosen]
        if len(set(left)) < n or len(set(right)) < n:
            continue
        west = count_tilings(p.without(left))
        if west:
            total += west * count_tilings(q.without(right))
    return total


def cauchy_binet_check(core: Region, anchor: tuple[int, int], h: int, a: int, weighted: bool = False) -> Report:
    """M(R_z(a+1/2)) against the sum over the 2h crossing positions of the SE line.

    The line runs southeast from the top of z; P is its western side.  Needs
    a >= h so that the line leaves the tube through its southern side.
    """
    if a < h:
        raise PreconditionError(f"need a >= h, got a={a}, h={h}")
    region = tubey(TubeySpec(core, anchor, h, 2 * a + 1, weighted))
    x0, y0 = anchor
    line = LatticeLine(LineKind.DIAG, x0 + y0, -1)
    pairs = crossing_pairs(region, line)
    rep = Report()
    params = f"h={h} a={a} positions={len(pairs)} summands={_binom(len(pairs), h)}"
    _, _, n = split_along_line(region, line)
    if n != h:
        raise PreconditionError(f"crossing count {n} differs from the height {h}")
    rep.add("cauchy-binet", params, count_tilings(region), crossing_sum(region, line, h))
    return rep


def _binom(n: int, k: int) -> int:
    from math import comb

    return comb(n, k)


def check_forced_reduction(r: Region, label: str = "") -> Report:
    red = remove_forced(r)
    rep = Report()
    rep.add("forced-reduction", label, count_tilings(r), red.factor * count_tilings(red.region))
    return rep


# dented half-hexagon configurations for condensation

def _nw(k: int) -> TriRef:
    return TriRef(0, -k, Orient.UP)


def two_dent_configuration(a: int, b: int, u: Sequence[int]):
    """Region and quadruple turning the product form into a recurrence for V(a,b,n,u).

    Needs n >= 2 and 2 < u_1 < ... < u_n < b + 2n.  The region keeps the
    interior dents and leaves the two outer dent slots plus rows 2 and b+2n
    open; removing beta and gamma gives back V(a,b,n,u).
    """
    from .regions import V

    u = tuple(u)
    n = len(u)
    if n < 2 or not (2 < u[0] and u[-1] < b + 2 * n):
        raise PreconditionError("need n >= 2 and 2 < u_1, u_n < b + 2n")
    r = V(a, b, u[1:-1], n=n)
    return r, (_nw(2), _nw(u[0]), _nw(u[-1]), _nw(b + 2 * n))


def single_dent_configuration(a: int, b: int, u: int):
    """Region and quadruple for the sum form with one dent at row u, 2 < u < b+2.

    Three Up triangles sit on the western side and a Down triangle in the
    south corner.
    """
    from .regions import V

    if not 2 < u < b + 2:
        raise PreconditionError("need 2 < u < b + 2")
    r = V(a, b, (), n=1)
    gamma = TriRef(a + b - 1, -(2 * b + 1), Orient.DOWN)
    return r, (_nw(u), _nw(2), gamma, _nw(b + 2))


# half-shift and forced dents

def vplus_families(b: int, u: Sequence[int]):
    """The unweighted and weighted families a -> V+(a,b,n,u), V-bar+(a,b,n,u).

    When u_1 >= 2 these are tubey families over the core V(0,b,n,u) with
    h = b + n.  A dent in row 1 would sit where the tube goes, so those
    families are built directly from the half-hexagon builders.
    """
    from .poly import RegionFamily, TubeyFamily
    from .regions import V, Vplus, VplusBar

    u = tuple(u)
    h = b + len(u)
    if not u or u[0] >= 2:
        core = V(0, b, u)
        return TubeyFamily(core, (0, 0), h, False), TubeyFamily(core, (0, 0), h, True)
    return (
        RegionFamily(lambda a: Vplus(a, b, u), "Vplus"),
        RegionFamily(lambda a: VplusBar(a, b, u), "VplusBar"),
    )


def check_halfshift(fam_unweighted, fam_weighted, degree_hint: int | None = None, label: str = "") -> Report:
    """Weighted family equals the unweighted one shifted by -1/2, as polynomials.

    Both families are indexed so that a means doubled tube length 2a + 1.
    Interpolation failures propagate as InterpolationError.
    """
    from .poly import shift, tiling_polynomial

    g = tiling_polynomial(fam_unweighted, degree_hint)
    gbar = tiling_polynomial(fam_weighted, degree_hint)
    moved = shift(g.poly, Fraction(-1, 2))
    rep = Report()
    params = f"{label} deg={g.poly.degree}".strip()
    if g.heuristic or gbar.heuristic:
        params += " heuristic"
    # compare coefficientwise; each coefficient gets its own line
    size = max(len(moved.coeffs), len(gbar.poly.coeffs), 1)
    pad = lambda c: list(c) + [Fraction(0)] * (size - len(c))  # noqa: E731
    for i, (x, y) in enumerate(zip(pad(gbar.poly.coeffs), pad(moved.coeffs))):
        rep.add("halfshift", f"{params} coeff={i}", x, y)
    return rep


def check_forced_dents(a: int, b: int, u: Sequence[int]) -> Report:
    """A dent in row 2 or row b+2n forces lozenges that shrink the half-hexagon."""
    from .regions import V

    u = tuple(u)
    n = len(u)
    rep = Report()
    if not u:
        return rep
    m = count_tilings(V(a, b, u))
    if u[0] == 2:
        rest = tuple(x - 2 for x in u[1:])
        rep.add("forced-dent-top", f"a={a} b={b} u={list(u)}", m, count_tilings(V(a + 1, b, rest)))
    if u[-1] == b + 2 * n:
        rep.add("forced-dent-bottom", f"a={a} b={b} u={list(u)}", m, count_tilings(V(a, b + 1, u[:-1])))
    return rep
