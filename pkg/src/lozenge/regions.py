"""Constructors for the named region families and their symmetric splits.

Anchors: hexagons and half-hexagons put the west end of the north side at the
origin and extend south (negative y).  A tube puts the top of its western
zigzag at the origin.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .lattice import (
    Down,
    LozOrient,
    LozengeRef,
    Orient,
    Region,
    TriRef,
    Up,
    adjacent,
    edge_key,
    edges,
    reflect_vertical,
    tri_key,
    translate,
)

HALF = Fraction(1, 2)

# unit steps of the six lattice directions
EAST, SOUTHEAST, SOUTHWEST = (1, 0), (1, -1), (0, -1)
WEST, NORTHWEST, NORTHEAST = (-1, 0), (-1, 1), (0, 1)


class DentError(ValueError):
    pass


def _check_dents(seq: Sequence[int], top: int, label: str) -> tuple[int, ...]:
    seq = tuple(int(s) for s in seq)
    if any(s < 1 or s > top for s in seq):
        raise DentError(f"{label} dents {list(seq)} must lie in 1..{top}")
    if any(p >= q for p, q in zip(seq, seq[1:])):
        raise DentError(f"{label} dents {list(seq)} must be strictly increasing")
    return seq


def polygon_region(vertices: Sequence[tuple[int, int]]) -> Region:
    """Triangles whose centroid lies inside a lattice polygon.

    Centroids never sit on a lattice line, so a crossing-number test in
    sheared coordinates (scaled by 3) is exact.
    """
    poly = [(3 * x, 3 * y) for x, y in vertices]
    xs = [x for x, _ in vertices]
    ys = [y for _, y in vertices]
    out = []
    for y in range(min(ys) - 1, max(ys) + 1):
        for x in range(min(xs) - abs(max(ys) - min(ys)) - 1, max(xs) + abs(max(ys) - min(ys)) + 1):
            for o, off in ((Orient.UP, 1), (Orient.DOWN, 2)):
                if _inside(poly, 3 * x + off, 3 * y + off):
                    out.append(TriRef(x, y, o))
    return Region(out)


def _inside(poly, px: int, py: int) -> bool:
    hit = False
    n = len(poly)
    for i in range(n):
        (x1, y1), (x2, y2) = poly[i], poly[(i + 1) % n]
        if (y1 > py) != (y2 > py):
            # x-coordinate of the crossing compared without division
            lhs = (px - x1) * (y2 - y1)
            rhs = (x2 - x1) * (py - y1)
            if (lhs < rhs) == (y2 > y1):
                hit = not hit
    return hit


def hexagon_vertices(sides: Sequence[int]) -> list[tuple[int, int]]:
    """Walk the six sides clockwise from the west end of the north side."""
    steps = (EAST, SOUTHEAST, SOUTHWEST, WEST, NORTHWEST, NORTHEAST)
    pts = [(0, 0)]
    for (dx, dy), n in zip(steps, sides):
        x, y = pts[-1]
        pts.append((x + n * dx, y + n * dy))
    if pts[-1] != (0, 0):
        raise ValueError(f"side lengths {list(sides)} do not close up")
    return pts[:-1]


def semiregular_hexagon(a: int, b: int, c: int) -> Region:
    """North side a, then clockwise b, c, a, b, c."""
    return polygon_region(hexagon_vertices((a, b, c, a, b, c)))


def ne_dent(a: int, u: int) -> TriRef:
    """The u-th border triangle on the northeast side, counted from the north."""
    return Up(a + u - 1, -u)


def nw_dent(v: int) -> TriRef:
    """The v-th border triangle on the northwest side, counted from the north."""
    return Up(0, -v)


@dataclass(frozen=True)
class DentSpec:
    u: tuple[int, ...] = ()
    v: tuple[int, ...] = ()


def dented_hexagon(a: int, b: int, c: int, t: int, d: DentSpec | None = None) -> Region:
    """Clockwise sides a, b+t, c, a+t, b, c+t from the north, with dents."""
    d = d or DentSpec()
    u = _check_dents(d.u, b + t, "northeast")
    v = _check_dents(d.v, c + t, "northwest")
    hexagon = polygon_region(hexagon_vertices((a, b + t, c, a + t, b, c + t)))
    holes = [ne_dent(a, ui) for ui in u] + [nw_dent(vj) for vj in v]
    return hexagon.without(holes)


# half-hexagons

class Variant(Enum):
    V = "V"
    VPLUS = "Vplus"
    VPLUS_BAR = "VplusBar"


@dataclass(frozen=True)
class HalfHexSpec:
    """Half of H_{2a,b,b,2n,u,u}.

    ``slots`` overrides n when fewer than n dents are cut (the unbalanced
    parent regions used for condensation); by default n = len(u).
    """

    a: int
    b: int
    u: tuple[int, ...] = ()
    variant: Variant = Variant.V
    slots: int | None = None

    @property
    def n(self) -> int:
        return len(self.u) if self.slots is None else self.slots


def doubled_centre_x(t: TriRef) -> int:
    """Twice the Euclidean x-coordinate of the centroid."""
    return 2 * t.x + t.y + (1 if t.orient is Orient.UP else 2)


def symmetric_dented_hexagon(apar: int, b: int, u: Sequence[int], n: int | None = None) -> Region:
    """H_{apar,b,b,2n,u,u}; its vertical axis is X = apar/2."""
    u = tuple(u)
    n = len(u) if n is None else n
    return dented_hexagon(apar, b, b, 2 * n, DentSpec(u, u))


def axis_vertical_lozenges(r: Region, s2: int) -> list[LozengeRef]:
    """Vertical lozenges of r whose doubled centre x equals s2 (axis X = s2/2)."""
    out = []
    for t in r.sorted_triangles():
        if t.orient is Orient.UP and doubled_centre_x(t) == s2:
            below = Down(t.x, t.y - 1)
            if below in r:
                out.append(LozengeRef(t, below))
    return out


def half_hexagon(spec: HalfHexSpec) -> Region:
    a, b, u, n = spec.a, spec.b, spec.u, spec.n
    _check_dents(u, b + 2 * n, "half-hexagon")
    whole = symmetric_dented_hexagon(2 * a, b, u, n)
    axis = 2 * a  # doubled centroid x on the symmetry axis
    if spec.variant is Variant.V:
        return whole.restricted(t for t in whole.triangles if doubled_centre_x(t) < axis)
    plus = whole.restricted(t for t in whole.triangles if doubled_centre_x(t) <= axis)
    if spec.variant is Variant.VPLUS:
        return plus
    return plus.with_weights({l: HALF for l in axis_vertical_lozenges(plus, axis)})


def V(a: int, b: int, u: Sequence[int] = (), n: int | None = None) -> Region:
    return half_hexagon(HalfHexSpec(a, b, tuple(u), Variant.V, n))


def Vplus(a: int, b: int, u: Sequence[int] = (), n: int | None = None) -> Region:
    return half_hexagon(HalfHexSpec(a, b, tuple(u), Variant.VPLUS, n))


def VplusBar(a: int, b: int, u: Sequence[int] = (), n: int | None = None) -> Region:
    return half_hexagon(HalfHexSpec(a, b, tuple(u), Variant.VPLUS_BAR, n))


# tubes

def _band_index_tri(k: int, y: int) -> TriRef:
    # k-th triangle from the west in row y: Up(x, y) is 2x, Down(x, y) is 2x + 1
    return Up(k // 2, y) if k % 2 == 0 else Down(k // 2, y)


def tube(len2: int, h: int) -> Region:
    """The tube of length len2/2 and height h.

    Its western zigzag z starts at the origin and takes 2h unit steps,
    alternately southwest and southeast.  Each of the 2h rows holds len2
    triangles, so the tube has 2*h*len2 of them.
    """
    if len2 < 0 or h < 0:
        raise ValueError("tube length and height must be non-negative")
    out = []
    for j in range(1, 2 * h + 1):
        out.extend(_band_index_tri(k, -j) for k in range(j - 1, j - 1 + len2))
    return Region(out)


def tube_east_edges(len2: int, h: int) -> set:
    """Edges of the tube's eastern zigzag (z itself when len2 = 0)."""
    out = set()
    for j in range(1, 2 * h + 1):
        t = _band_index_tri(j - 2 + len2, -j)
        east = Down(t.x, t.y) if t.orient is Orient.UP else Up(t.x + 1, t.y)
        out.add((set(edges(t)) & set(edges(east))).pop())
    return out


def zigzag_west_edges(h: int) -> set:
    return tube_east_edges(0, h)


@dataclass(frozen=True)
class TubeySpec:
    core: Region
    anchor: tuple[int, int]
    h: int
    len2: int
    weighted: bool = False


class OverlapError(ValueError):
    pass


def _outer_edges(loz: LozengeRef) -> set:
    a, b = set(edges(loz.up)), set(edges(loz.down))
    return a ^ b


def tubey(spec: TubeySpec) -> Region:
    """Core glued to a tube along the zigzag whose top is ``anchor``."""
    x0, y0 = spec.anchor
    piece = translate(tube(spec.len2, spec.h), x0, y0)
    clash = spec.core.triangles & piece.triangles
    if clash:
        first = min(clash, key=tri_key)
        raise OverlapError(f"core and tube share {len(clash)} triangles, e.g. {first!r}")
    glued = spec.core.union(piece)
    if not spec.weighted:
        return glued
    east = {
        edge_key((p[0] + x0, p[1] + y0), (q[0] + x0, q[1] + y0))
        for p, q in tube_east_edges(spec.len2, spec.h)
    }
    half = {}
    for loz in glued.lozenges():
        if loz.orient is LozOrient.VERTICAL and len(_outer_edges(loz) & east) == 2:
            half[loz] = glued.weight(loz) * HALF
    return glued.with_weights(half)


def v_family_core(b: int, u: Sequence[int]) -> TubeySpec:
    """V(0,b,n,u) as a tubey core; its zigzag starts at the origin."""
    return TubeySpec(V(0, b, u), (0, 0), b + len(u), 0)


# symmetric splits

class SplitError(ValueError):
    pass


def vertical_axis(r: Region) -> int:
    """Doubled x of the vertical mirror of r, or SplitError if there is none."""
    if not r.triangles:
        raise SplitError("empty region has no distinguished axis")
    ds = [doubled_centre_x(t) for t in r.triangles]
    total = min(ds) + max(ds)
    if total % 2:
        raise SplitError("region is not vertically symmetric")
    s2 = total // 2
    if reflect_vertical(r, s2) != r:
        raise SplitError("region is not vertically symmetric")
    return s2


@dataclass(frozen=True)
class FactorSplit:
    rminus: Region
    rplus: Region
    k: int
    axis2: int
    labels: tuple[tuple[TriRef, TriRef], ...] = field(default=())


def _halve_axis(r: Region, s2: int) -> Region:
    return r.with_weights({l: r.weight(l) * HALF for l in axis_vertical_lozenges(r, s2)})


def factorization_split(r: Region, axis2: int | None = None) -> FactorSplit:
    if axis2 is None:
        s2 = vertical_axis(r)
    elif reflect_vertical(r, axis2) != r:
        raise SplitError(f"region is not symmetric about X = {Fraction(axis2, 2)}")
    else:
        s2 = axis2
    on_axis = sorted(
        (t for t in r.triangles if doubled_centre_x(t) == s2),
        key=lambda t: (-t.y, -int(t.orient)),
    )
    if len(on_axis) % 2:
        raise SplitError(f"odd number ({len(on_axis)}) of triangles on the axis")
    pairs = tuple((on_axis[i], on_axis[i + 1]) for i in range(0, len(on_axis), 2))
    minus = {t for t in r.triangles if doubled_centre_x(t) < s2}
    for a_i, b_i in pairs:
        if a_i.orient is Orient.DOWN:
            minus.add(a_i)
        if b_i.orient is Orient.UP:
            minus.add(b_i)
    rminus = _halve_axis(r.restricted(minus), s2)
    rplus = _halve_axis(r.restricted(r.triangles - minus), s2)
    return FactorSplit(rminus, rplus, len(pairs), s2, pairs)


# lattice-line splits

class LineKind(Enum):
    ROW = "row"    # y = c, horizontal
    COL = "col"    # x = c, running northeast
    DIAG = "diag"  # x + y = c, running southeast


@dataclass(frozen=True)
class LatticeLine:
    """A lattice line; ``p_side`` picks P: +1 for the side of larger coordinate."""

    kind: LineKind
    c: int
    p_side: int = 1


def line_side(t: TriRef, line: LatticeLine) -> int:
    lo = {
        LineKind.ROW: t.y,
        LineKind.COL: t.x,
        LineKind.DIAG: t.x + t.y + (0 if t.orient is Orient.UP else 1),
    }[line.kind]
    return 1 if lo >= line.c else -1


def crossing_pairs(r: Region, line: LatticeLine) -> list[tuple[TriRef, TriRef]]:
    """Adjacent (P-triangle, Q-triangle) pairs straddling the line, south to north."""
    out = []
    for t in r.sorted_triangles():
        if line_side(t, line) != line.p_side:
            continue
        for s in adjacent(t):
            if s in r and line_side(s, line) != line.p_side:
                out.append((t, s))
    return out


class LineSplitError(ValueError):
    pass


def split_along_line(r: Region, line: LatticeLine) -> tuple[Region, Region, int]:
    p = r.restricted(t for t in r.triangles if line_side(t, line) == line.p_side)
    q = r.restricted(r.triangles - p.triangles)
    pairs = crossing_pairs(r, line)
    kinds = {t.orient for t, _ in pairs}
    if len(kinds) > 1:
        raise LineSplitError("P has triangles of both orientations along the line")
    o = kinds.pop() if kinds else Orient.UP
    up, down = p.census()
    n = up - down if o is Orient.UP else down - up
    return p, q, n


def lozenges_crossing(tiling_lozenges, line: LatticeLine) -> int:
    return sum(1 for l in tiling_lozenges if line_side(l.up, line) != line_side(l.down, line))


def all_dent_vectors(top: int, n: int):
    """Strictly increasing n-tuples from 1..top."""
    from itertools import combinations

    return combinations(range(1, top + 1), n)

