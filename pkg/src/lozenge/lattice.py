"""Triangular lattice model: unit triangles, lozenges, weighted regions.

Coordinates are sheared.  Lattice vertex ``(x, y)`` sits at the Euclidean
point ``(x + y/2, y*sqrt(3)/2)``.  ``Up(x, y)`` has corners ``(x, y)``,
``(x+1, y)``, ``(x, y+1)``; ``Down(x, y)`` has corners ``(x+1, y)``,
``(x, y+1)``, ``(x+1, y+1)``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum, IntEnum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple


class Orient(IntEnum):
    UP = 0
    DOWN = 1

    def flipped(self) -> "Orient":
        return Orient.DOWN if self is Orient.UP else Orient.UP

    @property
    def letter(self) -> str:
        return "U" if self is Orient.UP else "D"


class TriRef(NamedTuple):
    x: int
    y: int
    orient: Orient

    def __repr__(self) -> str:
        name = "Up" if self.orient is Orient.UP else "Down"
        return f"{name}({self.x},{self.y})"


def Up(x: int, y: int) -> TriRef:
    return TriRef(x, y, Orient.UP)


def Down(x: int, y: int) -> TriRef:
    return TriRef(x, y, Orient.DOWN)


def tri_key(t: TriRef) -> tuple[int, int, int]:
    """Sort key used everywhere determinism matters: (y, x, orient)."""
    return (t.y, t.x, int(t.orient))


def adjacent(t: TriRef) -> tuple[TriRef, TriRef, TriRef]:
    x, y, o = t
    if o is Orient.UP:
        return (Down(x, y), Down(x - 1, y), Down(x, y - 1))
    return (Up(x, y), Up(x + 1, y), Up(x, y + 1))


def corners(t: TriRef) -> tuple[tuple[int, int], ...]:
    """Corners in counterclockwise order."""
    x, y, o = t
    if o is Orient.UP:
        return ((x, y), (x + 1, y), (x, y + 1))
    return ((x + 1, y), (x + 1, y + 1), (x, y + 1))


Edge = tuple[tuple[int, int], tuple[int, int]]


def edge_key(p: tuple[int, int], q: tuple[int, int]) -> Edge:
    return (p, q) if p <= q else (q, p)


def edges(t: TriRef) -> tuple[Edge, Edge, Edge]:
    c = corners(t)
    return tuple(edge_key(c[i], c[(i + 1) % 3]) for i in range(3))  # type: ignore[return-value]


def shared_edge(s: TriRef, t: TriRef) -> Edge:
    common = set(edges(s)) & set(edges(t))
    if len(common) != 1:
        raise ValueError(f"{s!r} and {t!r} are not adjacent")
    return common.pop()


class LozOrient(Enum):
    VERTICAL = "V"
    LEFT = "L"
    RIGHT = "R"


class LozengeRef(NamedTuple):
    """Two adjacent triangles, the up-pointing one first."""

    up: TriRef
    down: TriRef

    @property
    def orient(self) -> LozOrient:
        dx = self.down.x - self.up.x
        dy = self.down.y - self.up.y
        if (dx, dy) == (0, -1):
            return LozOrient.VERTICAL
        if (dx, dy) == (-1, 0):
            return LozOrient.LEFT
        return LozOrient.RIGHT

    def triangles(self) -> tuple[TriRef, TriRef]:
        return (self.up, self.down)

    def __repr__(self) -> str:
        return f"Loz({self.up!r},{self.down!r})"


def lozenge(s: TriRef, t: TriRef) -> LozengeRef:
    if s.orient is t.orient or t not in adjacent(s):
        raise ValueError(f"{s!r} and {t!r} do not form a lozenge")
    return LozengeRef(s, t) if s.orient is Orient.UP else LozengeRef(t, s)


def _as_fraction(w) -> Fraction:
    if isinstance(w, float):
        raise TypeError("weights must be exact rationals")
    return Fraction(w)


class Region:
    """A finite set of unit triangles with a lozenge weight table.

    Lozenges absent from the weight table have weight 1; weight-1 entries are
    dropped so that equality is structural.
    """

    __slots__ = ("_tris", "_weights", "_hash")

    def __init__(
        self,
        triangles: Iterable[TriRef],
        weights: Mapping[LozengeRef, Fraction] | None = None,
    ) -> None:
        tris = frozenset(TriRef(int(t[0]), int(t[1]), Orient(t[2])) for t in triangles)
        table: dict[LozengeRef, Fraction] = {}
        for loz, w in (weights or {}).items():
            loz = lozenge(*loz)
            w = _as_fraction(w)
            if w <= 0:
                raise ValueError(f"weight of {loz!r} must be positive, got {w}")
            if loz.up not in tris or loz.down not in tris:
                raise ValueError(f"weighted lozenge {loz!r} is not inside the region")
            if w != 1:
                table[loz] = w
        self._tris = tris
        self._weights = table
        self._hash: int | None = None

    @property
    def triangles(self) -> frozenset[TriRef]:
        return self._tris

    @property
    def weights(self) -> Mapping[LozengeRef, Fraction]:
        return dict(self._weights)

    def weight(self, loz: LozengeRef) -> Fraction:
        return self._weights.get(loz, Fraction(1))

    def sorted_triangles(self) -> list[TriRef]:
        return sorted(self._tris, key=tri_key)

    def __len__(self) -> int:
        return len(self._tris)

    def __contains__(self, t: object) -> bool:
        return t in self._tris

    def __iter__(self) -> Iterator[TriRef]:
        return iter(self.sorted_triangles())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Region):
            return NotImplemented
        return self._tris == other._tris and self._weights == other._weights

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._tris, frozenset(self._weights.items())))
        return self._hash

    def __repr__(self) -> str:
        up, down = self.census()
        return f"Region({up} up, {down} down, {len(self._weights)} weighted)"

    def census(self) -> tuple[int, int]:
        up = sum(1 for t in self._tris if t.orient is Orient.UP)
        return up, len(self._tris) - up

    def imbalance(self) -> int:
        up, down = self.census()
        return up - down

    def neighbours(self, t: TriRef) -> list[TriRef]:
        return [s for s in adjacent(t) if s in self._tris]

    def lozenges(self) -> list[LozengeRef]:
        out = []
        for t in self.sorted_triangles():
            if t.orient is Orient.UP:
                out.extend(LozengeRef(t, s) for s in adjacent(t) if s in self._tris)
        return out

    def without(self, removed: Iterable[TriRef]) -> "Region":
        """Drop triangles; weights on lozenges that lose a member are discarded."""
        gone = set(removed)
        keep = self._tris - gone
        w = {l: v for l, v in self._weights.items() if l.up in keep and l.down in keep}
        return Region(keep, w)

    def restricted(self, tris: Iterable[TriRef]) -> "Region":
        keep = self._tris & frozenset(tris)
        return self.without(self._tris - keep)

    def union(self, other: "Region") -> "Region":
        w = dict(self._weights)
        w.update(other._weights)
        return Region(self._tris | other._tris, w)

    def with_weights(self, weights: Mapping[LozengeRef, Fraction]) -> "Region":
        w = dict(self._weights)
        w.update(weights)
        return Region(self._tris, w)

    def map(self, f) -> "Region":
        """Image under a triangle map that sends lozenges to lozenges."""
        w = {lozenge(f(l.up), f(l.down)): v for l, v in self._weights.items()}
        return Region((f(t) for t in self._tris), w)


@dataclass(frozen=True)
class Tiling:
    lozenges: tuple[LozengeRef, ...]
    weight: Fraction

    def covers(self) -> frozenset[TriRef]:
        return frozenset(t for l in self.lozenges for t in l)


def is_balanced(r: Region) -> bool:
    return r.imbalance() == 0


def tiling_weight(r: Region, lozenges: Iterable[LozengeRef]) -> Fraction:
    w = Fraction(1)
    for l in lozenges:
        w *= r.weight(l)
    return w


# symmetry operations

def reflect_tri_vertical(t: TriRef, s2: int) -> TriRef:
    x, y, o = t
    if o is Orient.UP:
        return Up(s2 - x - y - 1, y)
    return Down(s2 - x - y - 2, y)


def reflect_tri_horizontal(t: TriRef, rline2: int) -> TriRef:
    if rline2 % 2:
        raise ValueError("horizontal reflection needs a lattice row (even rline2)")
    r = rline2 // 2
    x, y, o = t
    if o is Orient.UP:
        return Down(x + y - r, 2 * r - y - 1)
    return Up(x + y + 1 - r, 2 * r - y - 1)


def reflect_vertical(r: Region, s2: int) -> Region:
    """Mirror across the Euclidean vertical line X = s2/2."""
    return r.map(lambda t: reflect_tri_vertical(t, s2))


def reflect_horizontal(r: Region, rline2: int) -> Region:
    """Mirror across the horizontal lattice row y = rline2/2."""
    return r.map(lambda t: reflect_tri_horizontal(t, rline2))


def translate(r: Region, dx: int, dy: int) -> Region:
    return r.map(lambda t: TriRef(t.x + dx, t.y + dy, t.orient))


def canonical_form(r: Region) -> Region:
    """Translate so that the least triangle by (x, y) sits at x = 0, y = 0."""
    if not r.triangles:
        return r
    x0, y0, _ = min(r.triangles)
    return translate(r, -x0, -y0)


def congruent_by_translation(r: Region, s: Region) -> bool:
    return canonical_form(r) == canonical_form(s)


# forced lozenges

@dataclass(frozen=True)
class ForcedReduction:
    region: Region
    factor: Fraction
    forced: frozenset[LozengeRef]
    untileable: bool = False


def remove_forced(r: Region) -> ForcedReduction:
    """Strip lozenges forced by triangles with a single free neighbour.

    Repeats to a fixed point, always acting on the least triangle by
    (y, x, orient).  A triangle left with no free neighbour makes the whole
    region untileable; the factor is then 0 and ``region`` holds what was left.
    """
    alive = set(r.triangles)
    degree = {t: sum(1 for s in adjacent(t) if s in alive) for t in alive}
    heap = [(tri_key(t), t) for t, d in degree.items() if d <= 1]
    heapq.heapify(heap)
    factor = Fraction(1)
    forced: set[LozengeRef] = set()
    untileable = False
    while heap:
        _, t = heapq.heappop(heap)
        if t not in alive:
            continue
        partners = [s for s in adjacent(t) if s in alive]
        if not partners:
            untileable = True
            break
        if len(partners) > 1:
            continue
        s = partners[0]
        loz = lozenge(t, s)
        forced.add(loz)
        factor *= r.weight(loz)
        for gone in (t, s):
            alive.discard(gone)
            for q in adjacent(gone):
                if q in alive:
                    degree[q] -= 1
                    if degree[q] <= 1:
                        heapq.heappush(heap, (tri_key(q), q))
    reduced = r.restricted(alive)
    if untileable:
        return ForcedReduction(reduced, Fraction(0), frozenset(forced), True)
    return ForcedReduction(reduced, factor, frozenset(forced))


# boundary walk

_DIRS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))  # counterclockwise


def _direction(p: tuple[int, int], q: tuple[int, int]) -> int:
    return _DIRS.index((q[0] - p[0], q[1] - p[1]))


class BoundaryError(ValueError):
    pass


def boundary_cycle(r: Region) -> list[tuple[int, int]]:
    """Vertices of the outer boundary, counterclockwise (region on the left).

    Pinch vertices appear once per visit.  Raises BoundaryError when the
    boundary is not a single closed walk (holes or several components).
    """
    directed = set()
    for t in r.triangles:
        c = corners(t)
        directed.update((c[i], c[(i + 1) % 3]) for i in range(3))
    outgoing: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for p, q in directed:
        if (q, p) not in directed:
            outgoing.setdefault(p, []).append(q)
    if not outgoing:
        raise BoundaryError("region has no boundary")
    total = sum(len(v) for v in outgoing.values())
    simple = [p for p, qs in outgoing.items() if len(qs) == 1]
    start = min(simple or outgoing)
    first = min(outgoing[start])
    walk = [start]
    used = {(start, first)}
    prev, here = start, first
    while here != start:
        walk.append(here)
        back = _direction(here, prev)
        options = [q for q in outgoing[here] if (here, q) not in used]
        if not options:
            raise BoundaryError("boundary walk got stuck")
        nxt = min(options, key=lambda q: (_direction(here, q) - back) % 6)
        used.add((here, nxt))
        prev, here = here, nxt
    if len(used) != total:
        raise BoundaryError("boundary is not a single closed walk")
    return walk


def boundary_positions(walk: list[tuple[int, int]], t: TriRef) -> set[int]:
    """Places where t touches the walk: 2i for vertex i, 2i+1 for edge i."""
    cs = set(corners(t))
    es = set(edges(t))
    n = len(walk)
    out = set()
    for i, p in enumerate(walk):
        if p in cs:
            out.add(2 * i)
        if edge_key(p, walk[(i + 1) % n]) in es:
            out.add(2 * i + 1)
    return out
