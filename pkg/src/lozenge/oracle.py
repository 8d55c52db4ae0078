"""Brute-force ground truth: weighted tiling counts by exhaustive search.

The search always extends the uncovered triangle that is least by
(y, x, orient).  ``count_tilings`` caches results keyed on the uncovered set,
which keeps desk-scale sweeps fast; ``memo=False`` gives the plain
backtracking count with forced-move propagation, used to cross-check it.
"""

from __future__ import annotations

import os
import sys
from fractions import Fraction
from typing import Iterator

from .lattice import (
    LozengeRef,
    Region,
    Tiling,
    adjacent,
    lozenge,
    reflect_tri_horizontal,
    reflect_tri_vertical,
    reflect_horizontal,
    reflect_vertical,
    tri_key,
)

DEFAULT_ENUM_LIMIT = 60


class EnumerationLimitError(ValueError):
    pass


class NotSymmetricError(ValueError):
    pass


def enum_limit() -> int:
    raw = os.environ.get("TILE_ENUM_LIMIT")
    return int(raw) if raw else DEFAULT_ENUM_LIMIT


class _Indexed:
    """Triangles numbered in (y, x, orient) order with partner tables."""

    def __init__(self, r: Region) -> None:
        self.tris = r.sorted_triangles()
        index = {t: i for i, t in enumerate(self.tris)}
        self.partners: list[list[tuple[int, Fraction, LozengeRef]]] = []
        for t in self.tris:
            row = []
            for s in sorted((s for s in adjacent(t) if s in index), key=tri_key):
                loz = lozenge(t, s)
                row.append((index[s], r.weight(loz), loz))
            self.partners.append(row)
        self.full = (1 << len(self.tris)) - 1


def _count_memo(ix: _Indexed) -> Fraction:
    cache: dict[int, Fraction] = {0: Fraction(1)}
    partners = ix.partners

    def go(mask: int) -> Fraction:
        hit = cache.get(mask)
        if hit is not None:
            return hit
        low = mask & -mask
        i = low.bit_length() - 1
        total = Fraction(0)
        for j, w, _ in partners[i]:
            if mask >> j & 1:
                sub = go(mask & ~low & ~(1 << j))
                if sub:
                    total += w * sub
        cache[mask] = total
        return total

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * len(ix.tris) + 100))
    try:
        return go(ix.full)
    finally:
        sys.setrecursionlimit(limit)


def _propagate(ix: _Indexed, mask: int, chosen: list[int], weight: Fraction):
    """Commit forced lozenges; returns (mask, weight) or None at a dead end."""
    partners = ix.partners
    while True:
        progress = False
        m = mask
        while m:
            low = m & -m
            i = low.bit_length() - 1
            m ^= low
            free = [(j, w, k) for k, (j, w, _) in enumerate(partners[i]) if mask >> j & 1]
            if not free:
                return None
            if len(free) == 1:
                j, w, k = free[0]
                mask &= ~low & ~(1 << j)
                m &= ~(1 << j)
                chosen.append((i, k))
                weight *= w
                progress = True
        if not progress:
            return mask, weight


def _search(ix: _Indexed) -> Iterator[tuple[list[tuple[int, int]], Fraction]]:
    """Depth-first search yielding (choices, weight) for each tiling."""
    partners = ix.partners

    def go(mask: int, chosen: list, weight: Fraction):
        state = _propagate(ix, mask, chosen, weight)
        if state is None:
            return
        mask, weight = state
        if mask == 0:
            yield list(chosen), weight
            return
        low = mask & -mask
        i = low.bit_length() - 1
        for k, (j, w, _) in enumerate(partners[i]):
            if mask >> j & 1:
                mark = len(chosen)
                chosen.append((i, k))
                yield from go(mask & ~low & ~(1 << j), chosen, weight * w)
                del chosen[mark:]

    yield from go(ix.full, [], Fraction(1))


def count_tilings(r: Region, memo: bool = True) -> Fraction:
    """Weighted number of lozenge tilings of ``r``."""
    if r.imbalance() != 0:
        return Fraction(0)
    if not r.triangles:
        return Fraction(1)
    ix = _Indexed(r)
    if memo:
        return _count_memo(ix)
    total = Fraction(0)
    for _, w in _search(ix):
        total += w
    return total


def enumerate_tilings(r: Region, limit: int | None = None) -> Iterator[Tiling]:
    """All tilings in deterministic search order."""
    cap = enum_limit() if limit is None else limit
    if len(r) > cap:
        raise EnumerationLimitError(
            f"region has {len(r)} triangles, enumeration limit is {cap}"
        )
    if r.imbalance() != 0:
        return iter(())
    ix = _Indexed(r)

    def gen() -> Iterator[Tiling]:
        for chosen, w in _search(ix):
            loz = sorted(
                (ix.partners[i][k][2] for i, k in chosen),
                key=lambda l: (tri_key(l.up), tri_key(l.down)),
            )
            yield Tiling(tuple(loz), w)

    return gen()


def is_tileable(r: Region) -> bool:
    if r.imbalance() != 0:
        return False
    if not r.triangles:
        return True
    ix = _Indexed(r)
    dead: set[int] = set()

    # depth-first, stopping at the first tiling; uncovered sets already
    # shown to be untileable are remembered
    def go(mask: int) -> bool:
        if mask == 0:
            return True
        if mask in dead:
            return False
        low = mask & -mask
        i = low.bit_length() - 1
        for j, _, _ in ix.partners[i]:
            if mask >> j & 1 and go(mask & ~low & ~(1 << j)):
                return True
        dead.add(mask)
        return False

    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * len(ix.tris) + 100))
    try:
        return go(ix.full)
    finally:
        sys.setrecursionlimit(old)


def _fixed_count(r: Region, image, limit: int | None) -> Fraction:
    total = Fraction(0)
    for tiling in enumerate_tilings(r, limit):
        lozs = set(tiling.lozenges)
        if all(lozenge(image(l.up), image(l.down)) in lozs for l in tiling.lozenges):
            total += tiling.weight
    return total


def _orbit_count(r: Region, image) -> Fraction:
    """Exact cover of r by mirror orbits of lozenges.

    A fixed tiling is a union of orbits {l, image(l)}; orbits whose two
    lozenges overlap without coinciding can never occur.
    """
    if r.imbalance() != 0:
        return Fraction(0)
    tris = r.sorted_triangles()
    index = {t: i for i, t in enumerate(tris)}
    found: dict[int, Fraction] = {}
    for loz in r.lozenges():
        twin = lozenge(image(loz.up), image(loz.down))
        cells = {loz.up, loz.down, twin.up, twin.down}
        if twin == loz:
            w = r.weight(loz)
        elif len(cells) == 4:
            w = r.weight(loz) * r.weight(twin)
        else:
            continue
        bits = 0
        for t in cells:
            bits |= 1 << index[t]
        found[bits] = w  # each orbit is met once from each of its lozenges
    pieces: list[list[tuple[int, Fraction]]] = [[] for _ in tris]
    for bits in sorted(found):
        pieces[(bits & -bits).bit_length() - 1].append((bits, found[bits]))
    cache: dict[int, Fraction] = {0: Fraction(1)}

    def go(mask: int) -> Fraction:
        hit = cache.get(mask)
        if hit is not None:
            return hit
        i = (mask & -mask).bit_length() - 1
        total = Fraction(0)
        for bits, w in pieces[i]:
            if bits & mask == bits:
                sub = go(mask & ~bits)
                if sub:
                    total += w * sub
        cache[mask] = total
        return total

    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * len(tris) + 100))
    try:
        return go((1 << len(tris)) - 1)
    finally:
        sys.setrecursionlimit(old)


def _symmetric(r: Region, image, method: str, limit: int | None) -> Fraction:
    if method == "filter":
        return _fixed_count(r, image, limit)
    if method == "orbit":
        return _orbit_count(r, image)
    raise ValueError(f"method must be 'orbit' or 'filter', got {method!r}")


def count_symmetric_vertical(
    r: Region, axis2: int, limit: int | None = None, method: str = "orbit"
) -> Fraction:
    """Weighted count of tilings fixed by the mirror X = axis2/2.

    ``method="filter"`` enumerates every tiling and keeps the fixed ones
    (bounded by the enumeration limit); ``"orbit"`` covers the region by
    mirror-closed pieces directly.
    """
    if reflect_vertical(r, axis2) != r:
        raise NotSymmetricError(f"region is not symmetric about X = {Fraction(axis2, 2)}")
    return _symmetric(r, lambda t: reflect_tri_vertical(t, axis2), method, limit)


def count_symmetric_horizontal(
    r: Region, axis2: int, limit: int | None = None, method: str = "orbit"
) -> Fraction:
    """Weighted count of tilings fixed by the mirror across row axis2/2."""
    if axis2 % 2 or reflect_horizontal(r, axis2) != r:
        raise NotSymmetricError(f"region is not symmetric about row {Fraction(axis2, 2)}")
    return _symmetric(r, lambda t: reflect_tri_horizontal(t, axis2), method, limit)
