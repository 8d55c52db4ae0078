import random
from fractions import Fraction

from hypothesis import strategies as st

from lozenge.lattice import Down, Orient, Region, TriRef, Up, adjacent, tri_key


def tri_strategy(lo=-6, hi=6):
    return st.builds(
        TriRef,
        st.integers(lo, hi),
        st.integers(lo, hi),
        st.sampled_from([Orient.UP, Orient.DOWN]),
    )


def grow_region(seed: int, size: int, start: TriRef = Up(0, 0)) -> Region:
    """A connected blob of ``size`` triangles grown at random from ``start``."""
    rng = random.Random(seed)
    cells = {start}
    while len(cells) < size:
        t = rng.choice(sorted(cells, key=tri_key))
        cells.add(rng.choice(adjacent(t)))
    return Region(cells)


@st.composite
def small_regions(draw, max_size=24, weighted=True):
    size = draw(st.integers(0, max_size))
    if size == 0:
        return Region(())
    r = grow_region(draw(st.integers(0, 10**6)), size)
    if not weighted:
        return r
    lozs = r.lozenges()
    picked = draw(st.lists(st.sampled_from(lozs), max_size=4, unique=True)) if lozs else []
    ws = draw(st.lists(st.sampled_from([Fraction(1, 2), Fraction(2), Fraction(3, 4)]),
                       min_size=len(picked), max_size=len(picked)))
    return r.with_weights(dict(zip(picked, ws)))


@st.composite
def balanced_regions(draw, max_pairs=10):
    """Unions of random lozenges grown edge to edge, so balanced but not always tileable."""
    rng = random.Random(draw(st.integers(0, 10**6)))
    pairs = draw(st.integers(1, max_pairs))
    cells = {Up(0, 0), Down(0, 0)}
    while len(cells) < 2 * pairs:
        t = rng.choice(sorted(cells, key=tri_key))
        s = rng.choice(adjacent(t))
        if s in cells:
            continue
        mate = rng.choice(adjacent(s))
        if mate in cells:
            continue
        cells |= {s, mate}
    return Region(cells)


def boundary_triangles(r: Region) -> list[TriRef]:
    from lozenge.lattice import boundary_cycle, boundary_positions

    walk = boundary_cycle(r)
    return [t for t in r.sorted_triangles() if boundary_positions(walk, t)]


def random_kuo_cases(seed: int, count: int, form):
    """Random dented hexagons with four boundary triangles in cyclic order.

    The product form gets a region with two surplus triangles of one
    orientation and four of those; the sum form gets a surplus of one and
    three surplus-side triangles plus one of the other orientation.
    """
    from lozenge.identities import KuoForm, PreconditionError, cyclic_order_ok, kuo_precondition
    from lozenge.lattice import boundary_cycle, boundary_positions
    from lozenge.regions import DentSpec, dented_hexagon

    rng = random.Random(seed)
    surplus = 2 if form is KuoForm.PRODUCT else 1
    out = []
    while len(out) < count:
        a, b, c = rng.randint(1, 3), rng.randint(0, 2), rng.randint(0, 2)
        t = rng.randint(surplus, 3)
        dents = t - surplus
        m = rng.randint(0, dents)
        if m > b + t or dents - m > c + t:
            continue
        u = tuple(sorted(rng.sample(range(1, b + t + 1), m)))
        v = tuple(sorted(rng.sample(range(1, c + t + 1), dents - m)))
        r = dented_hexagon(a, b, c, t, DentSpec(u, v))
        major = Orient.UP if r.imbalance() > 0 else Orient.DOWN
        edge = boundary_triangles(r)
        same = [x for x in edge if x.orient is major]
        other = [x for x in edge if x.orient is not major]
        if form is KuoForm.PRODUCT:
            if len(same) < 4:
                continue
            quad = rng.sample(same, 4)
        else:
            if len(same) < 3 or not other:
                continue
            quad = rng.sample(same, 3) + [rng.choice(other)]
        # put them in boundary order, with the odd one last for the sum form
        walk = boundary_cycle(r)
        quad.sort(key=lambda x: min(boundary_positions(walk, x)))
        if form is KuoForm.SUM:
            k = next(i for i, x in enumerate(quad) if x.orient is not major)
            quad = quad[k + 1:] + quad[:k + 1]
        if not cyclic_order_ok(r, quad):
            continue
        try:
            kuo_precondition(r, quad, form)
        except PreconditionError:
            continue
        out.append((r, tuple(quad)))
    return out


# a balanced core glued at (0,0) to a height-2 tube; not congruent to any
# half-hexagon, found by random search over small cores
IRREGULAR_CORE = Region([
    Down(-1, -2), Up(-1, -1), Down(-1, -1), Up(-1, 0),
    Down(0, -3), Up(0, -2), Down(1, -5), Up(1, -4),
])
