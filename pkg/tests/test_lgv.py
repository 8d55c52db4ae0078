from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lozenge.formulas import P_vert, gen_binomial
from lozenge.identities import cauchy_binet_check
from lozenge.lgv import (
    determinant_exact,
    lattice_paths,
    path_matrix_V,
    path_matrix_Vplus,
    path_matrix_Vplus_at,
    path_matrix_VplusBar,
    v_sources,
    vplus_entry_poly_point,
    vplusbar_entry,
)
from lozenge.oracle import count_tilings
from lozenge.poly import interpolate
from lozenge.regions import V, Vplus, VplusBar, all_dent_vectors, v_family_core


def grid(max_b=3, max_n=2):
    for b in range(max_b + 1):
        for n in range(max_n + 1):
            for u in all_dent_vectors(b + 2 * n, n):
                yield b, u


def cofactor_det(m):
    if not m:
        return Fraction(1)
    total = Fraction(0)
    for j, x in enumerate(m[0]):
        if x:
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            total += (-1) ** j * x * cofactor_det(minor)
    return total


def test_single_row_matrices():
    for a in range(5):
        m = path_matrix_V(a, 1, ())
        assert m.entries == ((Fraction(1),),)
        assert m.det() == 1 == P_vert(a, 1)
    bar = path_matrix_VplusBar(1, 1, ())
    assert bar.entries == ((Fraction(3, 2),),)


def test_empty_matrix():
    m = path_matrix_Vplus(3, 0, ())
    assert m.size == 0
    assert m.det() == 1


def test_sources_and_sinks():
    m = path_matrix_V(2, 3, (3, 5))
    assert set(m.sources) == {(0, 2), (1, 1), (2, 0), (0, 7), (0, 5)}
    assert list(m.sources) == v_sources(3, (3, 5))
    assert v_sources(3, (3, 5)) == [(2, 0), (1, 1), (0, 2), (0, 5), (0, 7)]
    assert m.sinks == ((6, 0), (5, 2), (4, 4), (3, 6), (2, 8))
    assert path_matrix_Vplus(2, 3, (3, 5)).sinks == ((6, 1), (5, 3), (4, 5), (3, 7), (2, 9))


@pytest.mark.parametrize("a", range(4))
def test_entries_have_the_two_closed_forms(a):
    for b, u in grid():
        n = len(u)
        m = path_matrix_V(a, b, u)
        for row, src in zip(m.entries, m.sources):
            for j, x in enumerate(row, start=1):
                if src in [(i - 1, b - i) for i in range(1, b + 1)]:
                    i = src[0] + 1
                    want = gen_binomial(a + n + j - 1, 2 * j - 2 - b + i)
                else:
                    ui = 2 * b + 2 * n - src[1]
                    want = gen_binomial(a - b - n - 2 + j + ui, 2 * j - 2 - 2 * b - 2 * n + ui)
                if want and x:
                    assert x == want
                else:
                    assert x == 0 or want == x


@pytest.mark.parametrize("a", range(4))
def test_determinants_count_half_hexagons(a):
    for b, u in grid():
        for builder, region in [
            (path_matrix_V, V),
            (path_matrix_Vplus, Vplus),
            (path_matrix_VplusBar, VplusBar),
        ]:
            d = builder(a, b, u).det()
            assert d >= 0
            assert d == count_tilings(region(a, b, u)), (builder.__name__, a, b, u)


def test_weak_half_is_a_shifted_strict_half():
    for a in range(4):
        for b, u in grid():
            lhs = path_matrix_Vplus(a, b, u).det()
            assert lhs == path_matrix_V(a, b + 1, tuple(x + 1 for x in u)).det()


def test_lattice_paths():
    assert lattice_paths(2, 2) == 6
    assert lattice_paths(-1, 3) == 0
    assert lattice_paths(3, -1) == 0


@pytest.mark.parametrize("k1", range(-2, 4))
@pytest.mark.parametrize("k2", range(0, 4))
def test_weighted_entry_keeps_the_leading_coefficient(k1, k2):
    xs = range(k2 + 2)
    bar = interpolate([(x, vplusbar_entry(x, k1, k2)) for x in xs])
    plain = interpolate([(x, vplus_entry_poly_point(x, k1, k2)) for x in xs])
    assert bar.degree == plain.degree == k2
    assert bar.leading() == plain.leading()


def test_weighted_matrix_is_the_plain_one_shifted_by_a_half():
    samples = [Fraction(k, 3) for k in range(-3, 10)]
    for b, u in grid():
        for a in samples:
            lhs = path_matrix_VplusBar(a, b, u).det()
            assert lhs == path_matrix_Vplus_at(a - Fraction(1, 2), b, u).det()


def test_determinant_examples():
    eye = [[int(i == j) for j in range(5)] for i in range(5)]
    assert determinant_exact(eye) == 1
    assert determinant_exact([[1, 2, 3], [4, 5, 6], [1, 2, 3]]) == 0
    assert determinant_exact([[Fraction(1, 2), 1], [1, 1]]) == Fraction(-1, 2)
    with pytest.raises(ValueError):
        determinant_exact([[1, 2]])


@settings(max_examples=100)
@given(st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_determinant_matches_cofactor_expansion(m):
    want = cofactor_det([[Fraction(x) for x in row] for row in m])
    assert determinant_exact(m) == want
    halves = [[Fraction(x, 2) for x in row] for row in m]
    assert determinant_exact(halves) == want / 2 ** len(m)


@pytest.mark.parametrize("b,u", [(1, ()), (0, (2,)), (2, ()), (1, (2,)), (0, (2, 4))])
@pytest.mark.parametrize("weighted", [False, True])
def test_cauchy_binet_split(b, u, weighted):
    spec = v_family_core(b, u)
    for a in (spec.h, spec.h + 1):
        rep = cauchy_binet_check(spec.core, spec.anchor, spec.h, a, weighted)
        assert rep.ok, rep.text()
        assert f"summands={ {1: 2, 2: 6}[spec.h] }" in rep.text()
