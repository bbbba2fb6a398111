from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from clusterbound.counting import (
    convolve, evaluate, independence_profile, matching_profile, matching_profile_direct, poly_power, ratio_bounds,
)
from clusterbound.graphs import DisjointCopies, clique, complete_bipartite, cycle, disjoint_union, line_graph, petersen

from conftest import brute_independent_counts, brute_matching_counts
from test_graphs import graphs


@settings(max_examples=80, deadline=None)
@given(graphs(11))
def test_profiles_match_brute_force(g):
    assert list(independence_profile(g).coeffs) == brute_independent_counts(g)
    assert list(matching_profile(g).coeffs) == brute_matching_counts(g)
    assert matching_profile_direct(g).coeffs == matching_profile(g).coeffs


def test_known_profiles():
    assert independence_profile(cycle(4)).coeffs == (1, 4, 2)
    assert independence_profile(cycle(8))[4] == 2
    assert independence_profile(disjoint_union([cycle(4), cycle(4)]))[4] == 4
    assert matching_profile(clique(4)).coeffs == (1, 6, 3)
    assert matching_profile(complete_bipartite(3)).coeffs == (1, 9, 18, 6)
    assert independence_profile(petersen()).coeffs == (1, 10, 30, 30, 5)


def test_disjoint_copies_profile_is_power():
    base = independence_profile(cycle(5)).coeffs
    big = independence_profile(DisjointCopies(cycle(5), 40), k_max=6)
    assert list(big.coeffs) == poly_power(base, 40, 6)
    small = independence_profile(DisjointCopies(cycle(5), 3))
    assert small.coeffs == independence_profile(disjoint_union([cycle(5)] * 3)).coeffs


def test_matching_equals_independence_of_line_graph(small_corpus):
    for g in small_corpus:
        assert matching_profile_direct(g).coeffs == independence_profile(line_graph(g)).coeffs


def test_evaluate():
    p = matching_profile(complete_bipartite(3))
    assert evaluate(p, 1) == 34
    assert evaluate(p, Fraction(1, 2)) == 1 + Fraction(9, 2) + Fraction(18, 4) + Fraction(6, 8)


def test_convolve_truncation():
    assert convolve([1, 1], [1, 1], k_max=1) == [1, 2]
    assert poly_power([1, 1], 5) == [1, 5, 10, 10, 5, 1]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 3))
def test_ratio_bounds_hold(t):
    for g in [petersen(), complete_bipartite(4), cycle(9)]:
        d = max(g.degrees())
        if g.n <= (d + 1) * t:
            with pytest.raises(ValueError):
                ratio_bounds(g.n, d, t)
            continue
        prof = independence_profile(g)
        if prof[t + 1] == 0:
            continue
        rb = ratio_bounds(g.n, d, t)
        assert rb.lower <= Fraction(prof[t], prof[t + 1]) <= rb.upper
