import itertools
from fractions import Fraction

import pytest

from clusterbound.catalog import SmallGraph, default_catalog
from clusterbound.census import (
    contraction_decompose, density_gap, density_t, hom_count, inj_count, quotient, set_partitions, sub_count,
    tau_gap,
)
from clusterbound.graphs import DisjointCopies, clique, complete_bipartite, cycle, heawood, path, petersen
from clusterbound.corpus import connected_cubic_graphs, regular_corpus


def brute_hom(f, g, loops=False, injective=False):
    fe = f.edges()
    total = 0
    for phi in itertools.product(range(g.n), repeat=len(f.adj)):
        if injective and len(set(phi)) != len(phi):
            continue
        if all((loops and phi[u] == phi[v]) or g.has_edge(phi[u], phi[v]) for u, v in fe):
            total += 1
    return total


@pytest.mark.parametrize("j", [1, 2, 3, 4])
def test_counts_match_brute_force(j):
    targets = [cycle(5), complete_bipartite(2), petersen()] if j < 4 else [cycle(5), clique(4)]
    for cls in default_catalog().classes(j):
        for g in targets:
            f = cls.graph
            assert hom_count(f, g) == brute_hom(f, g)
            assert hom_count(f, g, loops=True) == brute_hom(f, g, loops=True)
            assert inj_count(f, g) == brute_hom(f, g, injective=True)


def test_disconnected_patterns():
    f = SmallGraph.from_edges(4, [(0, 1), (2, 3)])
    g = petersen()
    assert hom_count(f, g) == brute_hom(f, g) == 30 ** 2
    assert inj_count(f, g) == brute_hom(f, g, injective=True)


def test_disjoint_copies_scale():
    f = cycle(4)
    g = complete_bipartite(3)
    assert hom_count(f, DisjointCopies(g, 7)) == 7 * hom_count(f, g)
    assert inj_count(f, DisjointCopies(g, 10 ** 9)) == 10 ** 9 * inj_count(f, g)
    two = SmallGraph.from_edges(2, [])
    assert hom_count(two, DisjointCopies(g, 3)) == 18 ** 2


def test_named_counts():
    for d in range(2, 6):
        assert inj_count(cycle(4), complete_bipartite(d)) == 2 * d ** 2 * (d - 1) ** 2
        assert Fraction(inj_count(cycle(3), clique(d + 1)), d + 1) == d * (d - 1)
    assert sub_count(cycle(6), heawood()) == 28
    assert sub_count(cycle(5), petersen()) == 12
    assert inj_count(cycle(4), heawood()) == 0


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_tree_density_law(d):
    graphs = regular_corpus(d, size=6)
    for j in range(1, 6):
        for tree in default_catalog().trees(j):
            for g in graphs:
                assert density_t(tree.graph, g) == Fraction(d + 1, g.n) ** (j - 1)


def test_density_gap_checks():
    g, h = connected_cubic_graphs(6)
    assert density_gap(cycle(4), h, g).value == -density_gap(cycle(4), g, h).value
    assert density_gap(path(4), h, g).value == 0
    with pytest.raises(ValueError):
        density_gap(cycle(4), petersen(), g)
    assert tau_gap(cycle(3), complete_bipartite(3), connected_cubic_graphs(6)[0]).value is not None


def test_contraction_identity():
    g = petersen()
    for f in [cycle(4), path(3), SmallGraph.from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)])]:
        parts = contraction_decompose(f, g)
        assert sum(c for _, _, c in parts) == hom_count(f, g, loops=True)


def test_set_partitions_are_bell_numbers():
    assert [sum(1 for _ in set_partitions(range(m))) for m in range(7)] == [1, 1, 2, 5, 15, 52, 203]
    assert quotient(cycle(4), [[0, 2], [1], [3]]).num_edges == 2
