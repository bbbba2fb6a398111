import math

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from clusterbound import _iso
from clusterbound.graphs import (
    DisjointCopies, Graph, GraphSpec, clique, complete_bipartite, component_classes, components, construct, cycle,
    disjoint_union, girth, heawood, is_isomorphic, line_graph, parse_spec, petersen, reference_union,
    regular_degree, same_components, split_by_reference,
)


def graphs(max_n=9):
    @st.composite
    def build(draw):
        n = draw(st.integers(0, max_n))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
        return Graph(n, chosen)
    return build()


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_named_graphs():
    for g, n, m, d, gg in [(heawood(), 14, 21, 3, 6), (petersen(), 10, 15, 3, 5), (complete_bipartite(4), 8, 16, 4, 4),
                           (clique(5), 5, 10, 4, 3), (cycle(7), 7, 7, 2, 7)]:
        assert (g.n, g.num_edges, regular_degree(g), girth(g)) == (n, m, d, gg)
    assert nx.is_isomorphic(to_nx(heawood()), nx.heawood_graph())
    assert nx.is_isomorphic(to_nx(petersen()), nx.petersen_graph())


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph.from_masks([0b10, 0b000])


def test_girth_of_forest_is_infinite():
    assert girth(Graph(4, [(0, 1), (1, 2)])) == math.inf


def test_spec_grammar_round_trip():
    for text in ["kdd(3)", "clique(4)", "cycle(9)", "heawood", "petersen", "copies(kdd(2),3)", "copies(copies(heawood,2),2)"]:
        spec = parse_spec(text)
        assert str(spec) == text
        assert construct(spec).n == spec.num_vertices
    for bad in ["kdd", "kdd(3", "foo(2)", "kdd(3)x", "copies(kdd(2))", "kdd(0)"]:
        with pytest.raises(ValueError):
            construct(parse_spec(bad))


def test_reference_union_and_split():
    g = disjoint_union([complete_bipartite(3), petersen(), complete_bipartite(3)])
    split = split_by_reference(g, complete_bipartite(3))
    assert split.g0.n == 10 and split.gh.n == 12
    assert split.alpha == pytest.approx(10 / 22)
    assert reference_union(parse_spec("kdd(3)"), 12).n == 12
    with pytest.raises(ValueError):
        reference_union(parse_spec("kdd(3)"), 10)


def test_component_classes_and_copies():
    g = disjoint_union([cycle(4), cycle(5), cycle(4)])
    classes = sorted((h.n, m) for h, m in component_classes(g))
    assert classes == [(4, 2), (5, 1)]
    big = DisjointCopies(g, 1000)
    assert big.n == 13000 and regular_degree(big) == 2
    assert sorted((h.n, m) for h, m in component_classes(big)) == [(4, 2000), (5, 1000)]
    assert same_components(DisjointCopies(cycle(4), 2), disjoint_union([cycle(4), cycle(4)]))
    assert not same_components(cycle(8), disjoint_union([cycle(4), cycle(4)]))


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_structure_matches_networkx(g):
    h = to_nx(g)
    assert len(components(g)) == nx.number_connected_components(h)
    lg = line_graph(g)
    assert nx.is_isomorphic(to_nx(lg), nx.line_graph(h)) if g.num_edges else lg.n == 0
    cyc = nx.girth(h)
    assert girth(g) == cyc


@settings(max_examples=60, deadline=None)
@given(graphs(7), st.randoms(use_true_random=False))
def test_isomorphism_against_networkx(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    relabelled = Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
    assert is_isomorphic(g, relabelled)
    other = Graph(g.n, g.edges()[1:]) if g.num_edges else g
    assert is_isomorphic(g, other) == nx.is_isomorphic(to_nx(g), to_nx(other))


def test_automorphism_counts():
    assert _iso.automorphism_count(petersen().adj) == 120
    assert _iso.automorphism_count(heawood().adj) == 336
    assert _iso.automorphism_count(complete_bipartite(3).adj) == 72
    assert _iso.automorphism_count(cycle(9).adj) == 18
    assert _iso.automorphism_count(clique(5).adj) == 120


def test_classifier_dedups_coloured_graphs():
    c = _iso.IsoClassifier()
    assert c.add([0b10, 0b01, 0], [0, 0, 1])
    assert not c.add([0, 0b100, 0b010], [1, 0, 0])
    assert c.add([0, 0b100, 0b010], [0, 1, 0])
    assert len(c) == 2
