import itertools
import math
from fractions import Fraction

import pytest

from clusterbound.catalog import (
    KNOWN_CONNECTED_COUNTS, SmallGraph, SmallGraphCatalog, connected_signed_sum, iter_labeled_connected,
    read_catalog_file, ursell, write_catalog_file,
)


def brute_signed_sum(g: SmallGraph) -> int:
    edges = g.edges()
    total = 0
    for r in range(len(edges) + 1):
        for sub in itertools.combinations(edges, r):
            if SmallGraph.from_edges(g.j, sub).connected:
                total += (-1) ** r
    return total


@pytest.fixture(scope="module")
def catalog(tmp_path_factory):
    import os
    os.environ["CLUSTERBOUND_CACHE"] = str(tmp_path_factory.mktemp("cache"))
    return SmallGraphCatalog(7)


def test_class_and_labelled_counts(catalog):
    class_counts = [len(catalog.classes(j)) for j in range(1, 8)]
    assert class_counts == [1, 1, 2, 6, 21, 112, 853]
    assert tuple(catalog.labeled_count(j) for j in range(1, 8)) == KNOWN_CONNECTED_COUNTS
    # Cayley: j^(j-2) labelled trees
    assert [catalog.labeled_tree_count(j) for j in range(1, 8)] == [1, 1, 3, 16, 125, 1296, 16807]


def test_multiplicities_match_direct_scan(catalog):
    for j in range(1, 6):
        assert sum(1 for _ in iter_labeled_connected(j)) == catalog.labeled_count(j)


def test_ursell_values():
    assert ursell(SmallGraph(1, 0)) == 1
    assert ursell(SmallGraph.from_edges(2, [(0, 1)])) == Fraction(-1, 2)
    assert ursell(SmallGraph.from_edges(3, [(0, 1), (1, 2)])) == Fraction(1, 6)
    assert ursell(SmallGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])) == Fraction(1, 3)
    assert ursell(SmallGraph.from_edges(2, [])) == 0


def test_signed_sum_against_subsets():
    for j in range(1, 6):
        for g in iter_labeled_connected(j):
            if g.j <= 4 or g.mask % 7 == 0:
                assert connected_signed_sum(g.adj) == brute_signed_sum(g)


def test_complete_graph_signed_sum():
    # sum over connected spanning subgraphs of K_m of (-1)^|E| = (-1)^(m-1) (m-1)!
    for m in range(1, 8):
        adj = tuple(((1 << m) - 1) ^ (1 << v) for v in range(m))
        assert connected_signed_sum(adj) == (-1) ** (m - 1) * math.factorial(m - 1)


def test_cache_round_trip(tmp_path, catalog):
    path = tmp_path / "j4.txt"
    write_catalog_file(path, 4, catalog.classes(4))
    assert read_catalog_file(path, 4) == catalog.classes(4)
    path.write_text("garbage\n")
    with pytest.raises(ValueError):
        read_catalog_file(path, 4)


def test_corrupt_cache_is_rebuilt(tmp_path, monkeypatch):
    monkeypatch.setenv("CLUSTERBOUND_CACHE", str(tmp_path))
    first = SmallGraphCatalog(4).classes(4)
    for f in tmp_path.iterdir():
        f.write_text("clusterbound-catalog v1 j=4 classes=6\n1 2 3\n")
    assert SmallGraphCatalog(4).classes(4) == first


def test_catalog_range(catalog):
    with pytest.raises(ValueError):
        catalog.classes(8)
