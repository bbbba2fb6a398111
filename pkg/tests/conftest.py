import itertools

import pytest

from clusterbound.graphs import Graph, complete_bipartite, cycle, heawood, petersen
from clusterbound.corpus import connected_cubic_graphs, two_regular_graphs


def brute_independent_counts(g: Graph) -> list[int]:
    counts = [0] * (g.n + 1)
    for mask in range(1 << g.n):
        if all(not (g.adj[v] & mask) for v in range(g.n) if mask >> v & 1):
            counts[mask.bit_count()] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def brute_matching_counts(g: Graph) -> list[int]:
    edges = g.edges()
    counts = [0] * (len(edges) + 1)
    for r in range(len(edges) + 1):
        for sub in itertools.combinations(edges, r):
            verts = [v for e in sub for v in e]
            if len(set(verts)) == len(verts):
                counts[r] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


@pytest.fixture(scope="session")
def small_corpus() -> list[Graph]:
    out = [g for n in (4, 6, 8) for g in connected_cubic_graphs(n)]
    out += [g for n in range(3, 10) for g in two_regular_graphs(n)]
    out += [complete_bipartite(d) for d in (2, 3, 4)] + [petersen(), cycle(5)]
    return out


@pytest.fixture(scope="session")
def heawood_graph() -> Graph:
    return heawood()


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for number, (ok, detail) in sorted(mod.RESULTS.items()):
        terminalreporter.write_line(f"CRITERION {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
