"""Graph corpora: 2-regular unions, connected cubic graphs, and random regular graphs.

Connected cubic graphs come from an external generator (nauty's geng,
``geng -c -d3 -D3 n``) and ship as ``data/cubic_<n>.g6`` for n <= 14; their
counts are checked against the known sequence on load.  2-regular graphs
are generated internally from integer partitions.
"""
from __future__ import annotations

import random
from functools import lru_cache
from importlib import resources
from typing import Iterator

from .graph6 import loads
from .graphs import Graph, cycle, disjoint_union, girth, is_connected, line_graph

CONNECTED_CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85, 14: 509}
CUBIC_GIRTH5_COUNTS = {10: 1, 12: 2, 14: 9}


def integer_partitions(n: int, smallest: int = 1) -> Iterator[tuple[int, ...]]:
    """Partitions of n into non-decreasing parts >= smallest."""
    if n == 0:
        yield ()
        return
    for first in range(smallest, n + 1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


def two_regular_graphs(n: int) -> list[Graph]:
    """All 2-regular graphs on n vertices, one per cycle-length partition (parts >= 3)."""
    return [disjoint_union(cycle(p) for p in parts) for parts in integer_partitions(n, 3)]


def _data_file(name: str):
    return resources.files(__package__).joinpath("data", name)


@lru_cache(maxsize=None)
def _cubic(n: int) -> tuple[Graph, ...]:
    f = _data_file(f"cubic_{n}.g6")
    if not f.is_file():
        raise ValueError(f"no shipped cubic corpus for n={n} (available: {sorted(CONNECTED_CUBIC_COUNTS)})")
    graphs = tuple(loads(f.read_text()))
    if len(graphs) != CONNECTED_CUBIC_COUNTS[n]:
        raise ValueError(f"cubic corpus for n={n} has {len(graphs)} graphs, expected {CONNECTED_CUBIC_COUNTS[n]}")
    return graphs


def connected_cubic_graphs(n: int) -> list[Graph]:
    """All connected cubic graphs on n vertices (n <= 14), from the shipped corpus."""
    return list(_cubic(n))


def cubic_girth_at_least(n: int, g: int) -> list[Graph]:
    return [h for h in connected_cubic_graphs(n) if girth(h) >= g]


def random_regular(n: int, d: int, rng: random.Random, connected: bool = False, max_tries: int = 10000) -> Graph:
    """Uniform simple d-regular graph by rejection sampling in the configuration model."""
    if n * d % 2 or d >= n:
        raise ValueError(f"no simple {d}-regular graph on {n} vertices")
    points = [v for v in range(n) for _ in range(d)]
    for _ in range(max_tries):
        rng.shuffle(points)
        edges = set()
        ok = True
        for i in range(0, len(points), 2):
            u, v = points[i], points[i + 1]
            e = (min(u, v), max(u, v))
            if u == v or e in edges:
                ok = False
                break
            edges.add(e)
        if ok:
            g = Graph(n, edges)
            if not connected or is_connected(g):
                return g
    raise RuntimeError("rejection sampling did not produce a simple graph")


def circulant(n: int, jumps) -> Graph:
    edges = set()
    for v in range(n):
        for s in jumps:
            u = (v + s) % n
            if u != v:
                edges.add((min(u, v), max(u, v)))
    return Graph(n, edges)


def regular_corpus(d: int, size: int = 20, seed: int = 0) -> list[Graph]:
    """A deterministic mix of d-regular graphs: structured families then random samples."""
    rng = random.Random(seed * 1000 + d)
    out: list[Graph] = []
    if d == 2:
        for n in range(3, 13):
            out.extend(two_regular_graphs(n))
    elif d == 3:
        for n in (4, 6, 8, 10):
            out.extend(connected_cubic_graphs(n))
    elif d == 4:
        out.extend(line_graph(g) for g in connected_cubic_graphs(8))
        out.extend(circulant(n, (1, 2)) for n in range(5, 13))
    else:
        out.extend(circulant(n, range(1, d // 2 + 1)) if d % 2 == 0 else circulant(n, (*range(1, d // 2 + 1), n // 2))
                   for n in range(d + 1, d + 11) if n % 2 == 0 or d % 2 == 0)
    n_choices = [n for n in range(d + 2, 17) if n * d % 2 == 0]
    while len(out) < size:
        out.append(random_regular(rng.choice(n_choices), d, rng))
    return out[:size]
