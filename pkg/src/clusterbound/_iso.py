"""Colour refinement and backtracking isomorphism for small graphs.

Graphs are passed as ``(adj, colors)`` where ``adj[v]`` is a neighbour bitmask
and ``colors[v]`` any hashable, orderable vertex colour.  Everything here is
exhaustive search with refinement pruning; it is meant for components of a
few dozen vertices at most.
"""
from __future__ import annotations

from typing import Hashable, Iterator, Sequence


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def refine(adj: Sequence[int], colors: Sequence[Hashable]) -> tuple[list[int], tuple]:
    """Stable colour refinement.

    Returns the final integer colouring and a certificate: the per-round
    sorted signature tables.  Two isomorphic coloured graphs always produce
    the same certificate and the same colour classes up to the isomorphism,
    because colour names are assigned by rank of signature.
    """
    n = len(adj)
    ranks = {c: i for i, c in enumerate(sorted(set(colors)))}
    col = [ranks[c] for c in colors]
    history = [tuple(sorted(ranks.items()))]
    nclasses = len(ranks)
    for _ in range(n):
        sigs = [(col[v], tuple(sorted(col[u] for u in _bits(adj[v])))) for v in range(n)]
        table = sorted(set(sigs))
        ranks2 = {s: i for i, s in enumerate(table)}
        col = [ranks2[s] for s in sigs]
        history.append(tuple(table))
        if len(table) == nclasses:
            break
        nclasses = len(table)
    return col, tuple(history)


def invariant(adj: Sequence[int], colors: Sequence[Hashable] | None = None) -> tuple:
    """Isomorphism invariant (refinement certificate plus colour histogram)."""
    if colors is None:
        colors = [0] * len(adj)
    col, hist = refine(adj, colors)
    return (len(adj), hist, tuple(sorted(col)))


def _search(adj1, col1, adj2, col2, count_all: bool) -> int:
    n = len(adj1)
    # Vertex order: smallest colour class first, then stay connected to the
    # mapped prefix so adjacency constraints bite early.
    size = {}
    for c in col1:
        size[c] = size.get(c, 0) + 1
    order: list[int] = []
    placed = 0
    remaining = set(range(n))
    while remaining:
        frontier = [v for v in remaining if adj1[v] & placed]
        pool = frontier or list(remaining)
        v = min(pool, key=lambda x: (size[col1[x]], x))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)

    by_color: dict[int, list[int]] = {}
    for w in range(n):
        by_color.setdefault(col2[w], []).append(w)

    image = [-1] * n
    used = 0
    found = 0

    def rec(i: int) -> bool:
        nonlocal used, found
        if i == n:
            found += 1
            return not count_all
        v = order[i]
        for w in by_color.get(col1[v], ()):
            if used >> w & 1:
                continue
            ok = True
            for u in order[:i]:
                if (adj1[v] >> u & 1) != (adj2[w] >> image[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used |= 1 << w
            stop = rec(i + 1)
            used &= ~(1 << w)
            image[v] = -1
            if stop:
                return True
        return False

    rec(0)
    return found


def _prepare(adj1, col1, adj2, col2):
    if len(adj1) != len(adj2):
        return None
    r1, h1 = refine(adj1, col1)
    r2, h2 = refine(adj2, col2)
    if h1 != h2 or sorted(r1) != sorted(r2):
        return None
    return r1, r2


def is_isomorphic(adj1, adj2, col1=None, col2=None) -> bool:
    col1 = [0] * len(adj1) if col1 is None else col1
    col2 = [0] * len(adj2) if col2 is None else col2
    prep = _prepare(adj1, col1, adj2, col2)
    if prep is None:
        return False
    return _search(adj1, prep[0], adj2, prep[1], count_all=False) > 0


def automorphism_count(adj, colors=None) -> int:
    colors = [0] * len(adj) if colors is None else colors
    col, _ = refine(adj, colors)
    return _search(adj, col, adj, col, count_all=True)


class IsoClassifier:
    """Incremental deduplication of graphs up to (coloured) isomorphism."""

    def __init__(self) -> None:
        self._buckets: dict[tuple, list[tuple[Sequence[int], Sequence]]] = {}

    def add(self, adj: Sequence[int], colors: Sequence | None = None) -> bool:
        """Register a graph; return True iff it is new."""
        colors = [0] * len(adj) if colors is None else list(colors)
        key = invariant(adj, colors)
        bucket = self._buckets.setdefault(key, [])
        for adj2, col2 in bucket:
            if is_isomorphic(adj, adj2, colors, col2):
                return False
        bucket.append((list(adj), colors))
        return True

    def __len__(self) -> int:
        return sum(len(b) for b in self._buckets.values())
