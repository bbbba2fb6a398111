"""Homomorphism, injective-homomorphism and subgraph counts of small graphs.

Pattern graphs F may be a :class:`SmallGraph` or a :class:`Graph`; targets
may be a :class:`Graph` or :class:`DisjointCopies`.  ``loops=True`` counts
into the looped graph G° (every vertex adjacent to itself), which is what
homomorphism densities use.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from . import _iso
from .catalog import SmallGraph, SmallGraphCatalog, default_catalog
from .graphs import DisjointCopies, Graph, GraphLike, iter_bits, line_graph, regular_degree


def _pattern_components(adj: Sequence[int]) -> list[list[int]]:
    n = len(adj)
    seen = 0
    out = []
    for s in range(n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(iter_bits(comp)))
    return out


@lru_cache(maxsize=4096)
def _plan(adj: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...], int]:
    """Vertex order, earlier-neighbour positions, and start of the free tail.

    Orders each component breadth-first so every non-root vertex has an
    earlier neighbour.  Among all choices of BFS roots the order with the
    longest independent tail is kept; tail vertices are counted by product.
    """
    n = len(adj)
    best = None
    comps = _pattern_components(adj)
    for rootset in _root_choices(comps):
        order: list[int] = []
        for comp, root in zip(comps, rootset):
            seen = {root}
            queue = [root]
            while queue:
                u = queue.pop(0)
                order.append(u)
                for w in sorted(iter_bits(adj[u])):
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
        # Move vertices of degree one (within F) to the back where possible.
        order = _push_leaves_back(order, adj)
        pos = {v: i for i, v in enumerate(order)}
        earlier = tuple(tuple(pos[u] for u in iter_bits(adj[v]) if pos[u] < i) for i, v in enumerate(order))
        tail = n
        while tail > 0:
            v = order[tail - 1]
            if any(pos[u] >= tail - 1 for u in iter_bits(adj[v])):
                break
            tail -= 1
        if best is None or tail < best[2]:
            best = (tuple(order), earlier, tail)
    if best is None:
        return (), (), 0
    return best


def _root_choices(comps):
    if not comps:
        yield ()
        return
    # Try every root in the first component only; other components keep their minimum.
    for r in comps[0]:
        yield (r,) + tuple(c[0] for c in comps[1:])


def _push_leaves_back(order: list[int], adj) -> list[int]:
    core, leaves = [], []
    for v in order:
        if adj[v].bit_count() == 1 and v != order[0]:
            leaves.append(v)
        else:
            core.append(v)
    # A leaf whose neighbour is also a leaf (a K2 component) must stay in order.
    placed = set(core)
    out = list(core)
    pending = list(leaves)
    while pending:
        rest = []
        for v in pending:
            nb = next(iter_bits(adj[v]))
            if nb in placed:
                out.append(v)
                placed.add(v)
            else:
                rest.append(v)
        if len(rest) == len(pending):
            out.extend(rest)
            break
        pending = rest
    return out


def _count_maps(f_adj: tuple[int, ...], target: Sequence[int], n: int, injective: bool) -> int:
    order, earlier, tail = _plan(f_adj)
    k = len(order)
    if k == 0:
        return 1
    full = (1 << n) - 1
    image = [0] * k

    if injective:
        def rec(i: int, used: int) -> int:
            cand = full & ~used
            for p in earlier[i]:
                cand &= target[image[p]]
            if i == k - 1:
                return cand.bit_count()
            total = 0
            for w in iter_bits(cand):
                image[i] = w
                total += rec(i + 1, used | (1 << w))
            return total

        return rec(0, 0)

    def rec(i: int) -> int:
        if i == tail:
            prod = 1
            for r in range(tail, k):
                cand = full
                for p in earlier[r]:
                    cand &= target[image[p]]
                prod *= cand.bit_count()
                if not prod:
                    return 0
            return prod
        cand = full
        for p in earlier[i]:
            cand &= target[image[p]]
        total = 0
        for w in iter_bits(cand):
            image[i] = w
            total += rec(i + 1)
        return total

    return rec(0)


def _target_masks(g: Graph, loops: bool) -> list[int]:
    if loops:
        return [m | (1 << v) for v, m in enumerate(g.adj)]
    return list(g.adj)


def _is_connected_adj(adj) -> bool:
    return len(_pattern_components(adj)) <= 1


def hom_count(f, g: GraphLike, loops: bool = False) -> int:
    """Number of maps V(F) -> V(G) sending edges of F to edges of G (or G°)."""
    f_adj = tuple(f.adj)
    if isinstance(g, DisjointCopies):
        comps = _pattern_components(f_adj)
        total = 1
        for comp in comps:
            sub = _induced(f_adj, comp)
            total *= g.count * _count_maps(sub, _target_masks(g.graph, loops), g.graph.n, False)
        return total
    return _count_maps(f_adj, _target_masks(g, loops), g.n, False)


def inj_count(f, g: GraphLike) -> int:
    """Number of injective homomorphisms F -> G (G simple, no loops)."""
    f_adj = tuple(f.adj)
    if isinstance(g, DisjointCopies):
        if not _is_connected_adj(f_adj):
            if g.n > 256:
                raise ValueError("injective counts of disconnected patterns into huge unions are not supported")
            g = g.materialize()
        else:
            return g.count * _count_maps(f_adj, g.graph.adj, g.graph.n, True)
    return _count_maps(f_adj, g.adj, g.n, True)


def _induced(adj, vertices) -> tuple[int, ...]:
    idx = {v: i for i, v in enumerate(vertices)}
    out = []
    for v in vertices:
        m = 0
        for u in iter_bits(adj[v]):
            m |= 1 << idx[u]
        out.append(m)
    return tuple(out)


def automorphisms(f) -> int:
    return _iso.automorphism_count(tuple(f.adj))


def sub_count(f, g: GraphLike) -> int:
    """Number of subgraphs of G isomorphic to F."""
    inj = inj_count(f, g)
    aut = automorphisms(f)
    if inj % aut:
        raise ArithmeticError("injective count not divisible by |Aut(F)|")
    return inj // aut


def density_t(f, g: GraphLike) -> Fraction:
    """Homomorphism density t(F, G°) = hom(F, G°) / n^|V(F)|."""
    return Fraction(hom_count(f, g, loops=True), g.n ** len(f.adj))


@dataclass(frozen=True)
class DensityGap:
    f: SmallGraph
    value: Fraction


def _check_pair(h: GraphLike, g: GraphLike) -> None:
    if h.n != g.n:
        raise ValueError(f"vertex counts differ: {h.n} != {g.n}")
    dh, dg = regular_degree(h), regular_degree(g)
    if dh != dg:
        raise ValueError(f"degrees differ: {dh} != {dg}")


def density_gap(f, h: GraphLike, g: GraphLike) -> DensityGap:
    """t(F, H°) - t(F, G°) for two d-regular graphs on the same vertex count."""
    _check_pair(h, g)
    value = density_t(f, h) - density_t(f, g)
    if regular_degree(g) is not None and _is_tree(f) and value != 0:
        raise AssertionError(f"tree {f} has non-zero density gap {value}")
    sg = f if isinstance(f, SmallGraph) else SmallGraph.from_graph(f)
    return DensityGap(sg, value)


def tau_gap(f, h: Graph, g: Graph) -> DensityGap:
    """Density gap between the line graphs L(H) and L(G)."""
    lh, lg = line_graph(h), line_graph(g)
    if lh.n != lg.n:
        raise ValueError(f"line graphs have different vertex counts: {lh.n} != {lg.n}")
    return density_gap(f, lh, lg)


def _is_tree(f) -> bool:
    adj = tuple(f.adj)
    edges = sum(m.bit_count() for m in adj) // 2
    return edges == len(adj) - 1 and _is_connected_adj(adj)


def set_partitions(items: Sequence[int]) -> Iterator[list[list[int]]]:
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def quotient(f, partition: Sequence[Sequence[int]]) -> Graph:
    """F/pi: identify each block, then drop loops and parallel edges."""
    block = {}
    for b, members in enumerate(partition):
        for v in members:
            block[v] = b
    edges = set()
    adj = tuple(f.adj)
    for u in range(len(adj)):
        for v in iter_bits(adj[u]):
            a, b = block[u], block[v]
            if a != b:
                edges.add((min(a, b), max(a, b)))
    return Graph(len(partition), sorted(edges))


def contraction_decompose(f, g: GraphLike) -> list[tuple[list[list[int]], Graph, int]]:
    """All partitions pi of V(F) with F/pi and inj(F/pi, G).

    The injective counts sum to hom(F, G°).
    """
    out = []
    cache: dict[tuple, int] = {}
    for part in set_partitions(range(len(f.adj))):
        q = quotient(f, part)
        key = (q.n, q.adj)
        if key not in cache:
            cache[key] = inj_count(q, g)
        out.append((part, q, cache[key]))
    return out


def catalog_homs(g: GraphLike, j: int, catalog: SmallGraphCatalog | None = None) -> list[int]:
    """hom(F, G°) for every catalog class on j vertices, in catalog order."""
    catalog = catalog or default_catalog()
    return [hom_count(c.graph, g, loops=True) for c in catalog.classes(j)]
