"""Simple undirected graphs on vertices ``0..n-1`` stored as neighbour bitmasks.

Also holds the reference constructions (complete bipartite graphs, cliques,
cycles, the Heawood and Petersen graphs, disjoint copies), structural queries
and the small spec-string grammar used on the command line::

    kdd(3)  clique(4)  cycle(8)  heawood  petersen  copies(kdd(3),5)
"""
from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

from . import _iso

MAX_VERTICES = 64


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph.  ``adj[v]`` is the bitmask of neighbours of v."""

    __slots__ = ("n", "adj", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self._edges = None

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        n = len(masks)
        for v, m in enumerate(masks):
            if m >> v & 1:
                raise ValueError(f"self-loop at {v}")
            if m >> n:
                raise ValueError(f"neighbour of {v} out of range")
            for u in iter_bits(m):
                if not masks[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        g = cls.__new__(cls)
        g.n = n
        g.adj = tuple(masks)
        g._edges = None
        return g

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        if self._edges is None:
            self._edges = tuple(
                (u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))
            )
        return list(self._edges)

    @property
    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def looped(self) -> "LoopedView":
        return LoopedView(self)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


@dataclass(frozen=True)
class LoopedView:
    """G with a loop at every vertex; loops are never stored in ``base``."""

    base: Graph

    @property
    def n(self) -> int:
        return self.base.n

    def mask(self, v: int) -> int:
        return self.base.adj[v] | (1 << v)

    def adjacent(self, u: int, v: int) -> bool:
        return u == v or self.base.has_edge(u, v)


@dataclass(frozen=True)
class DisjointCopies:
    """``count`` disjoint copies of ``graph``, kept symbolic.

    Counting and density routines accept this wherever they accept a Graph,
    which lets callers work with unions far too large to materialise.
    """

    graph: Graph
    count: int

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be at least 1")

    @property
    def n(self) -> int:
        return self.graph.n * self.count

    @property
    def num_edges(self) -> int:
        return self.graph.num_edges * self.count

    def materialize(self) -> Graph:
        return disjoint_union([self.graph] * self.count)


GraphLike = Union[Graph, DisjointCopies]


# -- structure -----------------------------------------------------------------

def components(g: Graph) -> list[list[int]]:
    """Vertex lists of connected components, ordered by smallest vertex."""
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(iter_bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    index = {v: i for i, v in enumerate(vertices)}
    edges = [(index[u], index[v]) for u in vertices for v in iter_bits(g.adj[u]) if v in index and u < v]
    return Graph(len(vertices), edges)


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        offset += h.n
    return Graph(offset, edges)


def check_regular(g: GraphLike, d: int) -> bool:
    if isinstance(g, DisjointCopies):
        g = g.graph
    return all(m.bit_count() == d for m in g.adj)


def regular_degree(g: GraphLike) -> int | None:
    """Common degree, or None if the graph is not regular (or empty)."""
    if isinstance(g, DisjointCopies):
        g = g.graph
    if g.n == 0:
        return None
    degs = set(g.degrees())
    return degs.pop() if len(degs) == 1 else None


def girth(g: Graph) -> float:
    """Length of a shortest cycle; ``math.inf`` for forests."""
    best = math.inf
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in iter_bits(g.adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def line_graph(g: Graph) -> Graph:
    """Line graph; vertex i is the i-th edge of ``g.edges()`` (lexicographic)."""
    edges = g.edges()
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    out = set()
    for inc in incident:
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                out.add((inc[a], inc[b]))
    return Graph(len(edges), sorted(out))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return _iso.is_isomorphic(g.adj, h.adj)


def component_classes(g: GraphLike) -> list[tuple[Graph, int]]:
    """Connected components grouped up to isomorphism, as (graph, multiplicity)."""
    if isinstance(g, DisjointCopies):
        return [(h, m * g.count) for h, m in component_classes(g.graph)]
    classes: list[list] = []
    for comp in components(g):
        sub = induced_subgraph(g, comp)
        for entry in classes:
            if is_isomorphic(entry[0], sub):
                entry[1] += 1
                break
        else:
            classes.append([sub, 1])
    return [(h, m) for h, m in classes]


@dataclass(frozen=True)
class ComponentSplit:
    """``g0``: components not isomorphic to the reference; ``gh``: the rest."""

    g0: Graph
    gh: Graph
    alpha: Fraction


def split_by_reference(g: Graph, h: Graph) -> ComponentSplit:
    rest, match = [], []
    for comp in components(g):
        sub = induced_subgraph(g, comp)
        (match if is_isomorphic(sub, h) else rest).append(sub)
    g0 = disjoint_union(rest)
    alpha = Fraction(g0.n, g.n) if g.n else Fraction(0)
    return ComponentSplit(g0, disjoint_union(match), alpha)


# -- constructions -------------------------------------------------------------

@dataclass(frozen=True)
class GraphSpec:
    """A named reference graph.  ``params`` holds ints or a nested GraphSpec."""

    kind: str
    params: tuple = ()

    def __str__(self) -> str:
        if self.kind in ("heawood", "petersen"):
            return self.kind
        return f"{self.kind}({','.join(str(p) for p in self.params)})"

    @property
    def num_vertices(self) -> int:
        k, p = self.kind, self.params
        if k == "kdd":
            return 2 * p[0]
        if k in ("clique", "cycle"):
            return p[0]
        if k == "heawood":
            return 14
        if k == "petersen":
            return 10
        if k == "copies":
            return p[0].num_vertices * p[1]
        raise ValueError(f"unknown graph kind {k!r}")


def complete_bipartite(d: int) -> Graph:
    return Graph(2 * d, [(i, d + j) for i in range(d) for j in range(d)])


def clique(m: int) -> Graph:
    return Graph(m, [(i, j) for i in range(m) for j in range(i + 1, m)])


def cycle(length: int) -> Graph:
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    return Graph(length, [(i, (i + 1) % length) for i in range(length)])


def path(length: int) -> Graph:
    return Graph(length, [(i, i + 1) for i in range(length - 1)])


def heawood() -> Graph:
    # Point-line incidence graph of the Fano plane: lines {i, i+1, i+3} mod 7.
    edges = [(p % 7, 7 + i) for i in range(7) for p in (i, i + 1, i + 3)]
    return Graph(14, edges)


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, edges)


def construct(spec: GraphSpec) -> Graph:
    k, p = spec.kind, spec.params
    if k == "copies":
        inner, count = p
        if count < 1:
            raise ValueError("copies count must be at least 1")
        return disjoint_union([construct(inner)] * count)
    if k in ("kdd", "clique", "cycle") and (len(p) != 1 or p[0] < 1):
        raise ValueError(f"{k} needs one positive integer parameter")
    if k == "kdd":
        return complete_bipartite(p[0])
    if k == "clique":
        return clique(p[0])
    if k == "cycle":
        return cycle(p[0])
    if k == "heawood":
        return heawood()
    if k == "petersen":
        return petersen()
    raise ValueError(f"unknown graph kind {k!r}")


_TOKEN = re.compile(r"\s*(\w+|\(|\)|,)")


def parse_spec(text: str) -> GraphSpec:
    """Parse ``kdd(3)``, ``copies(heawood,2)`` and friends."""
    tokens = _TOKEN.findall(text)
    if "".join(tokens) != re.sub(r"\s+", "", text):
        raise ValueError(f"bad graph spec {text!r}")
    pos = 0

    def take(expected=None):
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError(f"unexpected end of graph spec {text!r}")
        tok = tokens[pos]
        if expected is not None and tok != expected:
            raise ValueError(f"expected {expected!r} in graph spec {text!r}")
        pos += 1
        return tok

    def spec() -> GraphSpec:
        name = take().lower()
        if name in ("heawood", "petersen"):
            return GraphSpec(name)
        if name not in ("kdd", "clique", "cycle", "copies"):
            raise ValueError(f"unknown graph kind {name!r}")
        take("(")
        if name == "copies":
            inner = spec()
            take(",")
            count = int(take())
            take(")")
            return GraphSpec(name, (inner, count))
        value = int(take())
        take(")")
        return GraphSpec(name, (value,))

    out = spec()
    if pos != len(tokens):
        raise ValueError(f"trailing input in graph spec {text!r}")
    return out


def reference_union(spec: GraphSpec, n: int) -> Graph:
    """``n / h`` disjoint copies of the reference graph."""
    h = construct(spec)
    if n % h.n:
        raise ValueError(f"{n} is not divisible by |V({spec})| = {h.n}")
    return disjoint_union([h] * (n // h.n))


def same_components(a: GraphLike, b: GraphLike) -> bool:
    """True iff the two graphs have the same component multiset (are isomorphic)."""
    if a.n != b.n:
        return False
    ca, cb = component_classes(a), component_classes(b)
    if len(ca) != len(cb):
        return False
    remaining = list(cb)
    for h, m in ca:
        for i, (h2, m2) in enumerate(remaining):
            if m == m2 and is_isomorphic(h, h2):
                del remaining[i]
                break
        else:
            return False
    return True
