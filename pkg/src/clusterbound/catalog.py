"""Catalog of connected graphs on at most ``j_max`` labelled vertices.

The catalog is stored by isomorphism class: each class carries a
representative, the number of labelled graphs on ``{0..j-1}`` in the class
(``j! / |Aut|``), its edge count and its Ursell value.  Summing a class
quantity weighted by ``multiplicity`` is the same as summing over every
labelled connected graph, which is how polymer weights are formed.

Classes for ``j`` are grown from classes for ``j - 1`` by attaching a new
vertex to a non-empty neighbourhood (every connected graph has a non-cut
vertex) and deduplicating up to isomorphism.  Built catalogs are cached as
text files under ``$CLUSTERBOUND_CACHE`` (default ``~/.cache/clusterbound``).
"""
from __future__ import annotations

import logging
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from pathlib import Path
from typing import Iterator

from . import _iso
from .graphs import Graph, iter_bits

log = logging.getLogger(__name__)

J_MAX = 7
CACHE_VERSION = 1
CACHE_ENV = "CLUSTERBOUND_CACHE"

# Labelled connected graphs on j vertices, j = 1..7.
KNOWN_CONNECTED_COUNTS = (1, 1, 4, 38, 728, 26704, 1866256)


@lru_cache(maxsize=None)
def pair_index(j: int) -> tuple[tuple[int, int], ...]:
    """Vertex pairs of ``{0..j-1}`` in lexicographic order (bit positions)."""
    return tuple(combinations(range(j), 2))


@dataclass(frozen=True)
class SmallGraph:
    """Graph on ``{0..j-1}``; bit i of ``mask`` is the i-th lexicographic pair."""

    j: int
    mask: int

    @classmethod
    def from_edges(cls, j: int, edges) -> "SmallGraph":
        pos = {p: i for i, p in enumerate(pair_index(j))}
        mask = 0
        for u, v in edges:
            mask |= 1 << pos[(min(u, v), max(u, v))]
        return cls(j, mask)

    @classmethod
    def from_graph(cls, g: Graph) -> "SmallGraph":
        return cls.from_edges(g.n, g.edges())

    @property
    def n(self) -> int:
        return self.j

    def edges(self) -> list[tuple[int, int]]:
        pairs = pair_index(self.j)
        return [pairs[i] for i in iter_bits(self.mask)]

    @property
    def num_edges(self) -> int:
        return self.mask.bit_count()

    @cached_property
    def adj(self) -> tuple[int, ...]:
        adj = [0] * self.j
        for u, v in self.edges():
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @property
    def connected(self) -> bool:
        return _connected(self.adj)

    @property
    def is_tree(self) -> bool:
        return self.num_edges == self.j - 1 and self.connected

    def to_graph(self) -> Graph:
        return Graph(self.j, self.edges())

    @property
    def label(self) -> str:
        return f"{self.j}:{self.mask}"


def _connected(adj) -> bool:
    n = len(adj)
    if n <= 1:
        return True
    comp = frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~comp
        comp |= frontier
    return comp == (1 << n) - 1


def connected_signed_sum(adj) -> int:
    """Sum of (-1)^|A| over edge sets A that connect all vertices.

    Uses the subset recursion f(U) = sum_{B containing min U} c(B) f(U \\ B),
    where f(U) = [U spans no edge] is the full signed sum on U.
    """
    n = len(adj)
    if n == 0:
        return 0
    full = (1 << n) - 1
    f = [0] * (full + 1)
    c = [0] * (full + 1)
    for u_mask in range(full + 1):
        f[u_mask] = int(all(not (adj[v] & u_mask) for v in iter_bits(u_mask)))
    for u_mask in range(1, full + 1):
        low = u_mask & -u_mask
        rest = u_mask ^ low
        total = 0
        # proper subsets B of u_mask containing the lowest vertex: low | s, s subset of rest, s != rest
        s = rest
        while True:
            s = (s - 1) & rest
            b = low | s
            total += c[b] * f[u_mask ^ b]
            if s == 0:
                break
        c[u_mask] = f[u_mask] - total
    return c[full]


def ursell(graph) -> Fraction:
    """Ursell function: signed connected spanning edge-set count over |V|!."""
    adj = graph.adj if hasattr(graph, "adj") else graph
    return Fraction(connected_signed_sum(adj), math.factorial(len(adj)))


@dataclass(frozen=True)
class CatalogClass:
    graph: SmallGraph
    multiplicity: int
    ursell: Fraction

    @property
    def j(self) -> int:
        return self.graph.j

    @property
    def num_edges(self) -> int:
        return self.graph.num_edges

    @property
    def is_tree(self) -> bool:
        return self.graph.num_edges == self.graph.j - 1


def _grow(prev: list[SmallGraph], j: int) -> list[SmallGraph]:
    seen = _iso.IsoClassifier()
    out = []
    for rep in prev:
        base = [(u, v) for u, v in rep.edges()]
        for nb in range(1, 1 << (j - 1)):
            edges = base + [(u, j - 1) for u in iter_bits(nb)]
            g = SmallGraph.from_edges(j, edges)
            if seen.add(g.adj):
                out.append(g)
    return out


def _make_class(g: SmallGraph) -> CatalogClass:
    aut = _iso.automorphism_count(g.adj)
    return CatalogClass(g, math.factorial(g.j) // aut, ursell(g))


def cache_dir() -> Path:
    return Path(os.environ.get(CACHE_ENV) or Path.home() / ".cache" / "clusterbound")


def _cache_path(j: int) -> Path:
    return cache_dir() / f"catalog-v{CACHE_VERSION}-j{j}.txt"


def write_catalog_file(path: Path, j: int, classes: list[CatalogClass]) -> None:
    lines = [f"clusterbound-catalog v{CACHE_VERSION} j={j} classes={len(classes)}"]
    for c in classes:
        lines.append(
            f"{c.j} {c.graph.mask} {c.num_edges} {c.multiplicity} {c.ursell.numerator} {c.ursell.denominator}"
        )
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text("\n".join(lines) + "\n", encoding="ascii")
    tmp.replace(path)


def read_catalog_file(path: Path, j: int) -> list[CatalogClass]:
    lines = path.read_text(encoding="ascii").splitlines()
    header = lines[0].split()
    if header[:2] != ["clusterbound-catalog", f"v{CACHE_VERSION}"] or header[2] != f"j={j}":
        raise ValueError(f"{path}: unexpected catalog header {lines[0]!r}")
    count = int(header[3].split("=")[1])
    out = []
    for line in lines[1:]:
        jj, mask, m, mult, num, den = map(int, line.split())
        g = SmallGraph(jj, mask)
        if jj != j or g.num_edges != m:
            raise ValueError(f"{path}: corrupt record {line!r}")
        out.append(CatalogClass(g, mult, Fraction(num, den)))
    if len(out) != count:
        raise ValueError(f"{path}: expected {count} records, found {len(out)}")
    return out


class SmallGraphCatalog:
    """Connected graphs on j <= j_max vertices, grouped by isomorphism class.

    Levels are built lazily; ``use_cache=False`` skips the on-disk cache.
    """

    def __init__(self, j_max: int = J_MAX, use_cache: bool = True):
        if j_max < 1:
            raise ValueError("j_max must be at least 1")
        self.j_max = j_max
        self.use_cache = use_cache
        self._levels: dict[int, list[CatalogClass]] = {}

    def classes(self, j: int) -> list[CatalogClass]:
        if not 1 <= j <= self.j_max:
            raise ValueError(f"j={j} outside catalog range 1..{self.j_max}")
        if j not in self._levels:
            self._levels[j] = self._load(j)
        return self._levels[j]

    def _load(self, j: int) -> list[CatalogClass]:
        path = _cache_path(j)
        if self.use_cache and path.exists():
            try:
                return read_catalog_file(path, j)
            except (OSError, ValueError) as exc:
                log.warning("ignoring catalog cache %s: %s", path, exc)
        if j == 1:
            reps = [SmallGraph(1, 0)]
        else:
            reps = _grow([c.graph for c in self.classes(j - 1)], j)
        classes = sorted((_make_class(g) for g in reps), key=lambda c: (c.num_edges, c.graph.mask))
        if self.use_cache:
            try:
                write_catalog_file(path, j, classes)
            except OSError as exc:
                log.warning("could not write catalog cache %s: %s", path, exc)
        return classes

    def trees(self, j: int) -> list[CatalogClass]:
        return [c for c in self.classes(j) if c.is_tree]

    def labeled_count(self, j: int) -> int:
        return sum(c.multiplicity for c in self.classes(j))

    def labeled_tree_count(self, j: int) -> int:
        return sum(c.multiplicity for c in self.trees(j))


def iter_labeled_connected(j: int) -> Iterator[SmallGraph]:
    """Every connected labelled graph on ``{0..j-1}`` by direct mask scan."""
    for mask in range(1 << len(pair_index(j))):
        g = SmallGraph(j, mask)
        if g.connected:
            yield g


_default: SmallGraphCatalog | None = None


def default_catalog() -> SmallGraphCatalog:
    global _default
    if _default is None:
        _default = SmallGraphCatalog()
    return _default
