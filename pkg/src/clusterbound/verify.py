"""Batch checks of extremal statements over graph corpora.

Conjectured or asymptotic inequalities are treated as expectations: a
violation is reported as an alarm, never raised.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable

from .census import inj_count
from .counting import CoefficientProfile, independence_profile, matching_profile
from .graphs import (
    Graph, GraphLike, GraphSpec, construct, cycle, girth, is_connected, is_isomorphic, regular_degree,
    same_components,
)


class Comparison(str, Enum):
    LE = "LE"
    EQ = "EQ"
    GT = "GT"


class Direction(str, Enum):
    MAX = "max"
    MIN = "min"


def moore_vertex_count(d: int, g: int) -> int:
    """Moore bound on the order of a d-regular graph of girth g."""
    if d < 2 or g < 3:
        raise ValueError("need d >= 2 and g >= 3")
    if g % 2:
        r = (g - 1) // 2
        return 1 + d * sum((d - 1) ** i for i in range(r))
    r = g // 2
    return 2 * sum((d - 1) ** i for i in range(r))


def reference_graph(spec: GraphSpec, n: int) -> GraphLike:
    from .graphs import DisjointCopies
    h = construct(spec)
    if n % h.n:
        raise ValueError(f"n={n} is not a multiple of |V({spec})|={h.n}")
    return DisjointCopies(h, n // h.n)


@dataclass
class GraphResult:
    index: int
    graph6: str
    rejected: str | None = None
    comparisons: list[Comparison] = field(default_factory=list)
    strict_expected: list[bool] = field(default_factory=list)
    alarms: list[str] = field(default_factory=list)
    coefficients: tuple[int, ...] = ()


@dataclass
class DominanceReport:
    n: int | None
    d: int | None
    reference: str
    kind: str
    direction: str
    results: list[GraphResult] = field(default_factory=list)

    @property
    def alarms(self) -> list[str]:
        return [f"graph {r.index}: {a}" for r in self.results for a in r.alarms]

    def summary(self) -> dict:
        accepted = [r for r in self.results if r.rejected is None]
        return {
            "graphs": len(self.results),
            "accepted": len(accepted),
            "rejected": len(self.results) - len(accepted),
            "violations": sum(c == Comparison.GT for r in accepted for c in r.comparisons),
            "alarms": len(self.alarms),
            "reference": self.reference,
            "kind": self.kind,
            "direction": self.direction,
        }


def _profile(g: GraphLike, kind: str, k_max: int | None) -> CoefficientProfile:
    if kind == "is":
        return independence_profile(g, k_max=k_max)
    if kind == "match":
        return matching_profile(g, k_max=k_max)
    raise ValueError(f"unknown kind {kind!r}")


def compare_graph(g: Graph, spec: GraphSpec, kind: str = "is", direction: str = "max",
                  girth_min: int | None = None, k_max: int | None = None, index: int = 0,
                  graph6: str = "") -> GraphResult:
    """Exact coefficient-wise comparison of one graph against the reference union."""
    res = GraphResult(index, graph6)
    h = construct(spec)
    d = regular_degree(h)
    if regular_degree(g) != d:
        res.rejected = f"not {d}-regular"
        return res
    if g.n % h.n:
        res.rejected = f"n={g.n} is not a multiple of {h.n}"
        return res
    gg = girth(g)
    if girth_min is not None and gg < girth_min:
        res.rejected = f"girth {gg} < {girth_min}"
        return res
    ref = reference_graph(spec, g.n)
    pg = _profile(g, kind, k_max)
    ph = _profile(ref, kind, k_max)
    top = max(len(pg), len(ph)) if k_max is None else k_max + 1
    sign = 1 if direction == "max" else -1
    identical = same_components(g, ref)
    hg = girth(h)
    for k in range(top):
        a, b = pg[k], ph[k]
        diff = sign * (a - b)
        cmp = Comparison.EQ if diff == 0 else Comparison.LE if diff < 0 else Comparison.GT
        res.comparisons.append(cmp)
        strict = (not identical and kind == "is" and direction == "max" and hg != float("inf")
                  and hg <= k <= g.n // 2)
        res.strict_expected.append(strict)
        if cmp == Comparison.GT:
            res.alarms.append(f"k={k}: {a} vs reference {b} violates the expected {direction} inequality")
        elif strict and cmp == Comparison.EQ:
            res.alarms.append(f"k={k}: equality where strict inequality is expected")
    res.coefficients = pg.coeffs
    return res


def verify_dominance(graphs: Iterable[Graph], spec: GraphSpec, kind: str = "is", direction: str = "max",
                     girth_min: int | None = None, k_max: int | None = None) -> DominanceReport:
    report = DominanceReport(None, regular_degree(construct(spec)), str(spec), kind, direction)
    for i, g in enumerate(graphs):
        res = compare_graph(g, spec, kind, direction, girth_min, k_max, index=i)
        if report.n is None and res.rejected is None:
            report.n = g.n
        report.results.append(res)
    return report


@dataclass(frozen=True)
class OptimalityGap:
    graph_id: int
    density: Fraction
    reference_density: Fraction
    gap: Fraction
    equal_to_reference: bool


def optimality_scan(graphs: Iterable[Graph], h: Graph, g: int) -> list[OptimalityGap]:
    """inj(C_g, G)/n against inj(C_g, H)/|H| for connected d-regular graphs of girth >= g-1.

    For g = 4 and H = K_{d,d} every other graph obeys inj(C_4, G)/n <= d(d-1)^2 - 1;
    this is asserted.
    """
    d = regular_degree(h)
    cg = cycle(g)
    ref = Fraction(inj_count(cg, h), h.n)
    out = []
    for i, G in enumerate(graphs):
        if not is_connected(G):
            raise ValueError(f"graph {i} is disconnected")
        if regular_degree(G) != d:
            raise ValueError(f"graph {i} is not {d}-regular")
        if girth(G) < g - 1:
            raise ValueError(f"graph {i} has girth below {g - 1}")
        dens = Fraction(inj_count(cg, G), G.n)
        same = G.n == h.n and is_isomorphic(G, h)
        if g == 4 and not same and dens > d * (d - 1) ** 2 - 1:
            raise AssertionError(f"graph {i}: C_4 density {dens} exceeds d(d-1)^2 - 1")
        out.append(OptimalityGap(i, dens, ref, ref - dens, same))
    return out
