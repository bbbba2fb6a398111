"""Exact independence and matching coefficient profiles.

All arithmetic is over Python integers and ``Fraction``; nothing here
touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Sequence

from .graphs import MAX_VERTICES, DisjointCopies, Graph, GraphLike, component_classes, iter_bits, line_graph


class ProfileKind(str, Enum):
    INDEPENDENT_SETS = "is"
    MATCHINGS = "match"


@dataclass(frozen=True)
class CoefficientProfile:
    kind: ProfileKind
    coeffs: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    @property
    def total(self) -> int:
        return sum(self.coeffs)

    def evaluate(self, lam) -> Fraction:
        return evaluate(self, lam)


def _trim(p: list[int]) -> list[int]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def convolve(a: Sequence[int], b: Sequence[int], k_max: int | None = None) -> list[int]:
    size = len(a) + len(b) - 1
    if k_max is not None:
        size = min(size, k_max + 1)
    out = [0] * size
    for i, x in enumerate(a):
        if not x or i >= size:
            continue
        for j, y in enumerate(b[: size - i]):
            out[i + j] += x * y
    return _trim(out)


def poly_power(p: Sequence[int], e: int, k_max: int | None = None) -> list[int]:
    result = [1]
    base = list(p)
    while e:
        if e & 1:
            result = convolve(result, base, k_max)
        e >>= 1
        if e:
            base = convolve(base, base, k_max)
    return result


def _independence_poly_connected(g: Graph) -> list[int]:
    adj = g.adj
    memo: dict[int, list[int]] = {}

    def comps(mask: int) -> list[int]:
        out = []
        while mask:
            low = mask & -mask
            comp = frontier = low
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= adj[v]
                frontier = nxt & mask & ~comp
                comp |= frontier
            out.append(comp)
            mask &= ~comp
        return out

    def poly(mask: int) -> list[int]:
        if mask in memo:
            return memo[mask]
        parts = comps(mask)
        if len(parts) > 1:
            out = [1]
            for part in parts:
                out = convolve(out, poly(part))
        else:
            best, best_deg = -1, -1
            for v in iter_bits(mask):
                deg = (adj[v] & mask).bit_count()
                if deg > best_deg:
                    best, best_deg = v, deg
            if best_deg <= 0:
                size = mask.bit_count()
                out = [comb(size, k) for k in range(size + 1)]
            else:
                without = poly(mask & ~(1 << best))
                with_v = poly(mask & ~(1 << best) & ~adj[best])
                out = list(without) + [0] * max(0, len(with_v) + 1 - len(without))
                for k, c in enumerate(with_v):
                    out[k + 1] += c
                out = _trim(out)
        memo[mask] = out
        return out

    return poly((1 << g.n) - 1) if g.n else [1]


def _profile(g: GraphLike, per_component, kind: ProfileKind, k_max, max_n) -> CoefficientProfile:
    out = [1]
    for comp, mult in component_classes(g):
        if comp.n > max_n:
            raise ValueError(f"component with {comp.n} vertices exceeds configured maximum {max_n}")
        out = convolve(out, poly_power(per_component(comp), mult, k_max), k_max)
    return CoefficientProfile(kind, tuple(out))


def independence_profile(g: GraphLike, k_max: int | None = None, max_n: int = MAX_VERTICES) -> CoefficientProfile:
    """(i_0, i_1, ...) by vertex branching with component splitting and memoisation.

    ``k_max`` truncates the profile (useful for huge disjoint unions).
    """
    return _profile(g, _independence_poly_connected, ProfileKind.INDEPENDENT_SETS, k_max, max_n)


def matching_profile(g: GraphLike, k_max: int | None = None, max_n: int = MAX_VERTICES) -> CoefficientProfile:
    """(m_0, m_1, ...) computed as the independence profile of the line graph."""
    def per_component(comp: Graph) -> list[int]:
        return _independence_poly_connected(line_graph(comp))

    return _profile(g, per_component, ProfileKind.MATCHINGS, k_max, max(max_n, 4 * max_n))


def matching_profile_direct(g: Graph) -> CoefficientProfile:
    """Matching profile by edge branching: m(E) = m(E - e) + x m(E - N[e])."""
    edges = g.edges()
    incident = []
    for u, v in edges:
        mask = 0
        for i, (a, b) in enumerate(edges):
            if a in (u, v) or b in (u, v):
                mask |= 1 << i
        incident.append(mask)
    memo: dict[int, list[int]] = {0: [1]}

    def poly(mask: int) -> list[int]:
        if mask in memo:
            return memo[mask]
        e = (mask & -mask).bit_length() - 1
        without = poly(mask & ~(1 << e))
        with_e = poly(mask & ~incident[e])
        out = list(without) + [0] * max(0, len(with_e) + 1 - len(without))
        for k, c in enumerate(with_e):
            out[k + 1] += c
        memo[mask] = out
        return out

    return CoefficientProfile(ProfileKind.MATCHINGS, tuple(_trim(poly((1 << len(edges)) - 1))))


def evaluate(profile: CoefficientProfile | Sequence[int], lam) -> Fraction:
    """Exact value of sum_k coeffs[k] lam^k at a rational lam."""
    coeffs = profile.coeffs if isinstance(profile, CoefficientProfile) else profile
    lam = Fraction(lam)
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * lam + c
    return acc


@dataclass(frozen=True)
class RatioBounds:
    t: int
    lower: Fraction
    upper: Fraction


def ratio_bounds(n: int, d: int, t: int) -> RatioBounds:
    """Free-volume bounds on i_t(G) / i_{t+1}(G) for d-regular G on n vertices.

    Each t-set extends by one vertex in at most n - t and at least
    n - (d+1)t ways, so (t+1)/n <= i_t/i_{t+1} <= (t+1)/(n - (d+1)t).
    """
    if t < 0 or n <= (d + 1) * t:
        raise ValueError(f"bound is vacuous unless n > (d+1)t (n={n}, d={d}, t={t})")
    return RatioBounds(t, Fraction(t + 1, n), Fraction(t + 1, n - (d + 1) * t))
