"""Certifying i_k(G) < i_k(H) from the truncated expansion.

Certificates need the convergent regime, so the graphs are replaced by
many disjoint copies.  The exact counts of the copies are still cheap and
serve as a check.
"""
from clusterbound.canonical import dominance_certificate
from clusterbound.corpus import cubic_girth_at_least
from clusterbound.counting import independence_profile
from clusterbound.graphs import DisjointCopies, girth, complete_bipartite, cycle, heawood, petersen
from clusterbound.verdict import DivergentRegimeError

n = 10 ** 13 * 30
pairs = [
    ("C5 vs C4", DisjointCopies(cycle(5), n // 5), DisjointCopies(cycle(4), n // 4)),
    ("Petersen vs K33", DisjointCopies(petersen(), n // 10), DisjointCopies(complete_bipartite(3), n // 6)),
]
for label, g, h in pairs:
    for k in range(2, 6):
        cert = dominance_certificate(g, h, k)
        a, b = independence_profile(g, k_max=k)[k], independence_profile(h, k_max=k)[k]
        print(f"{label} k={k}: {cert.verdict.value:<22} lower bound {float(cert.lower_bound):+.3e}  exact i_k(G) < i_k(H): {a < b}")

# Girth 5 graphs against the Heawood graph need a truncation at t = 6.
g = next(x for x in cubic_girth_at_least(14, 5) if girth(x) == 5)
m = 10 ** 20
cert = dominance_certificate(DisjointCopies(g, m), DisjointCopies(heawood(), m), 6)
a, b = independence_profile(g, k_max=6)[6], independence_profile(heawood(), k_max=6)[6]
print("girth-5 cubic on 14 vs Heawood, k=6:", cert.verdict.value, f"t={cert.t}", f"(one copy: i_6 = {a} vs {b})")

# A small graph is outside the convergent regime and the certificate refuses.
try:
    dominance_certificate(DisjointCopies(cycle(8), 1), DisjointCopies(cycle(4), 2), 3)
except DivergentRegimeError as exc:
    print("C8 vs 2 C4 on 8 vertices:", exc)
