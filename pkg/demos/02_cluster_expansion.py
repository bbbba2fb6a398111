"""Polymer weights, cluster types, and a certified interval for log Xi_k.

The weight of a j-point polymer sums (-1)^|E| t(F, G) over connected graphs F
on j vertices.  Trees contribute a graph-independent amount, so regular
graphs of the same degree differ first at the smallest cycle.
"""
from clusterbound.canonical import (
    enumerate_cluster_types, exact_xi, kp_report, log_xi_interval, penrose_bound, polymer_weight, truncated_log_xi,
)
from clusterbound.graphs import DisjointCopies, complete_bipartite, heawood, petersen

for name, g in [("K_{3,3}", complete_bipartite(3)), ("Petersen", petersen()), ("Heawood", heawood())]:
    ws = [polymer_weight(j, g) for j in range(2, 6)]
    print(name, [str(w) for w in ws])
    assert all(abs(w) <= penrose_bound(j, g.n, 3) for j, w in zip(range(2, 6), ws))

# Cluster types grow quickly with the excess (total polymer size minus support).
print("cluster types per excess:", [len(enumerate_cluster_types(e)) - len(enumerate_cluster_types(e - 1))
                                    for e in range(1, 5)])

# On a 10-vertex graph the convergence condition fails for every k >= 2.
small = kp_report(10, 3, 4)
print(f"n = 10: gamma = {float(small.gamma):.3e}, satisfied = {small.satisfied}")

# Many disjoint copies put k = 4 well inside the convergent regime.
big = DisjointCopies(petersen(), 10 ** 9)
rep = kp_report(big.n, 3, 4)
print(f"n = {big.n}: gamma = {float(rep.gamma):.3e}, satisfied = {rep.satisfied}")
for t in (2, 3, 4):
    tr = truncated_log_xi(big, 4, t)
    print(f"t={t}: [{float(tr.lo):.12e}, {float(tr.hi):.12e}] width {float(tr.width):.2e}")
exact = log_xi_interval(big, 4)
print("exact log Xi_4 lies in", f"[{float(exact.lo):.12e}, {float(exact.hi):.12e}]")
print("Xi_4 itself:", float(exact_xi(big, 4)))
