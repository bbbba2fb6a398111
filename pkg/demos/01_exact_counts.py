"""Counting independent sets and matchings exactly.

Every number printed here is an exact integer or Fraction.
"""
from fractions import Fraction

from clusterbound import independence_profile, matching_profile
from clusterbound.graphs import DisjointCopies, complete_bipartite, cycle, heawood, line_graph, petersen

# Independent-set counts i_k for a few 3-regular graphs on 6 and 14 vertices.
for name, g in [("K_{3,3}", complete_bipartite(3)), ("Heawood", heawood())]:
    print(name, independence_profile(g).coeffs)

# Disjoint unions are never materialised: the profile of c copies is a power.
many = DisjointCopies(complete_bipartite(3), 10 ** 6)
print("i_3 of a million copies of K_{3,3}:", independence_profile(many, k_max=3)[3])

# 2-regular graphs on 8 vertices: C8 against two 4-cycles.
print("i_4(C8) =", independence_profile(cycle(8))[4],
      " i_4(2 C4) =", independence_profile(DisjointCopies(cycle(4), 2))[4])

# Matchings are independent sets of the line graph.
p = petersen()
print("matchings of Petersen:", matching_profile(p).coeffs)
print("same via L(G):        ", independence_profile(line_graph(p)).coeffs)

# The normalised quantity that the cluster expansion works with.
g = heawood()
k = 4
xi = Fraction(independence_profile(g)[k]) / (Fraction(g.n ** k) / 24)
print(f"Xi_{k}(Heawood) = {xi} ~ {float(xi):.6f}")
