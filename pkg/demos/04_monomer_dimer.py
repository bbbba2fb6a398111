"""Monomer-dimer partition functions: cubic graphs against copies of K4.

Exact comparison works at any activity.  The cluster certificate only
applies at very small activity, where the triangle count decides the sign.
"""
from fractions import Fraction

from clusterbound.corpus import connected_cubic_graphs
from clusterbound.monomer_dimer import (
    OutOfRangeError, clique_min_certificate, md_cluster_terms, md_comparison, md_truncated_log,
)

graphs = connected_cubic_graphs(8)
for lam in (Fraction(1, 2000), Fraction(1, 10), Fraction(5)):
    print(f"lambda={lam}: signs of Z_G^4 - Z_K4^n:", [md_comparison(g, lam) for g in graphs])

g = graphs[0]
terms = md_cluster_terms(g)
print("cluster terms:", terms.triangle_clusters, "triangles,", terms.path_clusters, "paths,", terms.star_clusters, "stars")
print("truncated log Z at 1/2000:", md_truncated_log(g, Fraction(1, 2000)))

try:
    clique_min_certificate(g, Fraction(1, 2000))
except OutOfRangeError as exc:
    print("certificate at 1/2000:", exc)

for g in graphs:
    cert = clique_min_certificate(g, Fraction(1, 500000))
    print(cert.verdict.value, f"{float(cert.lower_bound):.3e}", f"triangle gap {cert.triangle_gap}")
