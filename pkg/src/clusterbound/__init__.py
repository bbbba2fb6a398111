"""Exact counting and certified cluster-expansion bounds for independent sets
and matchings in regular graphs."""
from .canonical import (
    Certificate,
    ClusterType,
    KPReport,
    dominance_certificate,
    embedding_count,
    enumerate_cluster_types,
    exact_xi,
    kp_report,
    polymer_weight,
    truncated_log_xi,
)
from .catalog import SmallGraph, SmallGraphCatalog, default_catalog, ursell
from .census import density_t, hom_count, inj_count, sub_count
from .counting import CoefficientProfile, independence_profile, matching_profile
from .graph6 import Graph6Error, encode_graph6, parse_graph6
from .graphs import DisjointCopies, Graph, GraphSpec, construct, parse_spec
from .interval import Interval
from .monomer_dimer import clique_min_certificate, exact_md_inequality, md_cluster_terms, md_truncated_log
from .verdict import DivergentRegimeError, Verdict
from .verify import moore_vertex_count, optimality_scan, verify_dominance

__version__ = "0.1.0"
