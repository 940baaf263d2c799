"""Co-maximal ideal graphs of finite commutative rings."""

from .cliques import clique_number, independence_number, max_clique, max_independent_set
from .factors import FULL, LocalFactorSpec, ProductRingSpec, build_graph, spec_from_ring
from .graphs import Graph, degree_sequence, export, is_complete_bipartite, is_star, universal_vertices
from .kuratowski import SubdivisionWitness, verify_witness
from .planarity import PlanarityResult, is_planar
from .rings import (
    FiniteRing,
    IdealLattice,
    comaximal_graph,
    decompose,
    direct_product,
    enumerate_ideals,
    make_poly_quotient,
    make_zmod,
)

__all__ = [
    "FULL",
    "FiniteRing",
    "Graph",
    "IdealLattice",
    "LocalFactorSpec",
    "PlanarityResult",
    "ProductRingSpec",
    "SubdivisionWitness",
    "build_graph",
    "clique_number",
    "comaximal_graph",
    "decompose",
    "degree_sequence",
    "direct_product",
    "enumerate_ideals",
    "export",
    "independence_number",
    "is_complete_bipartite",
    "is_planar",
    "is_star",
    "make_poly_quotient",
    "make_zmod",
    "max_clique",
    "max_independent_set",
    "spec_from_ring",
    "universal_vertices",
    "verify_witness",
]
