"""Exact computation in quotients of path algebras by property-F relations,
through their isomorphism with matrix rings over free products."""

from .algebra import Poly, cyclotomic, extract_h_kappa, is_property_F, minpoly_4cos2
from .cohn import cohn_check, cohn_family, rewrite_normal_form
from .coxeter import INF, CoxeterMatrix, coxeter_analyze, coxeter_matrix, coxeter_to_graph, from_rows
from .errors import (
    NoSpanningTree,
    NotConnected,
    ParseError,
    PathAlgError,
    PropertyFViolation,
)
from .freeprod import Factor, FreeProduct, FreeProductElement, Letter
from .graph import DirectedEdge, Graph, Path, build_graph, is_connected, spanning_tree
from .iso import IsoContext, Psi, build_context, describe_Q, equal_in_R, phi, psi, verify_context
from .matrix import MatrixElement, unit_matrix
from .parsing import parse_expression, parse_graph_file
from .paths import PathAlgebraElement, PolyFamily, geodesic_element, vee

__all__ = [
    "INF", "CoxeterMatrix", "DirectedEdge", "Factor", "FreeProduct", "FreeProductElement", "Graph",
    "IsoContext", "Letter", "MatrixElement", "NoSpanningTree", "NotConnected", "ParseError",
    "Path", "PathAlgError", "PathAlgebraElement", "Poly", "PolyFamily", "PropertyFViolation",
    "Psi", "build_context", "build_graph", "cohn_check", "cohn_family", "coxeter_analyze",
    "coxeter_matrix", "coxeter_to_graph", "cyclotomic", "describe_Q", "equal_in_R",
    "extract_h_kappa", "from_rows", "geodesic_element", "is_connected", "is_property_F", "minpoly_4cos2",
    "parse_expression", "parse_graph_file", "phi", "psi", "rewrite_normal_form", "spanning_tree", "unit_matrix", "vee", "verify_context",
]
