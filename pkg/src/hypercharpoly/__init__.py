"""Exact characteristic polynomials of hyperpaths, hyperstars and starlike
hypergraphs, with chip-firing and Macaulay-resultant cross-checks."""

__version__ = "0.1.0"

from .charpoly import (
    charpoly_path,
    charpoly_single_edge,
    charpoly_star,
    charpoly_starlike,
    expected_degree,
    h_iterate,
    mu,
)
from .chipfiring import Configuration, classify_stable, count_strata, critical_configs_Kk
from .firing_graph import build_firing_graph, check_firing_invariants, to_dot, validate_structure
from .hypergraph import (
    UniformHypergraph,
    eigen_system,
    make_hyperpath,
    make_hyperstar,
    make_single_edge,
    make_starlike,
)
from .oracle import charpoly_eval_oracle, macaulay_resultant, verify_formula
from .polyalg import FactoredCharPoly, NotPolynomial, TPoly, TRat, format_factored

__all__ = [
    "Configuration",
    "FactoredCharPoly",
    "NotPolynomial",
    "TPoly",
    "TRat",
    "UniformHypergraph",
    "build_firing_graph",
    "charpoly_eval_oracle",
    "charpoly_path",
    "charpoly_single_edge",
    "charpoly_star",
    "charpoly_starlike",
    "check_firing_invariants",
    "classify_stable",
    "count_strata",
    "critical_configs_Kk",
    "eigen_system",
    "expected_degree",
    "format_factored",
    "h_iterate",
    "macaulay_resultant",
    "make_hyperpath",
    "make_hyperstar",
    "make_single_edge",
    "make_starlike",
    "mu",
    "to_dot",
    "validate_structure",
    "verify_formula",
]
