"""
Smooth and singular components of Springer fibers for x^2 = 0.

Components are indexed by maximal link patterns. This package decides
smoothness, computes the components of the singular locus directly from
admissible pairs of arcs, and checks every answer against a brute-force
orbit-graph oracle.
"""

from __future__ import annotations

from .errors import (
    IncomparableError,
    NotMaximalError,
    ParseError,
    PatternError,
    ScopeError,
    SizeLimitError,
    SpringerError,
    TableauError,
)
from .linkpattern import (
    LinkPattern,
    bridges,
    con,
    concatenate,
    contract_arc,
    crossings,
    enumerate_patterns,
    is_maximal,
    leq,
    maximal_completion,
    omega_o,
    parse,
    projection,
    rank_matrix,
    rho,
    shift,
    tau_star,
)
from .orbitgraph import build_graph, sing_components_oracle, smooth_by_graph
from .singdirect import basic_sing_element, find_admissible_pairs, is_admissible, sing_any, sing_direct
from .tableau import TwoColumnTableau, is_smooth, parse_tableau, rho_T

__version__ = "0.1.0"

__all__ = [
    "IncomparableError", "NotMaximalError", "ParseError", "PatternError", "ScopeError",
    "SizeLimitError", "SpringerError", "TableauError",
    "LinkPattern", "bridges", "con", "concatenate", "contract_arc", "crossings",
    "enumerate_patterns", "is_maximal", "leq", "maximal_completion", "omega_o", "parse",
    "projection", "rank_matrix", "rho", "shift", "tau_star",
    "build_graph", "sing_components_oracle", "smooth_by_graph",
    "basic_sing_element", "find_admissible_pairs", "is_admissible", "sing_any", "sing_direct",
    "TwoColumnTableau", "is_smooth", "parse_tableau", "rho_T",
]
