"""Exact certificates for Kummer/Artin-Schreier class independence,
p-socles and p-Frattini quotients, and linear disjointness."""

from ._socle import (
    ParseError,
    SemanticError,
    SocleError,
    as_rank,
    as_relative_rank,
    disjoint,
    frattini,
    kummer_rank,
    kummer_relative_rank,
    membership,
    relative_frattini,
    run_scenario,
    scenario_names,
    socle,
    wp_solve,
)

__all__ = [
    "ParseError",
    "SemanticError",
    "SocleError",
    "as_rank",
    "as_relative_rank",
    "disjoint",
    "frattini",
    "kummer_rank",
    "kummer_relative_rank",
    "membership",
    "relative_frattini",
    "run_scenario",
    "scenario_names",
    "socle",
    "wp_solve",
]
