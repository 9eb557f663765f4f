"""Exact counting and extremal-coloring search for rainbow and monochromatic
solutions of ax + by = cz over [n] and Z_n."""

from ._core import (
    Coloring,
    GroundSet,
    LinearEquation,
    SearchGuardError,
    SurjectivityError,
    UnsupportedEquationError,
    canonical_form,
    classify,
    congruence_solution_count,
    count,
    count_by_class,
    count_fast,
    count_total_solutions,
    density_profile,
    enumerate_solutions,
    exhaustive_search,
    format_coloring,
    is_solution,
    local_search,
    mod3_cyclic,
    mod3_interval,
    mod5_schur_cyclic,
    parse_coloring,
    periodic,
    progression_to_solution,
    random_coloring,
    verify_suite,
)

__all__ = [
    "Coloring",
    "GroundSet",
    "LinearEquation",
    "SearchGuardError",
    "SurjectivityError",
    "UnsupportedEquationError",
    "canonical_form",
    "classify",
    "congruence_solution_count",
    "count",
    "count_by_class",
    "count_fast",
    "count_total_solutions",
    "density_profile",
    "enumerate_solutions",
    "exhaustive_search",
    "format_coloring",
    "is_solution",
    "local_search",
    "mod3_cyclic",
    "mod3_interval",
    "mod5_schur_cyclic",
    "parse_coloring",
    "periodic",
    "progression_to_solution",
    "random_coloring",
    "verify_suite",
]
