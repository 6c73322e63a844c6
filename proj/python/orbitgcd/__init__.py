"""Generalized-gcd heights along orbits of rational maps of projective space."""

from ._orbitgcd import (
    ArityError,
    BudgetExceeded,
    ConfigError,
    DomainError,
    ParseError,
    __version__,
    apply_map,
    arithmetic_degree,
    bcz_closed_form,
    builtin_names,
    degree_sequence,
    monomial_degrees,
    parse_poly,
    poly_gcd,
    run_builtin,
    run_config,
    subscheme_height,
    topological_degree,
    weil_height,
)

__all__ = [
    "ArityError",
    "BudgetExceeded",
    "ConfigError",
    "DomainError",
    "ParseError",
    "__version__",
    "apply_map",
    "arithmetic_degree",
    "bcz_closed_form",
    "builtin_names",
    "degree_sequence",
    "monomial_degrees",
    "parse_poly",
    "poly_gcd",
    "run_builtin",
    "run_config",
    "subscheme_height",
    "topological_degree",
    "weil_height",
]
