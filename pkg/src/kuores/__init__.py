"""Exact composed resultants, finite-field factorization and irreducibility checks."""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .expr_parse import parse_poly, print_poly
from .factor_ff import factor, is_irreducible, prime_power_structure, random_irreducible
from .campaign import theorem_campaign
from .galois_harness import minimal_polynomial, splitting_field, transitivity_check
from .newton_polygon import (
    dumas_irreducible, newton_polygon, prime_power_over_series, weighted_initial_part,
)
from .numeric import QQ, ExtField, PrimeField, field_pow, frobenius, mod_inverse
from .polynomial import Poly, PolyRing
from .resultant import kuo_resultant, resultant

__all__ = [
    "QQ",
    "ExtField",
    "Poly",
    "PolyRing",
    "PrimeField",
    "dumas_irreducible",
    "factor",
    "field_pow",
    "frobenius",
    "is_irreducible",
    "kuo_resultant",
    "minimal_polynomial",
    "mod_inverse",
    "newton_polygon",
    "parse_poly",
    "prime_power_over_series",
    "prime_power_structure",
    "print_poly",
    "random_irreducible",
    "resultant",
    "splitting_field",
    "theorem_campaign",
    "transitivity_check",
    "weighted_initial_part",
]
