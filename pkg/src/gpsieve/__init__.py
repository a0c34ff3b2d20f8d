"""Arithmetic sieves for flag-transitive generalized hexagons and octagons."""

from .factored import (
    FactoredInteger,
    compare,
    factor,
    factored_factorial,
    is_prime,
    legendre_valuation,
    render_scientific,
)
from .sieves import SieveResult, a_value, b_full, b_literal, b_value, sieve

__version__ = "0.1.0"

__all__ = [
    "FactoredInteger",
    "SieveResult",
    "a_value",
    "b_full",
    "b_literal",
    "b_value",
    "compare",
    "factor",
    "factored_factorial",
    "is_prime",
    "legendre_valuation",
    "render_scientific",
    "sieve",
]
