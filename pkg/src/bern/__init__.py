"""Exact Bernoulli numbers and polynomials by recurrence, Stirling and determinant forms."""
from .bernoulli import (
    METHODS,
    bern_number,
    bern_number_determinant,
    bern_number_recurrence,
    bern_number_stirling,
    bern_poly,
    bern_poly_determinant,
    bern_poly_recurrence,
    bern_poly_stirling,
    verify_all,
)
from .rational import Rational, RationalPolynomial, format_polynomial, format_rational

__all__ = [
    "METHODS",
    "Rational",
    "RationalPolynomial",
    "bern_number",
    "bern_number_determinant",
    "bern_number_recurrence",
    "bern_number_stirling",
    "bern_poly",
    "bern_poly_determinant",
    "bern_poly_recurrence",
    "bern_poly_stirling",
    "format_polynomial",
    "format_rational",
    "verify_all",
]
