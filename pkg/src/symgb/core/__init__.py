"""Exact coefficients, sparse grevlex polynomials and classical Groebner bases."""

from .classical import (
    buchberger_classical,
    display_order,
    divide_classical,
    is_groebner_basis,
    lead_monomials,
    monomial_min_gens,
    reduce_classical,
    s_polynomial,
)
from .fields import GF, QQ, ExtensionField, Field, FieldError, ModP, PrimeField, is_prime, parse_field
from .monomial import ONE, Monomial, Ordering, grevlex_cmp
from .parsing import ParseError, parse_polynomial, parse_terms
from .polynomial import Polynomial


def truncate(f: Polynomial, m: int) -> Polynomial:
    """The image f^(m) of ``f``: terms supported on x1..xm."""
    if m < 0:
        raise ValueError("truncation level must be nonnegative")
    return f.truncate(m)


__all__ = [
    "GF", "QQ", "ONE", "ExtensionField", "Field", "FieldError", "ModP", "Monomial",
    "Ordering", "ParseError", "Polynomial", "PrimeField", "buchberger_classical",
    "display_order", "divide_classical", "grevlex_cmp", "is_groebner_basis", "is_prime",
    "lead_monomials", "monomial_min_gens", "parse_field", "parse_polynomial",
    "parse_terms", "reduce_classical", "s_polynomial", "truncate",
]
