"""Membership of concrete forms in a stratum.

For forms f' in x1..xn, a stratum's conditions are read at the generic
coordinate change g f': r in Z must vanish at the coefficients of g f' for
every g, and b in N must not vanish for generic g.  Both are decided
exactly through orbit closures at level max(m, n): r(g f') vanishes
identically in g iff every element of E(r) vanishes at the coefficients of
f'.
"""

from __future__ import annotations

from ..core.monomial import Monomial
from .closure import orbit_closure_E
from .params import evaluate

__all__ = ["coefficient_values", "in_stratum"]


def coefficient_values(forms, zero):
    """Variable assignment c_{i,alpha} -> coefficient of x^alpha in forms[i-1]."""
    forms = list(forms)

    def values(key):
        if key[0] != "c":
            raise ValueError(f"cannot specialize variable {key}")
        _, i, alpha = key
        return forms[i - 1].coefficient(Monomial.from_dense(alpha)) if i <= len(forms) else zero

    return values


def _vanishes_identically(r, level, values, zero) -> bool:
    return all(evaluate(e, values, zero) == zero for e in orbit_closure_E(r, level))


def in_stratum(stratum, forms, n: int, characteristic: int, zero) -> bool:
    """Whether the forms (supported on x1..xn, coefficients in a field of the
    given characteristic with zero element ``zero``) satisfy the stratum."""
    if characteristic not in stratum.Y:
        return False
    level = max(stratum.m, n)
    values = coefficient_values(forms, zero)
    if not all(_vanishes_identically(r, level, values, zero) for r in stratum.Z):
        return False
    return not any(_vanishes_identically(b, level, values, zero) for b in stratum.N)
