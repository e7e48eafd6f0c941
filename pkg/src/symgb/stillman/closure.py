"""GL-orbit closures E_m(r) of parametric elements."""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from ..core.monomial import Monomial
from ..core.polynomial import Polynomial
from .params import cvar, var_key

__all__ = ["orbit_closure_E", "substitute_g", "transform_coefficient"]


def _compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _row_splits(total, caps):
    """Compositions of ``total`` bounded componentwise by ``caps``."""
    if not caps:
        if total == 0:
            yield ()
        return
    rest_cap = sum(caps[1:])
    for first in range(min(total, caps[0]), max(0, total - rest_cap) - 1, -1):
        for rest in _row_splits(total - first, caps[1:]):
            yield (first,) + rest


def _tables(rows, cols):
    """Nonnegative integer matrices with the given row and column sums."""
    if not rows:
        if not any(cols):
            yield ()
        return
    for row in _row_splits(rows[0], cols):
        left = tuple(c - r for c, r in zip(cols, row))
        for more in _tables(rows[1:], left):
            yield (row,) + more


@lru_cache(maxsize=None)
def transform_coefficient(gamma: tuple, alpha: tuple, m: int) -> tuple:
    """Coefficient of x^alpha in prod_h (sum_j g_hj x_j)^gamma_h as a tuple of
    (g-monomial, integer) pairs; g_hj is encoded as index (h-1)*m + j."""
    out = {}
    for table in _tables(gamma, alpha):
        coeff = 1
        exps = []
        for h, row in enumerate(table, start=1):
            mult = factorial(sum(row))
            for j, e in enumerate(row, start=1):
                mult //= factorial(e)
                if e:
                    exps.append(((h - 1) * m + j, e))
            coeff *= mult
        mono = Monomial._raw(tuple(sorted(exps)))
        out[mono] = out.get(mono, 0) + coeff
    return tuple(out.items())


def _dense(alpha: tuple, m: int) -> tuple:
    return tuple(alpha) + (0,) * (m - len(alpha))


@lru_cache(maxsize=None)
def _image(key: tuple, m: int) -> tuple:
    """g^-1 c_{i,alpha} expanded as ((g-monomial, parametric element), ...)."""
    _, i, alpha = key
    d = sum(alpha)
    a = _dense(alpha, m)
    out = {}
    for gamma in _compositions(d, m):
        c = cvar(i, gamma)
        for gmono, coeff in transform_coefficient(gamma, a, m):
            term = c.scale(coeff)
            out[gmono] = out[gmono] + term if gmono in out else term
    return tuple((gm, p) for gm, p in out.items() if p)


def substitute_g(r: Polynomial, m: int) -> dict:
    """g^-1 r as a dict from g-monomials to parametric elements."""
    total = {}
    for mono, coeff in r.terms:
        acc = {Monomial._raw(()): Polynomial.constant(coeff)}
        for idx, e in mono.exps:
            key = var_key(idx)
            if key[0] != "c":
                raise ValueError(f"unexpected variable {key} in an orbit closure")
            if len(key[2]) > m:
                raise ValueError(f"c-variable {key} is not in A^({m})")
            image = _image(key, m)
            for _ in range(e):
                nxt = {}
                for g1, p1 in acc.items():
                    for g2, p2 in image:
                        g = g1 * g2
                        v = p1 * p2
                        nxt[g] = nxt[g] + v if g in nxt else v
                acc = nxt
        for g, p in acc.items():
            total[g] = total[g] + p if g in total else p
    return {g: p for g, p in total.items() if p}


@lru_cache(maxsize=4096)
def _closure(r: Polynomial, m: int) -> tuple:
    seen = {}
    for p in substitute_g(r, m).values():
        seen.setdefault(p, None)
    return tuple(seen)


def orbit_closure_E(r: Polynomial, m: int) -> list:
    """E_m(r): the distinct nonzero A-coefficients of g^-1 r, where g is an
    m x m matrix of indeterminates."""
    if not r:
        return []
    return list(_closure(r, m))
