"""Radical membership and consistency over F_p (p prime or 0) in the
localization A^(m)[N^-1], and splitting of prime sets by such predicates."""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache

from sympy import factorint

from ..core.classical import buchberger_classical
from ..core.fields import GF, is_prime
from ..core.polynomial import Polynomial
from .closure import orbit_closure_E
from .constructible import ConstructibleZ, FiniteNonzero, CofiniteWithZero
from .params import alpha_support, param_str, variable

__all__ = [
    "HarvestMismatch",
    "radical_member",
    "consistent",
    "unit_ideal",
    "partition_primes",
    "RadicalPredicate",
    "ConsistencyPredicate",
    "VALIDATION_PRIMES",
]

#: non-harvested primes are spot-checked at this many random primes
VALIDATION_PRIMES = 3
_VALIDATION_RANGE = (10**4, 10**6)


class HarvestMismatch(RuntimeError):
    """A prime outside the harvested set disagrees with characteristic zero."""


def _check_char(p: int):
    if p != 0 and not is_prime(p):
        raise ValueError(f"characteristic {p} is neither 0 nor a prime")


def _check_level(elements, m: int):
    for a in elements:
        if alpha_support(a) > m:
            raise ValueError(f"{param_str(a)} is not in A^({m})")


def _to_field(p: int):
    if p == 0:
        return Fraction
    F = GF(p)
    return F.coerce


def _generators(Z, N, m, extra):
    gens = []
    for r in Z:
        gens.extend(orbit_closure_E(r, m))
    gens.extend(extra)
    if N:
        prod = Polynomial.constant(1)
        for b in N:
            prod = prod * b
        gens.append(variable(("u",)) * prod - 1)
    return gens


@lru_cache(maxsize=8192)
def _unit(gens: tuple, p: int) -> bool:
    conv = _to_field(p)
    polys = [q for q in (g.map_coefficients(conv) for g in gens) if q]
    if not polys:
        return False
    G = buchberger_classical(polys, stop_on_unit=True)
    return len(G) == 1 and G[0].lmon.is_one()


def _unit_traced(gens: tuple, harvest: set) -> bool:
    polys = [q for q in (g.map_coefficients(Fraction) for g in gens) if q]
    for q in polys:  # input leading coefficients are divided by, too
        _harvest(q.lc, harvest)
    if not polys:
        return False

    def hook(c):
        _harvest(c, harvest)

    G = buchberger_classical(polys, on_normalize=hook, stop_on_unit=True)
    return len(G) == 1 and G[0].lmon.is_one()


def _harvest(c, harvest: set):
    c = Fraction(c)
    for part in (abs(c.numerator), c.denominator):
        if part > 1:
            harvest.update(factorint(part))


def unit_ideal(Z, N, m: int, p: int, extra=()) -> bool:
    """Whether 1 lies in <E_m(Z), extra> inside F_p (x) A^(m)[N^-1]."""
    _check_char(p)
    return _unit(tuple(_generators(Z, N, m, extra)), p)


def radical_member(a: Polynomial, Z, N, m: int, p: int) -> bool:
    """Whether ``a`` lies in the radical of <E_m(Z)> in F_p (x) A^(m)[N^-1]
    (Rabinowitsch: 1 in <E_m(Z), t*a - 1, u*prod(N) - 1>)."""
    _check_char(p)
    _check_level([a, *Z, *N], m)
    return unit_ideal(Z, N, m, p, [variable(("t",)) * a - 1])


def consistent(Z, N, m: int, p: int) -> bool:
    """Whether 1 is not in <E_m(Z)> in F_p (x) A^(m)[N^-1]."""
    _check_char(p)
    _check_level([*Z, *N], m)
    return not unit_ideal(Z, N, m, p)


class _Predicate:
    """A per-characteristic predicate given by a unit-ideal test; the truth
    value is ``unit`` (or its negation when ``negate``)."""

    negate = False

    def generators(self) -> tuple:
        raise NotImplementedError

    def __call__(self, p: int) -> bool:
        return _unit(self.generators(), p) != self.negate

    def traced(self, harvest: set) -> bool:
        return _unit_traced(self.generators(), harvest) != self.negate


class RadicalPredicate(_Predicate):
    """p -> radical_member(a, Z, N, m, p)."""

    def __init__(self, a, Z, N, m):
        _check_level([a, *Z, *N], m)
        self._gens = tuple(_generators(Z, N, m, [variable(("t",)) * a - 1]))

    def generators(self):
        return self._gens


class ConsistencyPredicate(_Predicate):
    """p -> consistent(Z, N, m, p)."""

    negate = True

    def __init__(self, Z, N, m):
        _check_level([*Z, *N], m)
        self._gens = tuple(_generators(Z, N, m, []))

    def generators(self):
        return self._gens


def _random_primes(count, avoid, rng):
    out = []
    lo, hi = _VALIDATION_RANGE
    while len(out) < count:
        q = rng.randrange(lo, hi)
        if q not in avoid and q not in out and is_prime(q):
            out.append(q)
    return out


def partition_primes(Y: ConstructibleZ, predicate, seed: int = 0):
    """Split ``Y`` into (primes where ``predicate`` holds, the rest).

    A finite ``Y`` is decided prime by prime.  For a cofinite ``Y`` the
    predicate is decided over Q while recording every prime dividing a
    leading coefficient that the computation divides by; those primes are
    decided individually, all others are taken to agree with characteristic
    zero.  That assumption is checked at a few random primes and a
    :class:`HarvestMismatch` is raised if it fails.
    """
    if not Y.cofinite:
        true = {p for p in Y.primes if predicate(p)}
        return FiniteNonzero(true), FiniteNonzero(Y.primes - true)
    harvest: set = set()
    generic = predicate.traced(harvest)
    rng = random.Random(seed)
    for q in _random_primes(VALIDATION_PRIMES, harvest | Y.primes, rng):
        if predicate(q) != generic:
            raise HarvestMismatch(
                f"prime {q} was not harvested but behaves unlike characteristic 0"
            )
    special = {p for p in harvest - Y.primes if predicate(p) != generic}
    if generic:
        return CofiniteWithZero(Y.primes | special), FiniteNonzero(special)
    return FiniteNonzero(special), CofiniteWithZero(Y.primes | special)
