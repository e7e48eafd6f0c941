"""Buchberger's algorithm on representations of eventually invariant series,
and a classical oracle that certifies its output on truncations."""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .core.classical import buchberger_classical, lead_monomials, monomial_min_gens
from .core.fields import GFqElement, ModP
from .core.monomial import Monomial
from .core.polynomial import Polynomial
from .invariant import Representation, RepresentationError, decode, expand, remainder, s_pair

__all__ = [
    "LevelCapExceeded",
    "GBResult",
    "OracleResult",
    "symmetric_buchberger",
    "stabilization_oracle",
    "default_level_cap",
    "interreduce",
    "is_symmetric_groebner",
    "lead_set_of",
]

log = logging.getLogger(__name__)

DEFAULT_LEVEL_CAP = 12


def default_level_cap() -> int:
    """Level cap, overridable with the ``SYMGB_LEVEL_CAP`` environment variable."""
    value = os.environ.get("SYMGB_LEVEL_CAP")
    return int(value) if value else DEFAULT_LEVEL_CAP


class LevelCapExceeded(RuntimeError):
    """The level m reached the configured cap before the queue emptied."""

    def __init__(self, message, level, details=None):
        super().__init__(message)
        self.level = level
        self.details = details or {}


class GBResult(NamedTuple):
    m: int
    basis: list

    @property
    def lead_set(self) -> list:
        return lead_monomials([b.body for b in self.basis])


@dataclass
class OracleResult:
    stable_at: int | None
    lead_set: list
    m_max: int
    history: dict = field(default_factory=dict)

    @property
    def stabilized(self) -> bool:
        return self.stable_at is not None and self.stable_at < self.m_max


_FIELD_TYPES = (Fraction, ModP, GFqElement)


def _check_field(F):
    for f in F:
        for _, c in f.body.terms:
            if not isinstance(c, _FIELD_TYPES):
                raise TypeError(f"coefficient {c!r} is not a field element")


def _monic(f: Representation) -> Representation:
    return Representation(f.n, f.body.monic(), f.d)


def _select(Q, m):
    best = None
    for i, f in enumerate(Q):
        if f.truncation_is_zero(m):
            continue
        if best is None or f.lmon > Q[best].lmon:
            best = i
    return best


def interreduce(m: int, B) -> list:
    """Minimal, tail-reduced basis with the same leading-monomial ideal."""
    B = sorted(B, key=lambda b: b.lmon.key)
    minimal = []
    for b in B:
        if not any(c.lmon.divides(b.lmon) for c in minimal):
            minimal.append(b)
    out = []
    for i, b in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        tail = b.without_leading_term()
        if others and tail:
            tail = remainder(m, tail, others)
        out.append(Representation(m, Polynomial(b.body.terms[:1]) + tail.body, b.d))
    return sorted(out, key=lambda b: b.lmon.key, reverse=True)


def symmetric_buchberger(n: int, F, level_cap: int | None = None, reduce: bool = True) -> GBResult:
    """Groebner basis of the ideal generated by eventually invariant series.

    ``F`` are n-representations with field coefficients (representations
    at a lower level are expanded to ``n``).  Returns ``GBResult(m, basis)``
    where ``basis`` holds monic m-representations of a Groebner basis, with
    every leading monomial supported on x1..xm.

    The queue is processed grevlex-largest leading monomial first (ties by
    insertion order); once no queued series has a nonzero truncation at the
    current level, everything is expanded to the next level.
    """
    cap = default_level_cap() if level_cap is None else level_cap
    Q = []
    for f in F:
        if f.n > n:
            raise RepresentationError(f"input at level {f.n} exceeds requested level {n}")
        if f:
            Q.append(expand(f, n))
    _check_field(Q)
    m = n
    B: list[Representation] = []
    while Q:
        while True:
            i = _select(Q, m)
            if i is None:
                break
            f = Q.pop(i)
            if B:
                # reducing first keeps the basis small; a remainder whose
                # truncation vanishes waits in the queue for a higher level
                f = remainder(m, f, B)
                if not f:
                    continue
                if f.truncation_is_zero(m):
                    Q.append(f)
                    continue
            f = _monic(f)
            B.append(f)
            for h in B[:-1]:
                r = remainder(m, s_pair(m, h, f), B)
                if r:
                    Q.append(r)
        if not Q:
            break
        if m + 1 > cap:
            raise LevelCapExceeded(
                f"level cap {cap} reached with {len(Q)} queued series", m,
                {"basis": [str(b) for b in B], "queue": [str(q) for q in Q]},
            )
        log.debug("expanding to level %d (|B|=%d, |Q|=%d)", m + 1, len(B), len(Q))
        B = [expand(b, m + 1) for b in B]
        Q = [expand(q, m + 1) for q in Q]
        m += 1
    if reduce:
        B = interreduce(m, B)
    return GBResult(m, B)


def is_symmetric_groebner(m: int, B) -> bool:
    """All S-pairs of ``B`` have zero remainder modulo ``B``."""
    for i in range(len(B)):
        for j in range(i + 1, len(B)):
            if remainder(m, s_pair(m, B[i], B[j]), B):
                return False
    return True


def stabilization_oracle(F, m_max: int) -> OracleResult:
    """Track the leading-monomial generators of classical Groebner bases of
    the truncated ideals for m = n .. m_max (n the largest input level)."""
    F = [f for f in F if f]
    n = max((f.n for f in F), default=0)
    if m_max < n:
        raise ValueError(f"m_max={m_max} is below the base level {n}")
    history = {}
    for m in range(n, m_max + 1):
        polys = [p for p in (decode(f, m) for f in F) if p]
        G = buchberger_classical(polys) if polys else []
        history[m] = lead_monomials(G)
    final = history[m_max]
    stable_at = m_max
    for m in range(m_max - 1, n - 1, -1):
        if history[m] != final:
            break
        stable_at = m
    return OracleResult(stable_at, final, m_max, history)


def lead_set_of(basis, m: int | None = None) -> list:
    """Minimal generators of the monomial ideal of (truncated) leading monomials."""
    monos = []
    for b in basis:
        lm: Monomial = b.lmon
        if m is None or lm.max_index <= m:
            monos.append(lm)
    return monomial_min_gens(monos)

