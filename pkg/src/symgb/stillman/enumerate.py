"""Enumeration of the possible generic initial ideals of k forms of given
degrees, together with the strata (Y, Z, N) on which each occurs."""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field

from ..core.classical import display_order, monomial_min_gens
from ..core.monomial import Monomial
from ..core.parsing import parse_polynomial
from ..core.polynomial import Polynomial
from ..invariant import (
    Representation,
    _partitions,
    expand,
    remainder,
    s_pair,
)
from ..symmetric import LevelCapExceeded, default_level_cap
from .constructible import SPEC_Z, ConstructibleZ
from .params import ParamFraction, alpha_support, cvar, param_str, parse_param
from .radical import ConsistencyPredicate, RadicalPredicate, partition_primes

__all__ = [
    "Stratum",
    "Node",
    "EnumerationResult",
    "universal_system",
    "stillman_enumerate",
    "format_stratum",
    "parse_stratum",
]

log = logging.getLogger(__name__)


def universal_system(k: int, degrees) -> list:
    """The universal 0-representations sum_{alpha partition of d_i} c_{i,alpha} x^alpha."""
    degrees = list(degrees)
    if k < 1 or len(degrees) != k or any(d < 1 for d in degrees):
        raise ValueError("expected k >= 1 positive degrees")
    out = []
    for i, d in enumerate(degrees, start=1):
        body = {Monomial.from_dense(alpha): ParamFraction(cvar(i, alpha)) for alpha in _partitions(d)}
        out.append(Representation(0, Polynomial(body), d))
    return out


def _canonical(elements) -> tuple:
    uniq = {}
    for a in elements:
        uniq.setdefault(param_str(a), a)
    return tuple(uniq[s] for s in sorted(uniq))


@dataclass(frozen=True)
class Stratum:
    """One leaf: generic initial ideal generators S on the locus where Z
    vanishes and N does not, in the characteristics Y."""

    S: tuple
    Y: ConstructibleZ
    Z: tuple
    N: tuple
    m: int

    def identity(self):
        return (
            tuple(str(s) for s in self.S),
            str(self.Y),
            tuple(param_str(z) for z in self.Z),
            tuple(param_str(n) for n in self.N),
        )

    def sort_key(self):
        return (
            tuple(s.key for s in self.S),
            self.Y.sort_key(),
            tuple(param_str(z) for z in self.Z),
            tuple(param_str(n) for n in self.N),
            self.m,
        )

    def __str__(self):
        return format_stratum(self)


def format_stratum(s: Stratum) -> str:
    S = "{" + ", ".join(str(m) for m in display_order(s.S)) + "}"
    Z = "[" + ", ".join(param_str(z) for z in s.Z) + "]"
    N = "[" + ", ".join(param_str(n) for n in s.N) + "]"
    return f"S={S}; Y={s.Y}; Z={Z}; N={N}; m={s.m}"


_LINE = re.compile(r"^S=\{(.*)\}; Y=(.*); Z=\[(.*)\]; N=\[(.*)\]; m=(\d+)$")


def parse_stratum(line: str) -> Stratum:
    m = _LINE.match(line.strip())
    if not m:
        raise ValueError(f"not a stratum line: {line!r}")
    S = tuple(monomial_min_gens(parse_polynomial(t).lmon for t in _split(m.group(1))))
    Z = tuple(parse_param(t) for t in _split(m.group(3)))
    N = tuple(parse_param(t) for t in _split(m.group(4)))
    return Stratum(S, ConstructibleZ.parse(m.group(2)), Z, N, int(m.group(5)))


def _split(text: str):
    return [t.strip() for t in text.split(",") if t.strip()]


@dataclass
class Node:
    """A recursion call as it was entered (after dropping zero elements)."""

    m: int
    Y: ConstructibleZ
    Z: tuple
    N: tuple
    depth: int


@dataclass
class EnumerationResult:
    strata: list
    nodes: list = field(default_factory=list)
    leaves: int = 0

    @property
    def s_sets(self) -> set:
        return {tuple(s.S) for s in self.strata}


def _coefficient_level(q: Representation, m: int) -> int:
    top = m
    for _, c in q.body.terms:
        top = max(top, alpha_support(c.num))
        for f, _e in c.den:
            top = max(top, alpha_support(f))
    return top


def _make_monic(f: Representation, b: ParamFraction) -> Representation:
    lead = f.lmon
    body = {mono: (ParamFraction(1) if mono == lead else c / b) for mono, c in f.body.terms}
    return Representation(f.n, Polynomial(body), f.d)


class _Enumerator:
    def __init__(self, level_cap: int, seed: int):
        self.cap = level_cap
        self.seed = seed
        self.leaves: list = []
        self.nodes: list = []

    def split(self, Y, predicate):
        return partition_primes(Y, predicate, seed=self.seed)

    def drop_zeros(self, m, B, Q, Y, Z, N, depth):
        """Remove queue elements that vanish identically modulo the radical
        of <E(Z)>; where that depends on the characteristic, the call is
        split and the vanishing part is explored separately."""
        kept = []
        pending = list(Q)
        while pending:
            q = pending.pop(0)
            if not q:
                continue
            level = _coefficient_level(q, m)
            dead = Y
            for _, c in q.body.terms:
                dead, _alive = self.split(dead, RadicalPredicate(c.num, Z, N, level))
                if not dead:
                    break
            if not dead:
                kept.append(q)
                continue
            alive = Y.subtract(dead)
            if alive:
                self.run(m, list(B), kept + pending, dead, Z, N, depth + 1)
                Y = alive
                kept.append(q)
        return kept, Y

    def run(self, m, B, Q, Y, Z, N, depth=0):
        Q, Y = self.drop_zeros(m, B, Q, Y, Z, N, depth)
        self.nodes.append(Node(m, Y, _canonical(Z), _canonical(N), depth))
        B = list(B)
        N = list(N)
        while Y and Q:
            while Y:
                idx = _select(Q, m)
                if idx is None:
                    break
                f = Q.pop(idx)
                b = f.lc
                a = b.num
                Y1, Y = self.split(Y, RadicalPredicate(a, Z, N, m))
                rest = f.without_leading_term()
                if Y1:
                    self.run(m, B, Q + [rest], Y1, Z, N, depth + 1)
                if not Y:
                    break
                Y2, _ = self.split(Y, ConsistencyPredicate(Z + [a], N, m))
                if Y2:
                    self.run(m, B, Q + [rest], Y2, Z + [a], N, depth + 1)
                f = _make_monic(f, b)
                N = N + [a]
                B.append(f)
                for h in B[:-1]:
                    r = remainder(m, s_pair(m, h, f), B)
                    if r:
                        Q.append(r)
            if not Y:
                break
            if m + 1 > self.cap:
                raise LevelCapExceeded(
                    f"level cap {self.cap} reached on a branch",
                    m,
                    {
                        "Y": str(Y),
                        "Z": [param_str(z) for z in _canonical(Z)],
                        "N": [param_str(n) for n in _canonical(N)],
                        "queue": len(Q),
                    },
                )
            B = [expand(b_, m + 1) for b_ in B]
            Q = [expand(q, m + 1) for q in Q]
            m += 1
        if Y:
            S = tuple(monomial_min_gens(b_.lmon for b_ in B))
            self.leaves.append(Stratum(S, Y, _canonical(Z), _canonical(N), m))


def _select(Q, m):
    best = None
    for i, f in enumerate(Q):
        if f.truncation_is_zero(m):
            continue
        if best is None or f.lmon > Q[best].lmon:
            best = i
    return best


def stillman_enumerate(k: int, degrees, level_cap: int | None = None, seed: int = 0) -> EnumerationResult:
    """Run the stratified Buchberger recursion on the universal forms.

    Returns the distinct strata sorted canonically (by S, then Y, Z, N),
    together with the trace of recursion nodes.  Raises
    :class:`~symgb.symmetric.LevelCapExceeded` (with the branch's Y, Z, N)
    if a branch needs a level above ``level_cap``.
    """
    cap = default_level_cap() if level_cap is None else level_cap
    F = universal_system(k, degrees)
    en = _Enumerator(cap, seed)
    en.run(0, [], list(F), SPEC_Z, [], [])
    merged = {}
    for s in en.leaves:
        key = s.identity()
        if key not in merged or s.m < merged[key].m:
            merged[key] = s
    strata = sorted(merged.values(), key=Stratum.sort_key)
    return EnumerationResult(strata, en.nodes, len(en.leaves))
