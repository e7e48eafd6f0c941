"""Constructible subsets of Spec Z: a finite set of nonzero primes, or a
cofinite set containing the generic point (0)."""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..core.fields import is_prime

__all__ = ["ConstructibleZ", "FiniteNonzero", "CofiniteWithZero", "SPEC_Z", "EMPTY"]


@dataclass(frozen=True)
class ConstructibleZ:
    """``cofinite=False``: exactly the primes in ``primes``.
    ``cofinite=True``: (0) and every prime not in ``primes``.
    The characteristic-zero point is written as 0."""

    cofinite: bool
    primes: frozenset

    def __post_init__(self):
        ps = frozenset(int(p) for p in self.primes)
        if any(not is_prime(p) for p in ps):
            raise ValueError("prime sets hold nonzero primes only")
        object.__setattr__(self, "primes", ps)

    def __contains__(self, p: int) -> bool:
        if p == 0:
            return self.cofinite
        return (p not in self.primes) if self.cofinite else (p in self.primes)

    def __bool__(self):
        return self.cofinite or bool(self.primes)

    def is_empty(self) -> bool:
        return not self

    def complement(self) -> "ConstructibleZ":
        return ConstructibleZ(not self.cofinite, self.primes)

    def intersect(self, other: "ConstructibleZ") -> "ConstructibleZ":
        if self.cofinite and other.cofinite:
            return CofiniteWithZero(self.primes | other.primes)
        if self.cofinite:
            return FiniteNonzero(other.primes - self.primes)
        if other.cofinite:
            return FiniteNonzero(self.primes - other.primes)
        return FiniteNonzero(self.primes & other.primes)

    def union(self, other: "ConstructibleZ") -> "ConstructibleZ":
        return self.complement().intersect(other.complement()).complement()

    def subtract(self, other: "ConstructibleZ") -> "ConstructibleZ":
        return self.intersect(other.complement())

    __and__ = intersect
    __or__ = union
    __sub__ = subtract

    def sort_key(self):
        return (not self.cofinite, tuple(sorted(self.primes)))

    def __str__(self):
        body = "{" + ",".join(str(p) for p in sorted(self.primes)) + "}"
        return f"cofinite excluding {body}" if self.cofinite else f"finite {body}"

    @classmethod
    def parse(cls, text: str) -> "ConstructibleZ":
        m = re.fullmatch(r"\s*(cofinite excluding|finite)\s*\{([\d,\s]*)\}\s*", text)
        if not m:
            raise ValueError(f"cannot parse prime set {text!r}")
        primes = [int(p) for p in m.group(2).replace(" ", "").split(",") if p]
        return cls(m.group(1) != "finite", frozenset(primes))


def FiniteNonzero(primes=()) -> ConstructibleZ:
    return ConstructibleZ(False, frozenset(primes))


def CofiniteWithZero(excluded=()) -> ConstructibleZ:
    return ConstructibleZ(True, frozenset(excluded))


SPEC_Z = CofiniteWithZero()
EMPTY = FiniteNonzero()
