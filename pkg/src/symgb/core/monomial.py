"""Sparse monomials in the variables x1, x2, ... and the grevlex order."""

from __future__ import annotations

import enum

__all__ = ["Monomial", "Ordering", "grevlex_cmp", "ONE"]


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class Monomial:
    """A monomial ``x^alpha`` with finite support.

    ``exps`` is a tuple of ``(index, exponent)`` pairs with strictly
    increasing indices (>= 1) and positive exponents.  Comparison operators
    implement grevlex: total degree first, then the monomial with the smaller
    exponent at the largest index where the two differ is the larger one.
    """

    __slots__ = ("exps", "degree", "key", "_hash")

    def __init__(self, exps=()):
        if isinstance(exps, dict):
            items = sorted((i, e) for i, e in exps.items() if e)
        else:
            items = sorted((i, e) for i, e in exps if e)
        for k, (i, e) in enumerate(items):
            if i < 1 or e < 0:
                raise ValueError(f"bad variable/exponent pair ({i}, {e})")
            if k and items[k - 1][0] == i:
                raise ValueError(f"duplicate variable index {i}")
        self._set(tuple(items))

    def _set(self, exps):
        self.exps = exps
        self.degree = sum(e for _, e in exps)
        # grevlex sort key: larger key means larger monomial
        key = [self.degree]
        for i, e in reversed(exps):
            key.append(-i)
            key.append(-e)
        self.key = tuple(key)
        self._hash = hash(exps)

    @classmethod
    def _raw(cls, exps):
        m = cls.__new__(cls)
        m._set(exps)
        return m

    @classmethod
    def var(cls, i: int, e: int = 1) -> "Monomial":
        return cls._raw(((i, e),)) if e else ONE

    @classmethod
    def from_dense(cls, alpha) -> "Monomial":
        return cls._raw(tuple((i + 1, e) for i, e in enumerate(alpha) if e))

    # -- structure ------------------------------------------------------
    def as_dict(self) -> dict:
        return dict(self.exps)

    def exponent(self, i: int) -> int:
        for j, e in self.exps:
            if j == i:
                return e
        return 0

    def dense(self, length: int | None = None) -> tuple:
        top = self.max_index
        length = top if length is None else length
        if length < top:
            raise ValueError("length shorter than the support")
        out = [0] * length
        for i, e in self.exps:
            out[i - 1] = e
        return tuple(out)

    @property
    def max_index(self) -> int:
        return self.exps[-1][0] if self.exps else 0

    def supported_in(self, m: int) -> bool:
        return self.max_index <= m

    def is_one(self) -> bool:
        return not self.exps

    # -- arithmetic -----------------------------------------------------
    def __mul__(self, other: "Monomial") -> "Monomial":
        if not other.exps:
            return self
        if not self.exps:
            return other
        d = dict(self.exps)
        for i, e in other.exps:
            d[i] = d.get(i, 0) + e
        return Monomial._raw(tuple(sorted(d.items())))

    def divides(self, other: "Monomial") -> bool:
        if self.degree > other.degree:
            return False
        od = dict(other.exps)
        for i, e in self.exps:
            if od.get(i, 0) < e:
                return False
        return True

    def __truediv__(self, other: "Monomial") -> "Monomial":
        d = dict(self.exps)
        for i, e in other.exps:
            r = d.get(i, 0) - e
            if r < 0:
                raise ValueError(f"{other} does not divide {self}")
            if r:
                d[i] = r
            else:
                del d[i]
        return Monomial._raw(tuple(sorted(d.items())))

    def lcm(self, other: "Monomial") -> "Monomial":
        d = dict(self.exps)
        for i, e in other.exps:
            if d.get(i, 0) < e:
                d[i] = e
        return Monomial._raw(tuple(sorted(d.items())))

    def gcd(self, other: "Monomial") -> "Monomial":
        od = dict(other.exps)
        return Monomial._raw(tuple((i, min(e, od[i])) for i, e in self.exps if i in od))

    def is_coprime(self, other: "Monomial") -> bool:
        od = dict(other.exps)
        return not any(i in od for i, _ in self.exps)

    def truncate(self, m: int) -> "Monomial | None":
        """Return self if supported on x1..xm, else None (the zero image)."""
        return self if self.max_index <= m else None

    def permute(self, mapping: dict) -> "Monomial":
        """Apply the index map ``i -> mapping.get(i, i)``."""
        return Monomial._raw(tuple(sorted((mapping.get(i, i), e) for i, e in self.exps)))

    # -- comparisons ----------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.key < other.key

    def __le__(self, other):
        return self.key <= other.key

    def __gt__(self, other):
        return self.key > other.key

    def __ge__(self, other):
        return self.key >= other.key

    def __repr__(self):
        return f"Monomial({str(self)!r})"

    def __str__(self):
        if not self.exps:
            return "1"
        return "*".join(f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in self.exps)


ONE = Monomial._raw(())


def grevlex_cmp(a: Monomial, b: Monomial) -> Ordering:
    """Three-way grevlex comparison of two monomials."""
    if a.degree != b.degree:
        return Ordering.GREATER if a.degree > b.degree else Ordering.LESS
    ia, ib = len(a.exps) - 1, len(b.exps) - 1
    while ia >= 0 and ib >= 0:
        (i, e), (j, f) = a.exps[ia], b.exps[ib]
        if i != j:
            # the monomial using the larger variable has the larger exponent there
            return Ordering.LESS if i > j else Ordering.GREATER
        if e != f:
            return Ordering.GREATER if e < f else Ordering.LESS
        ia -= 1
        ib -= 1
    return Ordering.EQUAL
