"""Immutable sparse polynomials kept in grevlex-descending term order.

Coefficients can be any objects supporting ``+ - *`` and truth testing
(``Fraction``, :class:`~symgb.core.fields.ModP`, parametric fractions...).
A polynomial does not record its coefficient domain.
"""

from __future__ import annotations

from fractions import Fraction

from .monomial import ONE, Monomial

__all__ = ["Polynomial", "coeff_act", "coeff_str"]


def coeff_act(c, mapping):
    """Apply a variable permutation to a coefficient (identity for constants)."""
    act = getattr(c, "act", None)
    return c if act is None else act(mapping)


def coeff_str(c) -> tuple[bool, str]:
    """Return ``(negative, text)`` for printing a coefficient."""
    if isinstance(c, (int, Fraction)):
        return (c < 0, str(abs(c)))
    s = str(c)
    if s.startswith("-"):
        return (True, s[1:])
    return (False, s)


class Polynomial:
    """Finite sum of terms ``c * x^alpha`` with nonzero coefficients.

    ``terms`` is a tuple of ``(Monomial, coefficient)`` pairs sorted strictly
    grevlex-descending, so ``terms[0]`` is the leading term.
    """

    __slots__ = ("terms", "_dict", "_hash")

    def __init__(self, data=None):
        if data is None:
            data = {}
        elif not isinstance(data, dict):
            acc = {}
            for m, c in data:
                acc[m] = acc[m] + c if m in acc else c
            data = acc
        d = {m: c for m, c in data.items() if c}
        self._dict = d
        self.terms = tuple(sorted(d.items(), key=lambda t: t[0].key, reverse=True))
        self._hash = None

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls({ONE: c})

    @classmethod
    def monomial(cls, m: Monomial, c=1) -> "Polynomial":
        return cls({m: c})

    # -- accessors ------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def coefficient(self, m: Monomial):
        return self._dict.get(m, 0)

    def as_dict(self) -> dict:
        return dict(self._dict)

    def monomials(self):
        return [m for m, _ in self.terms]

    def coefficients(self):
        return [c for _, c in self.terms]

    @property
    def lmon(self) -> Monomial:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return self.terms[0][0]

    @property
    def lc(self):
        if not self.terms:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def lt(self) -> "Polynomial":
        return Polynomial({self.lmon: self.lc})

    @property
    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(m.degree for m, _ in self.terms)

    def is_homogeneous(self) -> bool:
        return len({m.degree for m, _ in self.terms}) <= 1

    @property
    def max_index(self) -> int:
        return max((m.max_index for m, _ in self.terms), default=0)

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        d = dict(self._dict)
        for m, c in other.terms:
            d[m] = d[m] + c if m in d else c
        return Polynomial(d)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({m: -c for m, c in self.terms})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        d = dict(self._dict)
        for m, c in other.terms:
            d[m] = d[m] - c if m in d else -c
        return Polynomial(d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        d = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = m1 * m2
                c = c1 * c2
                d[m] = d[m] + c if m in d else c
        return Polynomial(d)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        result = Polynomial.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        if not c:
            return Polynomial()
        return Polynomial({m: c * v for m, v in self.terms})

    def mul_term(self, c, mono: Monomial) -> "Polynomial":
        if not c:
            return Polynomial()
        return Polynomial({mono * m: c * v for m, v in self.terms})

    def monic(self) -> "Polynomial":
        """Divide by the leading coefficient (field coefficients only)."""
        c = self.lc
        out = {m: v / c for m, v in self.terms}
        out[self.lmon] = c / c
        return Polynomial(out)

    def map_coefficients(self, fn) -> "Polynomial":
        return Polynomial({m: fn(c) for m, c in self.terms})

    def truncate(self, m: int) -> "Polynomial":
        """Keep only the terms supported on x1..xm."""
        return Polynomial({mono: c for mono, c in self.terms if mono.max_index <= m})

    def act(self, mapping: dict) -> "Polynomial":
        """Apply an index permutation to variables and coefficients."""
        return Polynomial({m.permute(mapping): coeff_act(c, mapping) for m, c in self.terms})

    # -- comparison / printing -----------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if not self.terms:
                return not other
            return len(self.terms) == 1 and self.terms[0][0].is_one() and self.terms[0][1] == other
        if len(self.terms) != len(other.terms):
            return False
        return all(m1 == m2 and c1 == c2 for (m1, c1), (m2, c2) in zip(self.terms, other.terms))

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple((m, c) for m, c in self.terms))
        return self._hash

    def __repr__(self):
        return f"Polynomial({str(self)!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, (m, c) in enumerate(self.terms):
            neg, body = coeff_str(c)
            if m.is_one():
                text = body
            elif body == "1":
                text = str(m)
            else:
                if any(ch in body for ch in "+-") and not body.startswith("("):
                    body = f"({body})"
                text = f"{body}*{m}"
            if k == 0:
                parts.append(("-" if neg else "") + text)
            else:
                parts.append(("-" if neg else "+") + text)
        return "".join(parts)
