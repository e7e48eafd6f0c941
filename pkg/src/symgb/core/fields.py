"""Coefficient fields: the rationals, prime fields and small extension fields.

Elements of ``QQ`` are plain :class:`fractions.Fraction` values.  Prime field
elements are :class:`ModP` instances and extension field elements are
:class:`GFqElement` instances; both support the usual arithmetic operators so
that polynomial code never needs to know which field it works over.
"""

from __future__ import annotations

import random
from fractions import Fraction

__all__ = [
    "QQ",
    "Field",
    "RationalField",
    "PrimeField",
    "ExtensionField",
    "ModP",
    "GFqElement",
    "GF",
    "is_prime",
    "parse_field",
    "FieldError",
]


class FieldError(ValueError):
    """Invalid field descriptor (composite modulus, bad string...)."""


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all ``n < 2**64``.

    Raises FieldError for larger inputs since the fixed witness set is only
    proven correct below that bound.
    """
    if n >= 1 << 64:
        raise FieldError(f"modulus {n} exceeds the supported 64-bit range")
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Common interface of coefficient fields."""

    characteristic: int
    size: int | None  # None for infinite fields

    def __call__(self, value):
        return self.coerce(value)

    def coerce(self, value):
        raise NotImplementedError

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def random_element(self, rng: random.Random, nonzero: bool = False):
        raise NotImplementedError

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, Field) and self.name == other.name

    def __hash__(self):
        return hash(self.name)


class RationalField(Field):
    """The field of rational numbers; elements are ``Fraction``."""

    characteristic = 0
    size = None
    name = "QQ"
    #: integer entries for random elements are drawn from [-RANDOM_RANGE, RANDOM_RANGE]
    RANDOM_RANGE = 10**4

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (int, str)):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into QQ")

    def random_element(self, rng, nonzero=False):
        while True:
            v = rng.randint(-self.RANDOM_RANGE, self.RANDOM_RANGE)
            if v or not nonzero:
                return Fraction(v)


QQ = RationalField()


class ModP:
    """Residue class modulo a prime; always fully reduced."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ValueError("mixing residues of different moduli")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return ModP(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return ModP(o - self.v, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in a prime field")
        return ModP(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if self.v == 0:
            raise ZeroDivisionError("division by zero in a prime field")
        return ModP(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __pow__(self, e: int):
        return ModP(pow(self.v, e, self.p), self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return False
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return f"ModP({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class PrimeField(Field):
    """The prime field F_p."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.size = p
        self.name = f"F{p}"

    def coerce(self, value):
        if isinstance(value, ModP):
            if value.p != self.p:
                raise ValueError("residue from a different prime field")
            return value
        if isinstance(value, int):
            return ModP(value, self.p)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {value} vanishes mod {self.p}")
            return ModP(value.numerator * pow(value.denominator, -1, self.p), self.p)
        if isinstance(value, str):
            return self.coerce(Fraction(value))
        raise TypeError(f"cannot coerce {value!r} into {self.name}")

    def random_element(self, rng, nonzero=False):
        lo = 1 if nonzero else 0
        return ModP(rng.randint(lo, self.p - 1), self.p)


class GFqElement:
    """Element of GF(p^k), stored as the integer whose base-p digits are the
    coefficients of its polynomial representative."""

    __slots__ = ("v", "F")

    def __init__(self, v: int, F: "ExtensionField"):
        self.v = v
        self.F = F

    def _lift(self, other):
        if isinstance(other, GFqElement):
            return other.v
        if isinstance(other, (int, ModP, Fraction)):
            return self.F.coerce(other).v
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return GFqElement(self.F._add(self.v, o), self.F)

    __radd__ = __add__

    def __neg__(self):
        return GFqElement(self.F._neg(self.v), self.F)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return GFqElement(self.F._add(self.v, self.F._neg(o)), self.F)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return GFqElement(self.F._mul(self.v, o), self.F)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return GFqElement(self.F._mul(self.v, self.F._inv(o)), self.F)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return GFqElement(self.F._mul(o, self.F._inv(self.v)), self.F)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return False
        return self.v == o

    def __hash__(self):
        return hash((self.v, self.F.name))

    def __repr__(self):
        return f"GFqElement({self.v}, {self.F.name})"

    __str__ = __repr__


class ExtensionField(Field):
    """GF(p^k) built from log/antilog tables over a primitive polynomial.

    Only meant for small q (tables have q entries); used to draw generic
    coordinate changes when the base prime field is too small.
    """

    MAX_SIZE = 1 << 17

    def __init__(self, p: int, k: int):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        q = p**k
        if q > self.MAX_SIZE:
            raise FieldError(f"GF({p}^{k}) is too large for table arithmetic")
        self.p, self.k, self.q = p, k, q
        self.characteristic = p
        self.size = q
        self.name = f"GF({p}^{k})"
        self._build_tables()

    def _digits(self, v):
        out = []
        for _ in range(self.k):
            v, r = divmod(v, self.p)
            out.append(r)
        return out

    def _undigits(self, ds):
        v = 0
        for d in reversed(ds):
            v = v * self.p + d
        return v

    def _build_tables(self):
        p, k, q = self.p, self.k, self.q
        for tail in range(p**k):
            coeffs = self._digits(tail)  # f = x^k + sum coeffs[i] x^i
            if coeffs[0] == 0:
                continue

            def times_x(v, coeffs=coeffs):
                ds = self._digits(v)
                top = ds[-1]
                ds = [0] + ds[:-1]
                return self._undigits([(d - top * c) % p for d, c in zip(ds, coeffs)])

            if self._order_is_full(times_x, 1, q - 1):
                self._make_tables(times_x, 1)
                return
        raise FieldError(f"no primitive polynomial found for GF({p}^{k})")

    @staticmethod
    def _order_is_full(step, one, order):
        x = step(one)
        n = 1
        while x != one:
            x = step(x)
            n += 1
            if n > order:
                return False
        return n == order

    def _make_tables(self, step, one):
        q = self.q
        self._exp = [0] * (2 * (q - 1))
        self._log = [0] * q
        x = one
        for i in range(q - 1):
            self._exp[i] = x
            self._log[x] = i
            x = step(x)
        for i in range(q - 1, 2 * (q - 1)):
            self._exp[i] = self._exp[i - (q - 1)]

    def _add(self, a, b):
        if self.p == 2:
            return a ^ b
        p = self.p
        return self._undigits([(x + y) % p for x, y in zip(self._digits(a), self._digits(b))])

    def _neg(self, a):
        if self.p == 2:
            return a
        return self._undigits([(-x) % self.p for x in self._digits(a)])

    def _mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in an extension field")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def coerce(self, value):
        if isinstance(value, GFqElement):
            return value
        if isinstance(value, ModP):
            value = value.v
        if isinstance(value, Fraction):
            num = self.coerce(value.numerator)
            return num / self.coerce(value.denominator)
        if isinstance(value, int):
            return GFqElement(value % self.p, self)
        raise TypeError(f"cannot coerce {value!r} into {self.name}")

    def random_element(self, rng, nonzero=False):
        lo = 1 if nonzero else 0
        return GFqElement(rng.randint(lo, self.q - 1), self)


_field_cache: dict = {}


def GF(p: int, k: int = 1) -> Field:
    """Return the (cached) field with p^k elements."""
    key = (p, k)
    if key not in _field_cache:
        _field_cache[key] = PrimeField(p) if k == 1 else ExtensionField(p, k)
    return _field_cache[key]


def parse_field(text: str) -> Field:
    """Parse ``QQ`` or ``F<p>`` (e.g. ``F101``)."""
    s = text.strip()
    if s == "QQ":
        return QQ
    if s.startswith("F") and s[1:].isdigit():
        return GF(int(s[1:]))
    raise FieldError(f"unknown field {text!r}; expected QQ or F<p>")
