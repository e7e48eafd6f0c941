"""Polynomials in the universal coefficients c_{i,alpha} and fractions with
denominators built from nonvanishing elements.

A parametric element is a :class:`~symgb.core.polynomial.Polynomial` with
integer coefficients whose variable indices come from a process-wide
registry of variable keys:

* ``('c', i, alpha)`` -- the coefficient of x^alpha in the i-th universal
  form (alpha a dense exponent tuple without trailing zeros);
* ``('g', h, j)`` -- matrix entries, used transiently;
* ``('t',)`` and ``('u',)`` -- auxiliary variables for radical tests.
"""

from __future__ import annotations

from fractions import Fraction

from ..core.monomial import Monomial
from ..core.parsing import ParseError, parse_terms
from ..core.polynomial import Polynomial

__all__ = [
    "ParamFraction",
    "var_index",
    "var_key",
    "cvar",
    "variable",
    "c_variables",
    "alpha_support",
    "param_act",
    "param_str",
    "param_sort_key",
    "parse_param",
    "evaluate",
]

_ids: dict = {}
_keys: list = [None]  # index 0 unused: monomial indices start at 1


def var_index(key: tuple) -> int:
    """Registry index of a variable key (allocated on first use)."""
    idx = _ids.get(key)
    if idx is None:
        idx = len(_keys)
        _ids[key] = idx
        _keys.append(key)
    return idx


def var_key(index: int) -> tuple:
    return _keys[index]


def _strip(alpha) -> tuple:
    alpha = list(alpha)
    while alpha and alpha[-1] == 0:
        alpha.pop()
    return tuple(alpha)


def cvar(i: int, alpha) -> Polynomial:
    """The variable c_{i,alpha} as a parametric element."""
    return variable(("c", i, _strip(alpha)))


def variable(key: tuple) -> Polynomial:
    if key[0] == "c":
        key = ("c", key[1], _strip(key[2]))
    return Polynomial({Monomial.var(var_index(key)): 1})


def c_variables(p: Polynomial) -> set:
    """Keys of the c-variables occurring in ``p``."""
    out = set()
    for mono, _ in p.terms:
        for i, _e in mono.exps:
            key = _keys[i]
            if key[0] == "c":
                out.add(key)
    return out


def alpha_support(p: Polynomial) -> int:
    """Largest x-index occurring in the alpha of any c-variable of ``p``."""
    return max((len(key[2]) for key in c_variables(p)), default=0)


_act_cache: dict = {}


def _act_index(index: int, mapping_items: tuple) -> int:
    ck = (index, mapping_items)
    hit = _act_cache.get(ck)
    if hit is not None:
        return hit
    key = _keys[index]
    if key[0] != "c":
        out = index
    else:
        alpha = key[2]
        mapping = dict(mapping_items)
        size = max([len(alpha)] + [max(a, b) for a, b in mapping_items])
        moved = [0] * size
        for pos, e in enumerate(alpha, start=1):
            if e:
                moved[mapping.get(pos, pos) - 1] = e
        out = var_index(("c", key[1], _strip(moved)))
    _act_cache[ck] = out
    return out


def param_act(p: Polynomial, mapping: dict) -> Polynomial:
    """Permutation action c_{i,alpha} -> c_{i, alpha o pi^-1}: the exponent at
    position a moves to position mapping[a]."""
    if not mapping:
        return p
    items = tuple(sorted(mapping.items()))
    out = {}
    for mono, c in p.terms:
        exps = {}
        for i, e in mono.exps:
            j = _act_index(i, items)
            exps[j] = exps.get(j, 0) + e
        m = Monomial(exps)
        out[m] = out[m] + c if m in out else c
    return Polynomial(out)


def _var_name(key: tuple) -> str:
    if key[0] == "c":
        return "c_" + "_".join(str(v) for v in (key[1],) + key[2])
    if key[0] == "g":
        return f"g_{key[1]}_{key[2]}"
    return key[0]


def _mono_sort_key(mono: Monomial):
    # canonical (registry-independent): degree first, then variable keys
    return (-mono.degree, tuple(sorted(((_keys[i], -e) for i, e in mono.exps))))


def param_str(p) -> str:
    """Canonical text in the polynomial grammar, e.g. ``2*c_1_1_1-c_2_2``."""
    if isinstance(p, int):
        return str(p)
    if not p:
        return "0"
    parts = []
    for k, (mono, c) in enumerate(sorted(p.terms, key=lambda t: _mono_sort_key(t[0]))):
        names = []
        for i, e in sorted(mono.exps, key=lambda ie: _keys[ie[0]]):
            names.append(_var_name(_keys[i]) + (f"^{e}" if e > 1 else ""))
        body = "*".join(names)
        mag = abs(c)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        sign = "-" if c < 0 else ("+" if k else "")
        parts.append(sign + text)
    return "".join(parts)


def param_sort_key(p: Polynomial):
    return param_str(p)


def parse_param(text: str, line: int = 1) -> Polynomial:
    """Parse a parametric element written with ``c_i_a1_a2...``, ``t``, ``u``."""
    text = text.strip()
    if text == "0":
        return Polynomial()
    out = {}
    for coeff, exps in parse_terms(text, line):
        if coeff.denominator != 1:
            raise ParseError("parametric elements have integer coefficients", 1, line, text)
        mono = {}
        for key, e in exps.items():
            if key[0] == "x":
                raise ParseError(f"unexpected series variable x{key[1]}", 1, line, text)
            idx = var_index(key)
            mono[idx] = mono.get(idx, 0) + e
        m = Monomial(mono)
        out[m] = out.get(m, 0) + int(coeff)
    return Polynomial(out)


def evaluate(p: Polynomial, values, zero=0):
    """Evaluate at ``values`` (a callable on variable keys)."""
    total = zero
    for mono, c in p.terms:
        v = c
        for i, e in mono.exps:
            v = v * values(_keys[i]) ** e
        total = total + v
    return total


class ParamFraction:
    """``num / prod(den)`` with ``num`` integral and ``den`` a multiset of
    denominator factors (parametric elements).  Factors are never cancelled;
    the numerator of a leading coefficient is read off literally."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=()):
        if isinstance(num, int):
            num = Polynomial.constant(num) if num else Polynomial()
        self.num = num
        if isinstance(den, dict):
            den = tuple((f, e) for f, e in den.items() if e)
        self.den = tuple(den)

    @classmethod
    def one(cls):
        return cls(1)

    def den_dict(self) -> dict:
        return dict(self.den)

    def den_product(self) -> Polynomial:
        out = Polynomial.constant(1)
        for f, e in self.den:
            out = out * f**e
        return out

    def _coerce(self, other):
        if isinstance(other, ParamFraction):
            return other
        if isinstance(other, (int, Polynomial)):
            return ParamFraction(other)
        if isinstance(other, Fraction) and other.denominator == 1:
            return ParamFraction(int(other))
        return None

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        da, db = self.den_dict(), o.den_dict()
        if da == db:
            return ParamFraction(self.num + o.num, self.den)
        lcm = dict(da)
        for f, e in db.items():
            if lcm.get(f, 0) < e:
                lcm[f] = e
        return ParamFraction(_lift(self.num, da, lcm) + _lift(o.num, db, lcm), lcm)

    __radd__ = __add__

    def __neg__(self):
        return ParamFraction(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return ParamFraction(0)
        if not o.den:
            return ParamFraction(self.num * o.num, self.den)
        if not self.den:
            return ParamFraction(self.num * o.num, o.den)
        den = self.den_dict()
        for f, e in o.den:
            den[f] = den.get(f, 0) + e
        return ParamFraction(self.num * o.num, den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by a zero parametric element")
        den = self.den_dict()
        den[o.num] = den.get(o.num, 0) + 1
        num = self.num
        for f, e in o.den:
            num = num * f**e
        return ParamFraction(num, den)

    def __pow__(self, e: int):
        out = ParamFraction(1)
        for _ in range(e):
            out = out * self
        return out

    # -- structure ------------------------------------------------------
    def __bool__(self):
        return bool(self.num)

    def is_one(self) -> bool:
        return self == 1

    def numerator(self) -> Polynomial:
        return self.num

    def act(self, mapping: dict) -> "ParamFraction":
        if not mapping:
            return self
        den = {}
        for f, e in self.den:
            g = param_act(f, mapping)
            den[g] = den.get(g, 0) + e
        return ParamFraction(param_act(self.num, mapping), den)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den_dict() == o.den_dict():
            return self.num == o.num
        return self.num * o.den_product() == o.num * self.den_product()

    __hash__ = None

    def __repr__(self):
        return f"ParamFraction({str(self)!r})"

    def __str__(self):
        num = param_str(self.num)
        if not self.den:
            return num
        den = "*".join(
            (f"({param_str(f)})" if len(f) > 1 else param_str(f)) + (f"^{e}" if e > 1 else "")
            for f, e in sorted(self.den, key=lambda fe: param_str(fe[0]))
        )
        if len(self.num) > 1:
            num = f"({num})"
        return f"{num}/{den}" if len(self.den) == 1 and self.den[0][1] == 1 and len(self.den[0][0]) == 1 else f"{num}/({den})"


def _lift(num: Polynomial, den: dict, target: dict) -> Polynomial:
    for f, e in target.items():
        extra = e - den.get(f, 0)
        if extra:
            num = num * f**extra
    return num
