"""Finite encodings of eventually symmetric grevlex series.

A homogeneous series of degree ``d`` that is invariant under the group
S_{>n} of permutations fixing 1..n is recorded by its *n-representation*:
the coefficients on the grevlex-largest monomial of every S_{>n}-orbit.
Such a monomial keeps its exponents on x1..xn and has weakly decreasing
exponents on x_{n+1}, x_{n+2}, ...

Coefficients may carry an action of the permutations (a method
``act(mapping)``); plain field elements are treated as fixed.
"""

from __future__ import annotations

import re
from collections import Counter
from functools import lru_cache
from dataclasses import dataclass

from .core.classical import _Work
from .core.monomial import Monomial
from .core.parsing import ParseError, parse_polynomial
from .core.polynomial import Polynomial, coeff_act

__all__ = [
    "Representation",
    "RepresentationError",
    "orbit_rep",
    "is_orbit_max",
    "orbit_split",
    "expand",
    "decode",
    "encode",
    "product",
    "remainder",
    "s_pair",
    "parse_representation",
    "representation_from_body",
    "complete_permutation",
    "orbit_representatives",
    "random_representation",
]


class RepresentationError(ValueError):
    """A representation invariant or an operation precondition is violated."""


def is_orbit_max(m: Monomial, n: int) -> bool:
    """True iff ``m`` is the grevlex-largest element of its S_{>n}-orbit."""
    prev = None
    pos = n
    for i, e in m.exps:
        if i <= n:
            continue
        if i != pos + 1:
            return False
        if prev is not None and e > prev:
            return False
        prev = e
        pos = i
    return True


def orbit_rep(m: Monomial, n: int) -> Monomial:
    """Grevlex-largest monomial in the S_{>n}-orbit of ``m``."""
    head = [(i, e) for i, e in m.exps if i <= n]
    tail = sorted((e for i, e in m.exps if i > n), reverse=True)
    return Monomial._raw(tuple(head + [(n + 1 + k, e) for k, e in enumerate(tail)]))


def _tail(m: Monomial, n: int):
    return [(i, e) for i, e in m.exps if i > n]


def orbit_split(alpha: Monomial, n: int, m: int, complete: bool = False):
    """Split the S_{>n}-orbit of the orbit-maximal ``alpha`` into S_{>m}-orbits.

    Yields ``(beta, mapping)`` where ``beta`` is the S_{>m}-maximal
    representative and ``mapping`` sends the tail positions of ``alpha`` to
    those of ``beta`` (a permutation in S_{>n} restricted to where it
    matters).  With ``complete`` only orbit members supported on x1..xm are
    produced, i.e. the terms of the truncation at level m.
    """
    head = tuple((i, e) for i, e in alpha.exps if i <= n)
    tail = _tail(alpha, n)
    counts = Counter(e for _, e in tail)
    values = sorted(counts, reverse=True)
    slots = m - n
    # alpha positions of each exponent value, ascending
    src = {v: [i for i, e in tail if e == v] for v in values}

    chosen = []  # exponent (or 0) at positions n+1..m

    def rec(k, remaining):
        left = sum(remaining.values())
        if complete and left > slots - k:
            return
        if k == slots or left == 0:
            yield_one = list(chosen) + [0] * (slots - k)
            yield yield_one, remaining
            return
        chosen.append(0)
        yield from rec(k + 1, remaining)
        chosen.pop()
        for v in values:
            if remaining[v]:
                remaining[v] -= 1
                chosen.append(v)
                yield from rec(k + 1, remaining)
                chosen.pop()
                remaining[v] += 1

    for placed, remaining in rec(0, Counter(counts)):
        if complete and sum(remaining.values()):
            continue
        exps = list(head)
        dst = {v: [] for v in values}
        for k, v in enumerate(placed):
            if v:
                exps.append((n + 1 + k, v))
                dst[v].append(n + 1 + k)
        rest = sorted((v for v in values for _ in range(remaining[v])), reverse=True)
        for k, v in enumerate(rest):
            exps.append((m + 1 + k, v))
            dst[v].append(m + 1 + k)
        mapping = {}
        for v in values:
            for a, b in zip(src[v], dst[v]):
                if a != b:
                    mapping[a] = b
        yield Monomial._raw(tuple(exps)), complete_permutation(mapping)


def complete_permutation(mapping: dict) -> dict:
    """Extend an injective partial map of indices to a finite permutation."""
    if not mapping:
        return mapping
    targets = set(mapping.values())
    free_src = sorted(t for t in targets if t not in mapping)
    free_dst = sorted(s for s in mapping if s not in targets)
    out = dict(mapping)
    out.update(zip(free_src, free_dst))
    return out


@dataclass(frozen=True)
class Representation:
    """The n-representation ``body`` of a homogeneous S_{>n}-invariant series
    of degree ``d``."""

    n: int
    body: Polynomial
    d: int

    def __post_init__(self):
        if self.n < 0:
            raise RepresentationError("level must be nonnegative")
        for mono, _ in self.body.terms:
            if mono.degree != self.d:
                raise RepresentationError(f"term {mono} is not of degree {self.d}")
            if not is_orbit_max(mono, self.n):
                raise RepresentationError(f"{mono} is not orbit-maximal at level {self.n}")

    def __bool__(self):
        return bool(self.body)

    def is_zero(self) -> bool:
        return not self.body

    @property
    def lmon(self) -> Monomial:
        return self.body.lmon

    @property
    def lc(self):
        return self.body.lc

    def truncation_is_zero(self, m: int | None = None) -> bool:
        """Whether the encoded series has zero image in x1..xm (default m = n)."""
        m = self.n if m is None else m
        return not any(mono.max_index <= m for mono, _ in self.body.terms)

    def __add__(self, other: "Representation") -> "Representation":
        _check_compatible(self, other)
        return Representation(self.n, self.body + other.body, self.d)

    def __sub__(self, other: "Representation") -> "Representation":
        _check_compatible(self, other)
        return Representation(self.n, self.body - other.body, self.d)

    def __neg__(self):
        return Representation(self.n, -self.body, self.d)

    def scale(self, c) -> "Representation":
        return Representation(self.n, self.body.scale(c), self.d)

    def without_leading_term(self) -> "Representation":
        return Representation(self.n, Polynomial(self.body.terms[1:]), self.d)

    def __str__(self):
        return f"rep(n={self.n}, d={self.d}) {self.body}"


def _check_compatible(a: Representation, b: Representation):
    if a.n != b.n:
        raise RepresentationError(f"level mismatch: {a.n} vs {b.n}")
    if a.d != b.d and a.body and b.body:
        raise RepresentationError(f"degree mismatch: {a.d} vs {b.d}")


def expand(r: Representation, m: int) -> Representation:
    """The m-expansion of ``r`` (its m-representation), ``m >= r.n``."""
    if m < r.n:
        raise RepresentationError(f"cannot expand from level {r.n} down to {m}")
    if m == r.n:
        return r
    out = {}
    for alpha, c in r.body.terms:
        for beta, mapping in orbit_split(alpha, r.n, m):
            v = coeff_act(c, mapping) if mapping else c
            out[beta] = out[beta] + v if beta in out else v
    return Representation(m, Polynomial(out), r.d)


def decode(r: Representation, m: int) -> Polynomial:
    """The truncation f^(m) of the encoded series, as an honest polynomial."""
    out = {}
    if m < r.n:
        for alpha, c in r.body.terms:
            if alpha.max_index <= m:
                out[alpha] = c
        return Polynomial(out)
    for alpha, c in r.body.terms:
        for beta, mapping in orbit_split(alpha, r.n, m, complete=True):
            v = coeff_act(c, mapping) if mapping else c
            out[beta] = out[beta] + v if beta in out else v
    return Polynomial(out)


def encode(f: Polynomial, n: int, d: int | None = None) -> Representation:
    """Keep the orbit-maximal terms of a truncation (inverse of ``decode``)."""
    body = Polynomial({m: c for m, c in f.terms if is_orbit_max(m, n)})
    if d is None:
        d = f.degree if f else 0
    return Representation(n, body, d)


def _fixed_term(r: Representation):
    """If ``r`` is a single term supported on x1..xn, return (c, mono)."""
    if len(r.body.terms) == 1:
        mono, c = r.body.terms[0]
        if mono.max_index <= r.n:
            return c, mono
    return None


def product(n: int, f: Representation, h: Representation) -> Representation:
    """n-representation of the product of the encoded series."""
    if f.n != n or h.n != n:
        raise RepresentationError(f"level mismatch: product at level {n} of {f.n}, {h.n}")
    e = f.d + h.d
    if not f.body or not h.body:
        return Representation(n, Polynomial(), e)
    # a monomial on x1..xn is S_{>n}-fixed and keeps every tail intact
    t = _fixed_term(f)
    if t is not None:
        return Representation(n, h.body.mul_term(t[0], t[1]), e)
    t = _fixed_term(h)
    if t is not None:
        return Representation(n, f.body.mul_term(t[0], t[1]), e)
    return Representation(n, _orbit_product(n, e, _Coefficients(f), _Coefficients(h)), e)


class _Coefficients:
    """Coefficient lookup for arbitrary monomials of an encoded series.

    Monomials are dense tuples; the coefficient of a non-maximal orbit
    member is the representative's coefficient moved by the permutation
    that orbit_split would use.
    """

    def __init__(self, r: Representation):
        n = r.n
        self.n = n
        self.d = r.d
        self.table = {}
        self.heads = set()
        for mono, c in r.body.terms:
            dense = mono.dense(max(mono.max_index, n))
            head, tail = dense[:n], dense[n:]
            self.table[(head, tail)] = c
            self.heads.add(head)
        self.acts = any(hasattr(c, "act") for _, c in r.body.terms)
        tails = [tuple(x for x in tail if x) for _, tail in self.table]
        self.width = max(len(t) for t in tails)
        self.top = max((max(t) for t in tails if t), default=0)
        self.memo = {}

    def get(self, head, tail):
        key = (head, tail)
        if key in self.memo:
            return self.memo[key]
        nz = [(e, k) for k, e in enumerate(tail) if e]
        nz.sort(key=lambda p: -p[0])  # stable: ascending position per value
        rep = tuple(e for e, _ in nz)
        c = self.table.get((head, rep))
        if c is not None and self.acts:
            n = self.n
            mapping = {}
            for j, (_, k) in enumerate(nz):
                if j != k:
                    mapping[n + 1 + j] = n + 1 + k
            if mapping:
                c = coeff_act(c, complete_permutation(mapping))
        self.memo[key] = c
        return c


@lru_cache(maxsize=None)
def _placements(values: tuple, bound: tuple) -> tuple:
    """Distinct arrangements t of the multiset ``values`` (padded with zeros)
    with t[k] <= bound[k] for every position k."""
    size = len(bound)
    if len(values) > size:
        return ()
    counts = Counter(values)
    out = [0] * size
    found = []

    def rec(k, left):
        if left == 0:
            found.append(tuple(out))
            return
        if size - k > left:
            rec(k + 1, left)
        for v in counts:
            if counts[v] and v <= bound[k]:
                counts[v] -= 1
                out[k] = v
                rec(k + 1, left - 1)
                out[k] = 0
                counts[v] += 1

    rec(0, len(values))
    return tuple(found)


_dense_monomial = lru_cache(maxsize=1 << 18)(Monomial.from_dense)


@lru_cache(maxsize=None)
def _complements(values: tuple, bound: tuple) -> tuple:
    """((sorted nonzero part of bound - t, multiplicity), ...) over the
    placements t of ``values`` below ``bound``."""
    out = Counter()
    for t in _placements(values, bound):
        out[tuple(sorted((x - y for x, y in zip(bound, t) if x != y), reverse=True))] += 1
    return tuple(out.items())


def _orbit_product(n, e, f: _Coefficients, h: _Coefficients) -> Polynomial:
    # Only orbit-maximal monomials gamma of the product are needed.  Their
    # head (exponents on x1..xn) is a sum of a head of f and a head of h, and
    # their tail is a partition; each coefficient sums f(alpha) h(gamma-alpha)
    # over the orbit members alpha of terms of f that divide gamma.
    if len(f.table) > len(h.table):
        f, h = h, f
    by_head = {}
    for head, tail in f.table:
        by_head.setdefault(head, []).append(tuple(sorted(x for x in tail if x)))
    width = f.width + h.width
    top = f.top + h.top
    out = {}
    if not (f.acts or h.acts):
        # constant coefficients do not depend on the arrangement of a tail
        htab = h.table
        fgroups = {}
        for (hf, tail), c in f.table.items():
            fgroups.setdefault(hf, []).append((tuple(x for x in tail if x), c))
        for hf, ftails in fgroups.items():
            for hh in h.heads:
                head = tuple(a + b for a, b in zip(hf, hh))
                for part in _partitions(e - sum(head), top):
                    if len(part) > width:
                        continue
                    acc = None
                    for values, cf in ftails:
                        inner = None
                        for w, mult in _complements(values, part):
                            b = htab.get((hh, w))
                            if b is None:
                                continue
                            if mult != 1:
                                b = b * mult
                            inner = b if inner is None else inner + b
                        if inner is not None:
                            v = cf * inner
                            acc = v if acc is None else acc + v
                    if acc is not None:
                        gamma = _dense_monomial(head + part)
                        out[gamma] = out[gamma] + acc if gamma in out else acc
        return Polynomial(out)
    for hf, tails in by_head.items():
        for hh in h.heads:
            head = tuple(a + b for a, b in zip(hf, hh))
            for part in _partitions(e - sum(head), top):
                if len(part) > width:
                    continue
                acc = None
                for values in tails:
                    for t in _placements(values, part):
                        b = h.get(hh, tuple(x - y for x, y in zip(part, t)))
                        if b is None:
                            continue
                        v = f.get(hf, t) * b
                        acc = v if acc is None else acc + v
                if acc is not None:
                    gamma = _dense_monomial(head + part)
                    out[gamma] = out[gamma] + acc if gamma in out else acc
    return Polynomial(out)


def _check_divisors(n: int, F):
    for i, f in enumerate(F):
        if f.n != n:
            raise RepresentationError(f"divisor {i} has level {f.n}, expected {n}")
        if not f.body:
            raise RepresentationError(f"divisor {i} is zero")
        if f.lmon.max_index > n:
            raise RepresentationError(
                f"leading monomial {f.lmon} of divisor {i} involves variables beyond x{n}"
            )
        if f.lc != 1:
            raise RepresentationError(f"divisor {i} is not monic")


def remainder(n: int, h: Representation, F) -> Representation:
    """n-representation of a remainder of ``h`` modulo the monic ``F``.

    No term of the result is divisible by any ``lmon(F[i])``.  The
    grevlex-largest divisible term is eliminated first, using the divisor
    of lowest index.
    """
    F = list(F)
    _check_divisors(n, F)
    if h.n != n:
        raise RepresentationError(f"level mismatch: {h.n} vs {n}")
    leads = [f.lmon for f in F]
    work = _Work(h.body)
    rem = {}
    while True:
        top = work.pop_lead()
        if top is None:
            return Representation(n, Polynomial(rem), h.d)
        alpha, c = top
        for i, lm in enumerate(leads):
            if lm.divides(alpha):
                break
        else:
            rem[alpha] = work.drop(alpha)
            continue
        q = alpha / lm
        if q.max_index <= n:
            prod = F[i].body.mul_term(c, q)
        elif hasattr(c, "act"):
            # orbit members of the quotient carry permuted coefficients
            quot = Representation(n, Polynomial({q: c}), q.degree)
            prod = _orbit_product(n, h.d, _Coefficients(quot), _coefficients_of(_Identity(F[i])))
        else:
            prod = _monomial_multiple(n, q, _Identity(F[i])).scale(c)
        if prod.lmon != alpha:
            raise AssertionError("remainder step failed to cancel the leading divisible term")
        work.subtract(prod)


class _Identity:
    """Hashes a value by identity (coefficients need not be hashable)."""

    __slots__ = ("value",)

    def __init__(self, value):
        self.value = value

    def __hash__(self):
        return id(self.value)

    def __eq__(self, other):
        return self.value is other.value


@lru_cache(maxsize=64)
def _coefficients_of(f: _Identity) -> _Coefficients:
    return _Coefficients(f.value)


@lru_cache(maxsize=65536)
def _monomial_multiple(n: int, q: Monomial, f: _Identity) -> Polynomial:
    """Body of the product of the monic ``f`` with the orbit sum of ``q``."""
    g = f.value
    quot = Representation(n, Polynomial({q: g.lc}), q.degree)
    return _orbit_product(n, q.degree + g.d, _Coefficients(quot), _coefficients_of(f))


def s_pair(n: int, f: Representation, g: Representation) -> Representation:
    """n-representation of S(f, g) for monic f, g with leading monomials on x1..xn."""
    _check_divisors(n, [f, g])
    gamma = f.lmon.lcm(g.lmon)
    a = gamma / f.lmon
    b = gamma / g.lmon
    return Representation(n, f.body.mul_term(1, a) - g.body.mul_term(1, b), gamma.degree)


_REP = re.compile(r"^\s*rep\(\s*n\s*=\s*(\d+)\s*,\s*d\s*=\s*(\d+)\s*\)\s*(.*)$", re.S)


def parse_representation(text: str, field=None, line: int = 1) -> Representation:
    """Parse ``rep(n=<n>, d=<d>) <polynomial>``; validity is checked."""
    m = _REP.match(text)
    if not m:
        raise ParseError("expected 'rep(n=<n>, d=<d>) <polynomial>'", 1, line, text)
    n, d, body = int(m.group(1)), int(m.group(2)), m.group(3)
    offset = m.start(3)
    try:
        poly = parse_polynomial(body, field, line)
    except ParseError as exc:
        raise ParseError(exc.message, exc.column + offset, line, text) from None
    return Representation(n, poly, d)


def representation_from_body(body: Polynomial, n: int) -> Representation:
    """Build a representation from a homogeneous body polynomial."""
    if not body.is_homogeneous():
        raise RepresentationError("representation bodies must be homogeneous")
    d = body.degree if body else 0
    return Representation(n, body, d)




@lru_cache(maxsize=None)
def _partitions(d, largest=None):
    return tuple(_gen_partitions(d, largest))


def _gen_partitions(d, largest=None):
    largest = d if largest is None else largest
    if d == 0:
        yield ()
        return
    for first in range(min(d, largest), 0, -1):
        for rest in _gen_partitions(d - first, first):
            yield (first,) + rest


def _compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def orbit_representatives(n: int, d: int) -> list:
    """All S_{>n}-orbit-maximal monomials of degree ``d``, grevlex-descending."""
    out = []
    for k in range(d + 1):
        for head in _compositions(d - k, n):
            for tail in _partitions(k):
                out.append(Monomial.from_dense(tuple(head) + tail))
    return sorted(out, key=lambda m: m.key, reverse=True)


def random_representation(n: int, d: int, field, rng, density: float = 1.0) -> Representation:
    """Random n-representation of degree ``d`` with coefficients in ``field``."""
    terms = {}
    for mono in orbit_representatives(n, d):
        if rng.random() <= density:
            terms[mono] = field.random_element(rng)
    return Representation(n, Polynomial(terms), d)
