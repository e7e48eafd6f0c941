"""Division with remainder and Buchberger's algorithm in finitely many variables."""

from __future__ import annotations

import heapq
import itertools

from .monomial import ONE, Monomial
from .polynomial import Polynomial

__all__ = [
    "divide_classical",
    "reduce_classical",
    "buchberger_classical",
    "monomial_min_gens",
    "lead_monomials",
    "is_groebner_basis",
    "s_polynomial",
    "display_order",
]


class _Work:
    """Mutable polynomial with a max-heap on monomials, used during reduction."""

    __slots__ = ("d", "heap", "queued")

    def __init__(self, poly: Polynomial):
        self.d = poly.as_dict()
        self.heap = [(tuple(-k for k in m.key), m) for m in self.d]
        heapq.heapify(self.heap)
        self.queued = set(self.d)

    def add_scaled(self, c, mono, f: Polynomial):
        d = self.d
        for m, v in f.terms:
            mm = mono * m
            if mm in d:
                nv = d[mm] - c * v
                if nv:
                    d[mm] = nv
                else:
                    del d[mm]
            else:
                d[mm] = -(c * v)
                if mm not in self.queued:
                    heapq.heappush(self.heap, (tuple(-k for k in mm.key), mm))
                    self.queued.add(mm)

    def subtract(self, f: Polynomial):
        self.add_scaled(1, ONE, f)

    def pop_lead(self):
        """Return (mono, coeff) of the current leading term, or None."""
        while self.heap:
            _, m = self.heap[0]
            if m in self.d:
                return m, self.d[m]
            heapq.heappop(self.heap)
            self.queued.discard(m)
        return None

    def drop(self, m):
        heapq.heappop(self.heap)
        self.queued.discard(m)
        return self.d.pop(m)


def divide_classical(h: Polynomial, F):
    """Divide ``h`` by the monic polynomials ``F``.

    Returns ``(quotients, remainder)`` with ``h == sum(q*f) + remainder``.  At
    every step the grevlex-largest reducible term is eliminated using the
    first divisor (lowest index) whose leading monomial divides it.
    """
    F = list(F)
    for f in F:
        if not f or f.lc != 1:
            raise ValueError("divide_classical expects nonzero monic divisors")
    if not F:
        return [], h
    leads = [f.lmon for f in F]
    quot = [dict() for _ in F]
    rem = {}
    work = _Work(h)
    while True:
        top = work.pop_lead()
        if top is None:
            break
        m, c = top
        for i, lm in enumerate(leads):
            if lm.divides(m):
                q = m / lm
                quot[i][q] = quot[i][q] + c if q in quot[i] else c
                work.add_scaled(c, q, F[i])
                break
        else:
            rem[m] = work.drop(m)
    return [Polynomial(q) for q in quot], Polynomial(rem)


def reduce_classical(h: Polynomial, F) -> Polynomial:
    """Remainder of ``h`` modulo the monic polynomials ``F``."""
    F = [f for f in F if f]
    if not F:
        return h
    leads = [f.lmon for f in F]
    rem = {}
    work = _Work(h)
    while True:
        top = work.pop_lead()
        if top is None:
            break
        m, c = top
        for lm, f in zip(leads, F):
            if lm.divides(m):
                work.add_scaled(c, m / lm, f)
                break
        else:
            rem[m] = work.drop(m)
    return Polynomial(rem)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """S-polynomial of two monic polynomials."""
    gamma = f.lmon.lcm(g.lmon)
    return f.mul_term(1, gamma / f.lmon) - g.mul_term(1, gamma / g.lmon)


def monomial_min_gens(monomials) -> list:
    """Minimal generators of the monomial ideal generated by ``monomials``,
    sorted grevlex-descending."""
    uniq = sorted(set(monomials), key=lambda m: m.key)
    gens = []
    for m in uniq:  # ascending, so a divisor is always seen before its multiples
        if not any(g.divides(m) for g in gens):
            gens.append(m)
    return sorted(gens, key=lambda m: m.key, reverse=True)


def display_order(monomials) -> list:
    """Sort for printing: by degree, then grevlex-descending within a degree."""
    return sorted(monomials, key=lambda m: (m.degree, tuple(-k for k in m.key)))


def lead_monomials(G) -> list:
    return monomial_min_gens(g.lmon for g in G if g)


def _interreduce(G):
    # drop elements whose leading monomial is a multiple of another one
    G = sorted(G, key=lambda g: g.lmon.key)
    minimal = []
    for g in G:
        if not any(h.lmon.divides(g.lmon) for h in minimal):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        tail = reduce_classical(Polynomial(g.terms[1:]), others)
        out.append(Polynomial({g.lmon: g.lc}) + tail)
    return sorted(out, key=lambda g: g.lmon.key, reverse=True)


def buchberger_classical(F, on_normalize=None, stop_on_unit: bool = False):
    """Reduced Groebner basis of the ideal generated by ``F`` (grevlex).

    Coefficients must lie in a field.  The output is monic, inter-reduced
    and sorted by leading monomial, largest first.

    ``on_normalize(c)`` is called with every leading coefficient before the
    corresponding polynomial is made monic; this is how callers trace which
    primes the computation divides by.  With ``stop_on_unit`` the
    computation returns ``[1]`` as soon as a nonzero constant appears.
    """
    G = []
    pairs = []  # heap of (lcm key, counter, i, j)
    counter = itertools.count()

    def add(f):
        if on_normalize is not None:
            on_normalize(f.lc)
        f = f.monic()
        G.append(f)
        j = len(G) - 1
        for i in range(j):
            if G[i].lmon.is_coprime(f.lmon):
                continue
            lcm = G[i].lmon.lcm(f.lmon)
            heapq.heappush(pairs, (lcm.key, next(counter), i, j))
        return f

    for f in F:
        f = reduce_classical(f, G) if G else f
        if not f:
            continue
        if stop_on_unit and f.lmon.is_one():
            if on_normalize is not None:
                on_normalize(f.lc)
            return [Polynomial.constant(f.lc / f.lc)]
        add(f)
    done = set()
    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        if (i, j) in done:
            continue
        done.add((i, j))
        r = reduce_classical(s_polynomial(G[i], G[j]), G)
        if not r:
            continue
        if stop_on_unit and r.lmon.is_one():
            if on_normalize is not None:
                on_normalize(r.lc)
            return [Polynomial.constant(r.lc / r.lc)]
        add(r)
    return _interreduce(G)


def is_groebner_basis(G) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    G = [g.monic() for g in G if g]
    for a, b in itertools.combinations(G, 2):
        if reduce_classical(s_polynomial(a, b), G):
            return False
    return True
