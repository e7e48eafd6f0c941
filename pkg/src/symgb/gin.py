"""Generic initial ideals of concrete ideals via random changes of coordinates."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .core.classical import buchberger_classical, lead_monomials
from .core.fields import GF, QQ, ExtensionField, Field, GFqElement, ModP
from .core.monomial import Monomial
from .core.polynomial import Polynomial

__all__ = [
    "CoordinateChange",
    "GinResult",
    "IndeterminateGin",
    "apply_coordinates",
    "coordinate_field",
    "field_of",
    "gin_random",
    "hilbert_function",
    "random_coordinate_change",
    "MIN_DRAW_FIELD_SIZE",
]

#: over F_p with p below this size, matrices are drawn from GF(p^k) with p^k >= it
MIN_DRAW_FIELD_SIZE = 4096


class IndeterminateGin(RuntimeError):
    """Every trial produced a different initial ideal."""

    def __init__(self, message, tally):
        super().__init__(message)
        self.tally = tally


def _is_invertible(rows) -> bool:
    a = [list(r) for r in rows]
    size = len(a)
    for col in range(size):
        piv = next((r for r in range(col, size) if a[r][col]), None)
        if piv is None:
            return False
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        for r in range(col + 1, size):
            if a[r][col]:
                factor = a[r][col] * inv
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return True


@dataclass(frozen=True)
class CoordinateChange:
    """An invertible n x n matrix g acting by x_h -> sum_j g[h][j] x_j."""

    n: int
    entries: tuple
    seed: int | None = None

    def __post_init__(self):
        entries = tuple(tuple(r) for r in self.entries)
        if len(entries) != self.n or any(len(r) != self.n for r in entries):
            raise ValueError(f"expected a {self.n}x{self.n} matrix")
        if not _is_invertible(entries):
            raise ValueError("coordinate change is singular")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> "CoordinateChange":
        return cls(n, [[field.one if i == j else field.zero for j in range(n)] for i in range(n)])

    def linear_form(self, h: int) -> Polynomial:
        """Image of x_h (1-based)."""
        return Polynomial({Monomial.var(j + 1): c for j, c in enumerate(self.entries[h - 1])})


def apply_coordinates(g: CoordinateChange, f: Polynomial) -> Polynomial:
    """Substitute x_h -> sum_j g[h][j] x_j into ``f``."""
    if f.max_index > g.n:
        raise ValueError(f"polynomial involves x{f.max_index}, beyond the dimension {g.n}")
    powers = {}

    def power(h, e):
        key = (h, e)
        if key not in powers:
            powers[key] = g.linear_form(h) if e == 1 else power(h, e - 1) * g.linear_form(h)
        return powers[key]

    out = Polynomial()
    for mono, c in f.terms:
        term = Polynomial.constant(c)
        for h, e in mono.exps:
            term = term * power(h, e)
        out = out + term
    return out


def field_of(polys) -> Field:
    """The coefficient field of the given polynomials (QQ for an empty list)."""
    for f in polys:
        for _, c in f.terms:
            if isinstance(c, ModP):
                return GF(c.p)
            if isinstance(c, GFqElement):
                return c.F
            if isinstance(c, (Fraction, int)):
                return QQ
            raise TypeError(f"coefficient {c!r} is not a field element")
    return QQ


def coordinate_field(field: Field) -> Field:
    """Field that random matrices are drawn from: ``field`` itself unless it
    is a prime field smaller than MIN_DRAW_FIELD_SIZE."""
    p = field.characteristic
    if p == 0 or isinstance(field, ExtensionField) or p >= MIN_DRAW_FIELD_SIZE:
        return field
    k = 1
    while p**k < MIN_DRAW_FIELD_SIZE:
        k += 1
    return GF(p, k)


def random_coordinate_change(n: int, field: Field, rng: random.Random, seed=None) -> CoordinateChange:
    """Random invertible matrix; singular draws are redrawn.  Entries are
    integers in [-10^4, 10^4] over QQ and uniform nonzero elements otherwise."""
    nonzero = field.characteristic != 0
    while True:
        rows = [[field.random_element(rng, nonzero=nonzero) for _ in range(n)] for _ in range(n)]
        if _is_invertible(rows):
            return CoordinateChange(n, rows, seed)


@dataclass
class GinResult:
    monomials: list
    tally: list  # [(outcome as tuple of monomials, count)] in first-seen order
    seed: int
    trials: int
    draw_field: Field

    @property
    def disagreements(self) -> int:
        return self.trials - max(count for _, count in self.tally)


def _outcome_key(outcome):
    # compares generator lists degree by degree, larger monomials first
    return tuple(m.key for m in outcome)


def gin_random(F, n: int, trials: int = 5, seed: int = 0, field: Field | None = None) -> GinResult:
    """Minimal generators of the generic initial ideal of ``<F>`` in x1..xn.

    Each trial applies a random coordinate change and records the leading
    monomials of the reduced Groebner basis.  The most frequent outcome
    wins; ties go to the grevlex-largest outcome.  Raises
    :class:`IndeterminateGin` if several trials were run and all disagree.
    """
    F = [f for f in F if f]
    if trials < 1:
        raise ValueError("at least one trial is required")
    for f in F:
        if not f.is_homogeneous():
            raise ValueError(f"{f} is not homogeneous")
        if f.max_index > n:
            raise ValueError(f"{f} involves variables beyond x{n}")
    base = field if field is not None else field_of(F)
    draw = coordinate_field(base)
    if draw is not base:
        F = [f.map_coefficients(draw.coerce) for f in F]
    rng = random.Random(seed)
    counts = Counter()
    order = []
    for _ in range(trials):
        g = random_coordinate_change(n, draw, rng, seed)
        G = buchberger_classical([apply_coordinates(g, f) for f in F]) if F else []
        outcome = tuple(lead_monomials(G))
        if outcome not in counts:
            order.append(outcome)
        counts[outcome] += 1
    tally = [(o, counts[o]) for o in order]
    if trials > 1 and len(order) == trials:
        raise IndeterminateGin(f"all {trials} trials disagree", tally)
    best = max(order, key=lambda o: (counts[o], _outcome_key(o)))
    return GinResult(list(best), tally, seed, trials, draw)


def hilbert_function(leads, n: int, t: int) -> int:
    """Number of degree-``t`` monomials in x1..xn outside the monomial ideal
    generated by ``leads``."""
    leads = list(leads)
    if t < 0:
        return 0
    if not leads:
        return comb(n + t - 1, t) if n else int(t == 0)
    count = 0
    for dense in _exponents(n, t):
        m = Monomial.from_dense(dense)
        if not any(g.divides(m) for g in leads):
            count += 1
    return count


def _exponents(n, t):
    if n == 0:
        if t == 0:
            yield ()
        return
    for first in range(t, -1, -1):
        for rest in _exponents(n - 1, t - first):
            yield (first,) + rest
