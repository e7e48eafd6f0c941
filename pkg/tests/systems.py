"""Shared generators of random test systems."""

from fractions import Fraction

from symgb.core import GF, QQ
from symgb.invariant import random_representation


class SmallRationals:
    """QQ with random elements drawn from small integers, to keep coefficient
    growth in check."""

    name = "QQ"

    def random_element(self, rng, nonzero=False):
        lo = 1 if nonzero else 0
        v = rng.randint(lo, 5) * rng.choice((1, -1))
        return Fraction(v)

    def coerce(self, v):
        return QQ.coerce(v)


F101 = GF(101)


def random_system(rng, field, max_k=2, max_d=3, max_n=2, density=0.7):
    """A random eventually invariant system (k <= max_k generators of degree
    <= max_d at base level n <= max_n)."""
    k = rng.randint(1, max_k)
    n = rng.randint(0, max_n)
    degrees = [rng.randint(1, max_d) for _ in range(k)]
    F = [random_representation(n, d, field, rng, density) for d in degrees]
    return n, degrees, F
