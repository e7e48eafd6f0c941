import random

import pytest

from symgb.core import GF, QQ, Polynomial, buchberger_classical, parse_polynomial
from symgb.core.classical import reduce_classical
from symgb.invariant import (
    Representation,
    RepresentationError,
    decode,
    encode,
    expand,
    is_orbit_max,
    orbit_rep,
    parse_representation,
    product,
    random_representation,
    remainder,
    s_pair,
)

P = parse_polynomial


def R(n, body, d=None):
    body = P(body)
    return Representation(n, body, body.degree if d is None else d)


# -- orbits and representations ----------------------------------------------

def test_orbit_max():
    assert is_orbit_max(P("x1*x2^2").lmon, 1)
    assert not is_orbit_max(P("x1*x3").lmon, 1)
    assert orbit_rep(P("x1*x3^2*x5").lmon, 1) == P("x1*x2^2*x3").lmon


def test_invalid_representations():
    with pytest.raises(RepresentationError):
        R(1, "x1*x3")  # not orbit-maximal
    with pytest.raises(RepresentationError):
        R(0, "x1+x1^2")  # not homogeneous
    with pytest.raises(RepresentationError):
        Representation(0, P("x1"), 2)  # degree mismatch


def test_parse_representation():
    r = parse_representation("rep(n=1, d=2) x1^2+x2^2")
    assert r == R(1, "x1^2+x2^2")
    assert parse_representation(str(r)) == r


def test_expand_examples():
    assert expand(R(0, "x1"), 1) == R(1, "x1+x2")
    assert expand(R(1, "x1^2+x2^2"), 2) == R(2, "x1^2+x2^2+x3^2")
    assert expand(R(0, "x1*x2"), 1) == R(1, "x1*x2+x2*x3")
    r = R(1, "x1*x2+x2^2")
    assert expand(r, 1) == r
    with pytest.raises(RepresentationError):
        expand(r, 0)


def test_decode_encode():
    f = decode(R(0, "x1"), 3)
    assert f == P("x1+x2+x3")
    assert encode(f, 0) == R(0, "x1")


@pytest.mark.parametrize("field", [QQ, GF(101)], ids=["QQ", "F101"])
def test_expand_composes(field):
    rng = random.Random(11)
    for _ in range(40):
        n, d = rng.randint(0, 2), rng.randint(1, 3)
        r = random_representation(n, d, field, rng)
        for m in range(n, n + 3):
            for m2 in range(m, m + 2):
                assert expand(expand(r, m), m2) == expand(r, m2)


def test_round_trip_through_truncation():
    rng = random.Random(12)
    for _ in range(40):
        n, d = rng.randint(0, 2), rng.randint(1, 3)
        r = random_representation(n, d, QQ, rng)
        for m in range(n, n + d + 1):
            f = decode(r, m + d)
            assert encode(f, m, d) == expand(r, m)


# -- product -------------------------------------------------------------------

def test_product_examples():
    one = Representation(0, Polynomial.constant(1), 0)
    assert product(0, R(0, "x1"), R(0, "x1")) == R(0, "x1^2+2*x1*x2")
    assert product(0, R(0, "x1"), one) == R(0, "x1")
    assert product(1, R(1, "x1"), R(1, "x2")) == R(1, "x1*x2")
    with pytest.raises(RepresentationError):
        product(1, R(0, "x1"), R(1, "x1"))


@pytest.mark.parametrize("field", [QQ, GF(101)], ids=["QQ", "F101"])
def test_product_commutes_with_truncation(field):
    rng = random.Random(13)
    for _ in range(60):
        n = rng.randint(0, 2)
        f = random_representation(n, rng.randint(1, 3), field, rng, 0.7)
        h = random_representation(n, rng.randint(1, 3), field, rng, 0.7)
        e = f.d + h.d
        fh = product(n, f, h)
        assert fh.d == e
        top = n + e
        reference = encode(decode(f, top) * decode(h, top), n, e)
        assert fh == reference


# -- remainder and S-pairs ----------------------------------------------------

def _member(g, gens):
    return not reduce_classical(g, buchberger_classical(gens)) if g else True


def test_remainder_examples():
    h, f = R(1, "x1^2+x2^2"), R(1, "x1+x2")
    r = remainder(1, h, [f])
    assert r == R(1, "2*x2^2+2*x2*x3")
    for m in range(3, 6):
        assert _member(decode(h, m) - decode(r, m), [decode(f, m)])
    untouched = R(1, "x2^2")
    assert remainder(1, untouched, [f]) == untouched
    assert not remainder(1, R(1, "x1"), [R(1, "x1")])


def test_remainder_preconditions():
    with pytest.raises(RepresentationError):
        remainder(1, R(1, "x1^2"), [R(1, "x2")])
    with pytest.raises(RepresentationError):
        remainder(1, R(1, "x1^2"), [R(1, "2*x1")])


@pytest.mark.parametrize("field", [QQ, GF(101)], ids=["QQ", "F101"])
def test_remainder_contract_random(field):
    rng = random.Random(14)
    checked = 0
    while checked < 25:
        n = rng.randint(1, 2)
        f = random_representation(n, rng.randint(1, 2), field, rng, 0.7)
        if not f or f.lmon.max_index > n:
            continue
        f = f.scale(1 / f.lc) if field is QQ else f.scale(f.lc ** -1)
        h = random_representation(n, f.d + rng.randint(0, 2), field, rng, 0.8)
        r = remainder(n, h, [f])
        for mono, _ in r.body.terms:
            assert not f.lmon.divides(mono)
        for m in range(n + 1, n + 3):
            assert _member(decode(h, m) - decode(r, m), [decode(f, m)])
        checked += 1


def test_s_pair_examples():
    f, g = R(1, "x1+x2"), R(1, "x1^2+x2^2")
    assert not s_pair(1, f, f)
    assert s_pair(1, f, g) == R(1, "x1*x2-x2^2")
    a, b = R(2, "x1+x3"), R(2, "x2^2+x3^2")
    assert not remainder(2, s_pair(2, a, b), [a, b])
