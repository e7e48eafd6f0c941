import random

import pytest

from symgb.core import Polynomial
from symgb.invariant import decode, encode, product
from symgb.stillman import (
    EMPTY,
    SPEC_Z,
    CofiniteWithZero,
    ConsistencyPredicate,
    ConstructibleZ,
    FiniteNonzero,
    ParamFraction,
    RadicalPredicate,
    consistent,
    cvar,
    orbit_closure_E,
    param_str,
    parse_param,
    parse_stratum,
    partition_primes,
    radical_member,
    stillman_enumerate,
    universal_system,
)
from symgb.symmetric import LevelCapExceeded
from stillman_checks import FIELDS, gl_span_holds, soundness_failures

c = cvar


def strs(elements):
    return sorted(param_str(e) for e in elements)


# -- parametric elements ---------------------------------------------------

def test_param_round_trip():
    for text in ["2*c_1_1_1-c_2_2", "c_1_1^2+3", "c_1_0_1*c_2_1-c_1_1*c_2_0_1", "0"]:
        assert param_str(parse_param(text)) == text


def test_param_fraction_arithmetic():
    a, b = ParamFraction(c(1, (1,))), ParamFraction(c(2, (1,)))
    q = a / b
    assert q * b == a
    assert (q + q) == ParamFraction(c(1, (1,)).scale(2), q.den)
    assert not (a - a)
    assert ParamFraction(1).is_one()


def test_universal_system_sizes():
    assert [len(f.body) for f in universal_system(1, [1])] == [1]
    assert [len(f.body) for f in universal_system(1, [2])] == [2]
    (f,) = universal_system(1, [3])
    assert [str(m) for m, _ in f.body.terms] == ["x1^3", "x1^2*x2", "x1*x2*x3"]
    with pytest.raises(ValueError):
        universal_system(2, [1])


def test_parametric_product_matches_decoding():
    f, g = universal_system(2, [1, 2])
    e = f.d + g.d
    got = product(0, f, g)
    want = encode(decode(f, e) * decode(g, e), 0, e)
    assert got == want


# -- orbit closures ----------------------------------------------------------

def test_orbit_closure_examples():
    assert strs(orbit_closure_E(c(1, (1,)), 2)) == ["c_1_0_1", "c_1_1"]
    assert strs(orbit_closure_E(c(1, (1,)), 1)) == ["c_1_1"]
    sq = orbit_closure_E(c(1, (1,)) * c(1, (1,)), 2)
    assert strs(sq) == ["2*c_1_0_1*c_1_1", "c_1_0_1^2", "c_1_1^2"]
    assert strs(orbit_closure_E(c(1, (1, 1)), 2)) == ["2*c_1_0_2", "2*c_1_2", "c_1_1_1"]
    assert orbit_closure_E(Polynomial(), 2) == []
    with pytest.raises(ValueError):
        orbit_closure_E(c(1, (0, 0, 1)), 2)


def test_orbit_span_numerically():
    rng = random.Random(5)
    for _ in range(30):
        k = rng.randint(1, 2)
        assert gl_span_holds(rng, [rng.randint(1, 2) for _ in range(k)], rng.randint(1, 2))


# -- constructible sets ------------------------------------------------------

def test_constructible_algebra():
    assert 0 in SPEC_Z and 7 in SPEC_Z and not EMPTY
    Y = CofiniteWithZero({2})
    assert 2 not in Y and 3 in Y and 0 in Y
    assert Y.complement() == FiniteNonzero({2})
    assert Y.intersect(FiniteNonzero({2, 3})) == FiniteNonzero({3})
    assert SPEC_Z.subtract(FiniteNonzero({5})) == CofiniteWithZero({5})
    assert FiniteNonzero({3}).union(Y) == Y
    for s in (Y, FiniteNonzero({2, 3}), EMPTY, SPEC_Z):
        assert ConstructibleZ.parse(str(s)) == s
    assert str(Y) == "cofinite excluding {2}" and str(FiniteNonzero({3, 2})) == "finite {2,3}"
    with pytest.raises(ValueError):
        FiniteNonzero({4})


# -- radical membership and consistency ----------------------------------------

def test_radical_member_examples():
    a, b = c(1, (1,)), c(2, (1,))
    for p in (0, 2, 3):
        assert radical_member(a, [a], [], 1, p)
        assert radical_member(a, [a * a], [], 1, p)
        assert not radical_member(a, [b], [], 1, p)
    with pytest.raises(ValueError):
        radical_member(a, [], [], 1, 4)
    with pytest.raises(ValueError):
        radical_member(c(1, (0, 1)), [], [], 1, 0)


def test_consistent_examples():
    a, b = c(1, (1,)), c(2, (1,))
    assert consistent([], [], 1, 0)
    assert not consistent([a], [a], 1, 0)
    assert consistent([a], [b], 1, 0)


def test_partition_primes_examples():
    a, b = c(1, (1,)), c(2, (1,))
    assert partition_primes(SPEC_Z, RadicalPredicate(a, [a], [], 1)) == (SPEC_Z, EMPTY)
    # 2c generates <c> except in characteristic 2
    two_a = a.scale(2)
    yes, no = partition_primes(SPEC_Z, RadicalPredicate(a, [two_a], [], 1))
    assert (str(yes), str(no)) == ("cofinite excluding {2}", "finite {2}")
    assert partition_primes(SPEC_Z, RadicalPredicate(a, [b], [], 1)) == (EMPTY, SPEC_Z)
    yes, no = partition_primes(FiniteNonzero({2, 3}), RadicalPredicate(a, [two_a], [], 1))
    assert (yes, no) == (FiniteNonzero({3}), FiniteNonzero({2}))
    # the predicate is consistency itself, which fails everywhere here
    assert partition_primes(SPEC_Z, ConsistencyPredicate([a], [a], 1)) == (EMPTY, SPEC_Z)
    assert partition_primes(SPEC_Z, ConsistencyPredicate([a], [b], 1)) == (SPEC_Z, EMPTY)


# -- enumeration ---------------------------------------------------------------

INSTANCES = {
    (1, (1,)): {(), ("x1",)},
    (1, (2,)): {(), ("x1^2",)},
    (2, (1, 1)): {(), ("x1",), ("x1", "x2")},
}


@pytest.fixture(scope="module")
def enumerations():
    return {key: stillman_enumerate(key[0], list(key[1]), level_cap=6) for key in INSTANCES}


@pytest.mark.parametrize("key", list(INSTANCES))
def test_enumeration_s_sets(enumerations, key):
    res = enumerations[key]
    got = {tuple(sorted(str(m) for m in S)) for S in res.s_sets}
    assert got == INSTANCES[key]
    assert res.leaves >= len(res.strata)


@pytest.mark.parametrize("key", list(INSTANCES))
def test_strata_shape_and_round_trip(enumerations, key):
    for s in enumerations[key].strata:
        assert s.Y and isinstance(s.Y, ConstructibleZ)
        assert not any(a.divides(b) for a in s.S for b in s.S if a != b)
        again = parse_stratum(str(s))
        assert str(again) == str(s) and again.identity() == s.identity()


@pytest.mark.parametrize("key", list(INSTANCES))
def test_nodes_are_consistent(enumerations, key):
    for node in enumerations[key].nodes:
        primes = sorted(node.Y.primes) if not node.Y.cofinite else [0, 2, 3, 5, 101]
        for p in primes:
            if p in node.Y:
                assert consistent(list(node.Z), list(node.N), node.m, p)


def test_enumeration_sorted_and_deterministic(enumerations):
    res = enumerations[(2, (1, 1))]
    again = stillman_enumerate(2, [1, 1], level_cap=6)
    assert [str(s) for s in res.strata] == [str(s) for s in again.strata]
    keys = [s.sort_key() for s in res.strata]
    assert keys == sorted(keys)


def test_level_cap_diagnostic():
    with pytest.raises(LevelCapExceeded) as exc:
        stillman_enumerate(1, [2], level_cap=1)
    assert {"Y", "Z", "N"} <= set(exc.value.details)


@pytest.mark.parametrize("key", list(INSTANCES))
@pytest.mark.parametrize("field_name", list(FIELDS))
def test_soundness_against_specializations(enumerations, key, field_name):
    res = enumerations[key]
    assert soundness_failures(res, list(key[1]), field_name, 10, seed=3) == []
