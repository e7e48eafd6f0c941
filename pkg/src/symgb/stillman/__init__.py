"""Stratified enumeration of the generic initial ideals of k forms of given
degrees over the universal coefficient ring."""

from .closure import orbit_closure_E, substitute_g, transform_coefficient
from .constructible import EMPTY, SPEC_Z, CofiniteWithZero, ConstructibleZ, FiniteNonzero
from .enumerate import (
    EnumerationResult,
    Node,
    Stratum,
    format_stratum,
    parse_stratum,
    stillman_enumerate,
    universal_system,
)
from .params import ParamFraction, cvar, param_str, parse_param
from .radical import (
    ConsistencyPredicate,
    HarvestMismatch,
    RadicalPredicate,
    consistent,
    partition_primes,
    radical_member,
)
from .specialize import coefficient_values, in_stratum

__all__ = [
    "CofiniteWithZero",
    "ConsistencyPredicate",
    "ConstructibleZ",
    "EMPTY",
    "EnumerationResult",
    "FiniteNonzero",
    "HarvestMismatch",
    "Node",
    "ParamFraction",
    "RadicalPredicate",
    "SPEC_Z",
    "Stratum",
    "coefficient_values",
    "consistent",
    "cvar",
    "format_stratum",
    "in_stratum",
    "orbit_closure_E",
    "param_str",
    "parse_param",
    "parse_stratum",
    "partition_primes",
    "radical_member",
    "stillman_enumerate",
    "substitute_g",
    "transform_coefficient",
    "universal_system",
]
