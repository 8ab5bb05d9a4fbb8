"""Exact arithmetic for Cohen-Ramanujan sums and their identities."""

from .arith import (
    divisors,
    factorize,
    generalized_gcd,
    inverse_mobius_transform,
    is_prime,
    jordan_totient,
    mobius,
    mobius_transform,
    omega,
    prime_exponent,
    radical,
    s_adapted_gcd,
    s_exponent,
)
from .crsum import (
    CHECKED_DIRECT_GUARD,
    DIRECT_GUARD,
    CrossCheckError,
    CrsQuery,
    CrsValue,
    DirectRoundingError,
    crs,
    crs_direct,
    crs_hoelder,
    crs_mobius,
    crs_multiplicative,
)
from .expansions import (
    ExpansionReport,
    MobiusSpec,
    coefficient,
    delange_condition_sum,
    f_from_spec,
    partial_expansion,
    rearrangement_check,
)
from .identities import (
    DivisorSumRecord,
    delange_bound,
    divisor_abs_sum,
    divisor_sum_record,
    equality_case_holds,
    grytczuk_value,
    orthogonality_sum,
    s_kn_closed_form,
    s_kn_mobius,
)

__version__ = "0.1.0"

__all__ = [
    "CHECKED_DIRECT_GUARD",
    "DIRECT_GUARD",
    "CrossCheckError",
    "CrsQuery",
    "CrsValue",
    "DirectRoundingError",
    "DivisorSumRecord",
    "ExpansionReport",
    "MobiusSpec",
    "coefficient",
    "crs",
    "crs_direct",
    "crs_hoelder",
    "crs_mobius",
    "crs_multiplicative",
    "delange_bound",
    "delange_condition_sum",
    "divisor_abs_sum",
    "divisor_sum_record",
    "divisors",
    "equality_case_holds",
    "f_from_spec",
    "factorize",
    "generalized_gcd",
    "grytczuk_value",
    "inverse_mobius_transform",
    "is_prime",
    "jordan_totient",
    "mobius",
    "mobius_transform",
    "omega",
    "orthogonality_sum",
    "partial_expansion",
    "prime_exponent",
    "radical",
    "rearrangement_check",
    "s_adapted_gcd",
    "s_exponent",
    "s_kn_closed_form",
    "s_kn_mobius",
]
