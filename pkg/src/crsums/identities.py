"""Divisor-sum identities for Cohen-Ramanujan sums.

Central object: h_n(k) = Σ_{q|k} |c_q^(s)(n)|.  This module computes it
literally from the sum evaluators and, along independent routes, the bound
n·2**ω(k) it never exceeds, the exact closed form

    Σ_{q|k} |c_q^(s)(n)| = 2**ω(k**s / (k**s,n)_s) · (k**s,n)_s,

the orthogonality relation Σ_{q|k} c_q^(s)(n**s) = k**s·[k|n], and the
Möbius inversion S(k,n) of the closed form, which recovers |c_k^(s)(n)|.
Every comparison is an exact integer equality; there are no tolerances
anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import (
    _require_positive,
    divisors,
    generalized_gcd,
    jordan_totient,
    mobius,
    omega,
    radical,
    s_adapted_gcd,
)
from .crsum import _multiplicative_value


@dataclass(frozen=True)
class DivisorSumRecord:
    """One verified cell: the divisor absolute sum with both closed forms."""

    k: int
    n: int
    s: int
    h_value: int
    delange_bound: int
    grytczuk_value: int


def divisor_abs_sum(k: int, n: int, s: int) -> int:
    """h_n(k) = Σ_{q|k} |c_q^(s)(n)|, summed term by term."""
    _require_positive(k=k, n=n, s=s)
    return sum(abs(_multiplicative_value(q, n, s)) for q in divisors(k))


def delange_bound(k: int, n: int, s: int) -> int:
    """The bound n·2**ω(k) that divisor_abs_sum never exceeds.

    The value does not depend on s; the argument is kept so the three
    quantities of a sweep cell share one signature.
    """
    _require_positive(k=k, n=n, s=s)
    return n * 2 ** omega(k)


def grytczuk_value(k: int, n: int, s: int) -> int:
    """Exact closed form 2**ω(k**s/(k**s,n)_s) · (k**s,n)_s of divisor_abs_sum."""
    _require_positive(k=k, n=n, s=s)
    ks = k**s
    g = generalized_gcd(ks, n, s)
    return 2 ** omega(ks // g) * g


def divisor_sum_record(k: int, n: int, s: int) -> DivisorSumRecord:
    """Compute all three cell quantities; invariant checks live in the sweeps."""
    return DivisorSumRecord(
        k=k,
        n=n,
        s=s,
        h_value=divisor_abs_sum(k, n, s),
        delange_bound=delange_bound(k, n, s),
        grytczuk_value=grytczuk_value(k, n, s),
    )


def equality_case_holds(m: int, k: int, s: int) -> bool:
    """True when k is a multiple of m·rad(m).

    In that case divisor_abs_sum(k, m**s, s) meets the bound m**s·2**ω(k)
    exactly, so the bound is best possible.  The condition is sufficient;
    sweeps report (without asserting on) any equality cells outside it.
    """
    _require_positive(m=m, k=k, s=s)
    return k % (m * radical(m)) == 0


def orthogonality_sum(k: int, n: int, s: int) -> int:
    """Σ_{q|k} c_q^(s)(n**s); equals k**s when k | n and 0 otherwise."""
    _require_positive(k=k, n=n, s=s)
    ns = n**s
    return sum(_multiplicative_value(q, ns, s) for q in divisors(k))


def s_kn_mobius(k: int, n: int, s: int) -> int:
    """S(k,n) = Σ_{d|k} 2**ω(d**s/(d**s,n)_s)·(d**s,n)_s·μ(k/d).

    The summand is the closed form of the divisor absolute sum evaluated at
    the divisor d, so by Möbius inversion S(k,n) = |c_k^(s)(n)|.
    """
    _require_positive(k=k, n=n, s=s)
    return sum(grytczuk_value(d, n, s) * mobius(k // d) for d in divisors(k))


def s_kn_closed_form(k: int, n: int, s: int, *, plain_gcd: bool = False) -> int:
    """Totient-quotient form of S(k,n): J_s(k)/J_s(m) if m is squarefree, else 0.

    Here m = k/d with d the largest divisor of k whose s-th power divides n
    (for s = 1, d = gcd(k, n)).  That reading of d is forced by the data:
    with ``plain_gcd=True`` the ordinary gcd is used instead, which agrees
    at s = 1 but breaks for s > 1 (e.g. k=2, n=2, s=2 yields 3 while
    |c_2^(2)(2)| = 1).  The flag exists so sweeps can report the
    discrepancy; it is never used for assertions.
    """
    _require_positive(k=k, n=n, s=s)
    d = gcd(k, n) if plain_gcd else s_adapted_gcd(k, n, s)
    m = k // d
    if mobius(m) == 0:
        return 0
    jk = jordan_totient(s, k)
    jm = jordan_totient(s, m)
    if jk % jm:
        raise ArithmeticError(f"J_s(m) must divide J_s(k) for m | k; k={k}, m={m}")
    return jk // jm
