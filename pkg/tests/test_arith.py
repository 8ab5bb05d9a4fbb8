"""Integer primitives against brute-force oracles and exact identities."""

from __future__ import annotations

import math

import pytest

from crsums.arith import (
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

# ---------------------------------------------------------------- oracles


def brute_divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def brute_generalized_gcd(a: int, b: int, s: int) -> int:
    best = 1
    d = 1
    while d**s <= min(a, b):
        ds = d**s
        if a % ds == 0 and b % ds == 0:
            best = ds
        d += 1
    return best


def brute_phi(n: int) -> int:
    return sum(1 for m in range(1, n + 1) if math.gcd(m, n) == 1)


def trial_division_smallest_factor(n: int) -> int:
    for d in range(2, n + 1):
        if n % d == 0:
            return d
    return n


# ---------------------------------------------------------------- factorize


def test_factorize_examples():
    assert factorize(1) == ()
    assert factorize(12) == ((2, 2), (3, 1))
    # 97 has no divisor below itself, so it is prime
    assert trial_division_smallest_factor(97) == 97
    assert factorize(97) == ((97, 1),)


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)


def test_factorize_reconstructs_product_and_is_sorted():
    for n in range(1, 10_001):
        pairs = factorize(n)
        product = 1
        for p, e in pairs:
            assert e >= 1
            product *= p**e
        assert product == n
        assert list(pairs) == sorted(pairs)
        assert all(is_prime(p) for p, _ in pairs)


# ---------------------------------------------------------------- divisors


def test_divisors_examples():
    assert divisors(1) == (1,)
    assert divisors(6) == (1, 2, 3, 6)
    assert divisors(16) == tuple(brute_divisors(16))


def test_divisors_match_brute_force():
    for n in range(1, 201):
        divs = divisors(n)
        assert list(divs) == brute_divisors(n)
        assert divs[0] == 1 and divs[-1] == n


def test_divisors_rejects_zero():
    with pytest.raises(ValueError):
        divisors(0)


# ---------------------------------------------------------------- mobius / omega


def test_mobius_examples():
    assert mobius(1) == 1
    assert mobius(4) == 0
    assert mobius(6) == 1  # two prime factors


def test_mobius_squarefree_and_unit_convolution():
    for n in range(1, 2001):
        squarefree = all(e == 1 for _, e in factorize(n))
        assert (mobius(n) == 0) == (not squarefree)
        if squarefree:
            assert mobius(n) == (-1) ** omega(n)
        assert sum(mobius(d) for d in divisors(n)) == (1 if n == 1 else 0)


def test_omega_examples():
    assert omega(1) == 0
    assert omega(12) == 2
    assert omega(30) == len(factorize(30)) == 3


def test_radical():
    assert radical(1) == 1
    assert radical(12) == 6
    assert radical(97) == 97


# ---------------------------------------------------------------- jordan totient


def test_jordan_examples():
    assert jordan_totient(2, 1) == 1
    assert jordan_totient(1, 6) == brute_phi(6) == 2
    # pair-counting definition: #{1 <= m <= 36 : (m, 36)_2 = 1}
    count = sum(1 for m in range(1, 37) if brute_generalized_gcd(m, 36, 2) == 1)
    assert jordan_totient(2, 6) == count == 24


def test_jordan_matches_euler_totient():
    for n in range(1, 2001):
        assert jordan_totient(1, n) == brute_phi(n)


def test_jordan_rejects_bad_args():
    with pytest.raises(ValueError):
        jordan_totient(0, 5)
    with pytest.raises(ValueError):
        jordan_totient(2, 0)


# ---------------------------------------------------------------- generalized gcd


def test_generalized_gcd_examples():
    assert generalized_gcd(8, 24, 1) == brute_generalized_gcd(8, 24, 1) == 8
    assert generalized_gcd(16, 48, 2) == brute_generalized_gcd(16, 48, 2) == 16
    assert generalized_gcd(12, 18, 2) == brute_generalized_gcd(12, 18, 2) == 1


def test_generalized_gcd_matches_brute_force_small():
    for s in (1, 2, 3):
        for a in range(1, 81):
            for b in range(1, 81):
                assert generalized_gcd(a, b, s) == brute_generalized_gcd(a, b, s)


def test_generalized_gcd_structure_full_range():
    # divides both operands, is a perfect s-th power, equals gcd at s = 1
    for s in (1, 2, 3):
        for a in range(1, 501):
            for b in range(1, 501):
                g = generalized_gcd(a, b, s)
                assert a % g == 0 and b % g == 0
                root = round(g ** (1.0 / s))
                assert root**s == g
                if s == 1:
                    assert g == math.gcd(a, b)


def test_generalized_gcd_multiplicative_in_first_argument():
    coprime_pairs = [
        (m, n)
        for m in range(1, 31)
        for n in range(m + 1, 31)
        if math.gcd(m, n) == 1
    ]
    for s in (1, 2, 3):
        for m, n in coprime_pairs:
            for x in range(1, 201, 3):
                assert generalized_gcd(m * n, x, s) == generalized_gcd(
                    m, x, s
                ) * generalized_gcd(n, x, s)


def test_generalized_gcd_rejects_zero():
    for args in ((0, 3, 1), (3, 0, 1), (3, 3, 0)):
        with pytest.raises(ValueError):
            generalized_gcd(*args)


# ---------------------------------------------------------------- s-adapted gcd


def test_s_adapted_gcd_defining_property():
    for s in (1, 2, 3):
        for a in range(1, 81):
            for b in range(1, 81):
                d = s_adapted_gcd(a, b, s)
                assert a % d == 0 and b % d**s == 0
                # maximality
                for e in range(d + 1, a + 1):
                    if a % e == 0 and b % e**s == 0:
                        pytest.fail(f"{e} beats {d} for ({a},{b})_adapted_{s}")
                if s == 1:
                    assert d == math.gcd(a, b)
                assert d**s == generalized_gcd(a**s, b, s)


# ---------------------------------------------------------------- prime exponents


def test_prime_exponent_examples():
    assert prime_exponent(2, 12) == 2
    assert prime_exponent(3, 10) == 0
    assert prime_exponent(5, 250) == 3


def test_prime_exponent_rejects_composite_base():
    with pytest.raises(ValueError):
        prime_exponent(6, 12)
    with pytest.raises(ValueError):
        prime_exponent(2, 0)


def test_s_exponent():
    assert s_exponent(2, 4, 2) == 1
    assert s_exponent(2, 8, 2) == 1  # floor(3/2)
    assert s_exponent(3, 5, 1) == 0
    for p in (2, 3, 5):
        for n in range(1, 200):
            for s in (1, 2, 3):
                assert s_exponent(p, n, s) == prime_exponent(p, n) // s


# ---------------------------------------------------------------- Möbius transforms


def test_mobius_transform_examples():
    ones = {k: 1 for k in range(1, 11)}
    assert mobius_transform(ones, 1) == 1
    assert mobius_transform(ones, 6) == 0  # μ*1 is the indicator of 1
    identity = {k: k for k in range(1, 11)}
    assert mobius_transform(identity, 4) == 2  # 4 - 2 + 0


def test_inverse_mobius_transform_examples():
    point = {k: (1 if k == 1 else 0) for k in range(1, 10)}
    assert inverse_mobius_transform(point, 9) == 1
    identity = {k: k for k in range(1, 7)}
    assert inverse_mobius_transform(identity, 6) == 12


def test_transform_round_trip():
    bound = 200
    squares = {k: k * k for k in range(1, bound + 1)}
    forward = {k: mobius_transform(squares, k) for k in range(1, bound + 1)}
    for k in range(1, bound + 1):
        assert inverse_mobius_transform(forward, k) == squares[k]
    backward = {k: inverse_mobius_transform(squares, k) for k in range(1, bound + 1)}
    for k in range(1, bound + 1):
        assert mobius_transform(backward, k) == squares[k]


def test_transform_rejects_small_table():
    table = {k: 1 for k in range(1, 5)}
    with pytest.raises(ValueError):
        mobius_transform(table, 6)
    with pytest.raises(ValueError):
        inverse_mobius_transform(table, 6)
