"""Exact integer primitives: factorization, divisors, Möbius, totients, gcds.

Everything here runs on Python's arbitrary-precision integers.  Quantities
like p**(s*j) outgrow 64 bits very quickly, and every identity checked by
the higher layers is an exact equality, so no floating point is allowed to
leak out of this module.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Mapping


def _require_positive(**values: int) -> None:
    for name, value in values.items():
        if value < 1:
            raise ValueError(f"{name} must be a positive integer, got {value}")


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (inputs here stay small)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


@lru_cache(maxsize=1 << 16)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n as (prime, exponent) pairs, primes increasing.

    factorize(1) == ().  Deterministic trial division with a 2,3-wheel;
    intended for operands up to ~10**9, which covers every sweep here.
    """
    _require_positive(n=n)
    pairs: list[tuple[int, int]] = []
    m = n
    for p in (2, 3):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            pairs.append((p, e))
    p = 5
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            pairs.append((p, e))
        p += 2 if p % 6 == 5 else 4
    if m > 1:
        pairs.append((m, 1))
    return tuple(pairs)


@lru_cache(maxsize=1 << 14)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n in increasing order (1 first, n last)."""
    _require_positive(n=n)
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**j for d in divs for j in range(e + 1)]
    return tuple(sorted(divs))


def mobius(n: int) -> int:
    """μ(n): 0 if a square divides n, else (-1)**omega(n)."""
    _require_positive(n=n)
    pairs = factorize(n)
    if any(e > 1 for _, e in pairs):
        return 0
    return -1 if len(pairs) % 2 else 1


def omega(n: int) -> int:
    """ω(n): number of distinct prime divisors; omega(1) == 0."""
    _require_positive(n=n)
    return len(factorize(n))


def radical(n: int) -> int:
    """rad(n): product of the distinct primes dividing n; radical(1) == 1."""
    _require_positive(n=n)
    out = 1
    for p, _ in factorize(n):
        out *= p
    return out


def jordan_totient(s: int, n: int) -> int:
    """Jordan totient J_s(n) = n**s · ∏_{p|n} (1 - p**-s), as an exact integer.

    Computed prime-power-wise as ∏ p**(s·(e-1)) · (p**s - 1) so no rational
    arithmetic is involved.  J_1 is the Euler totient φ.
    """
    _require_positive(s=s, n=n)
    total = 1
    for p, e in factorize(n):
        ps = p**s
        total *= ps ** (e - 1) * (ps - 1)
    return total


def generalized_gcd(a: int, b: int, s: int) -> int:
    """(a,b)_s: the largest s-th power d**s dividing both a and b.

    Returns the magnitude d**s itself, not d; (a,b)_1 is the ordinary gcd.
    Computed from prime exponents of gcd(a,b): the exponent of p in the
    result is s·min(e_p(a), e_p(b)) rounded down to a multiple of s.
    """
    _require_positive(a=a, b=b, s=s)
    g = gcd(a, b)
    if s == 1:
        return g
    out = 1
    for p, e in factorize(g):
        out *= p ** (s * (e // s))
    return out


def s_adapted_gcd(a: int, b: int, s: int) -> int:
    """Largest divisor d of a such that d**s divides b.

    For s = 1 this is gcd(a, b).  Its s-th power equals (a**s, b)_s, and it
    is the divisor at which the Hölder-type closed forms in this package
    evaluate their Jordan-totient quotients.
    """
    _require_positive(a=a, b=b, s=s)
    if s == 1:
        return gcd(a, b)
    d = 1
    for p, e in factorize(a):
        d *= p ** min(e, _exponent_of(p, b) // s)
    return d


def _exponent_of(p: int, k: int) -> int:
    e = 0
    while k % p == 0:
        k //= p
        e += 1
    return e


def prime_exponent(p: int, k: int) -> int:
    """e_p(k): the largest e with p**e | k.  p must be prime."""
    _require_positive(p=p, k=k)
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    return _exponent_of(p, k)


def s_exponent(p: int, n: int, s: int) -> int:
    """Largest a with p**(a·s) | n, i.e. prime_exponent(p, n) // s."""
    _require_positive(s=s)
    return prime_exponent(p, n) // s


def _table_bound(table: Mapping[int, int], k: int) -> None:
    bound = max(table, default=0)
    if k > bound:
        raise ValueError(f"table covers 1..{bound}, cannot evaluate at {k}")


def mobius_transform(f: Mapping[int, int], k: int) -> int:
    """(μ*f)(k) = Σ_{d|k} μ(d)·f(k/d) from a table of f on 1..K."""
    _require_positive(k=k)
    _table_bound(f, k)
    return sum(mobius(d) * f[k // d] for d in divisors(k))


def inverse_mobius_transform(g: Mapping[int, int], k: int) -> int:
    """Σ_{d|k} g(d); inverts mobius_transform on tables over 1..K."""
    _require_positive(k=k)
    _table_bound(g, k)
    return sum(g[d] for d in divisors(k))
