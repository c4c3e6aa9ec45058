"""Exact integer arithmetic primitives.

Factorization, p-adic valuation, radical, gcd with the gcd(0, n) = n
convention, modular exponentiation and Euler's totient.  Everything is pure
and deterministic, operates on plain Python ints (so operands past 64 bits
are fine), and factorization results are cached for the sweep-heavy callers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "Factorization",
    "divisors",
    "euler_phi",
    "factorize",
    "gcd_conv",
    "is_prime",
    "mod_pow",
    "radical",
    "valuation",
]

# Trial division handles everything below this squared; Pollard rho takes over.
_TRIAL_LIMIT = 1 << 20

# Deterministic Miller-Rabin witness set, valid for every n < 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of a positive integer.

    ``factors`` is a tuple of (prime, exponent) pairs with strictly increasing
    primes; the empty tuple represents 1.
    """

    value: int
    factors: tuple[tuple[int, int], ...]

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test, deterministic below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """Nontrivial factor of an odd composite n, via Brent's cycle finding.

    Deterministic restart sequence keeps factorizations reproducible.
    """
    c = 1
    while True:
        y, r, q = 2, 1, 1
        g, x, ys = 1, 0, 0
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1


def _split(n: int, exps: dict[int, int], mult: int = 1) -> None:
    """Recursively split a cofactor that survived trial division."""
    if is_prime(n):
        exps[n] = exps.get(n, 0) + mult
        return
    d = _pollard_rho(n)
    e = 0
    while n % d == 0:
        n //= d
        e += 1
    _split(d, exps, mult * e)
    if n > 1:
        _split(n, exps, mult)


@lru_cache(maxsize=1 << 16)
def _factor_pairs(n: int) -> tuple[tuple[int, int], ...]:
    exps: dict[int, int] = {}
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            exps[p] = e
    p = 5
    step = 2
    while p <= _TRIAL_LIMIT and p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            exps[p] = e
        p += step
        step = 6 - step
    if n > 1:
        if p * p > n:
            exps[n] = 1
        else:
            _split(n, exps)
    return tuple(sorted(exps.items()))


def factorize(n: int) -> Factorization:
    """Unique prime factorization of n >= 1."""
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    return Factorization(n, _factor_pairs(n))


def valuation(n: int, p: int) -> int:
    """p-adic valuation: the largest e >= 0 with p**e dividing n."""
    if n < 1:
        raise ValueError(f"valuation requires n >= 1, got {n}")
    if not is_prime(p):
        raise ValueError(f"valuation requires a prime p, got {p}")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def radical(n: int) -> int:
    """Largest square-free divisor: the product of the distinct primes of n."""
    result = 1
    for p, _ in factorize(n).factors:
        result *= p
    return result


def gcd_conv(a: int, n: int) -> int:
    """gcd(|a|, n) for positive n, with gcd(0, n) = n."""
    if n < 1:
        raise ValueError(f"gcd_conv requires n >= 1, got {n}")
    return math.gcd(a, n)


def mod_pow(a: int, e: int, n: int) -> int:
    """a**e mod n, with the base reduced into [0, n) first."""
    if n < 1:
        raise ValueError(f"mod_pow requires n >= 1, got {n}")
    if e < 0:
        raise ValueError(f"mod_pow requires e >= 0, got {e}")
    return pow(a % n, e, n)


def euler_phi(n: int) -> int:
    """Euler's totient, computed from the factorization."""
    result = 1
    for p, e in factorize(n).factors:
        result *= (p - 1) * p ** (e - 1)
    return result


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n).factors:
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)
