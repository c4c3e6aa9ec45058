"""Multiplicative and projective orders modulo n, and the derived functions
alpha (order of a**n mod n) and beta (projective order of a**n mod n).

The library path computes orders by factoring phi(n) and stripping prime
factors, so it costs a handful of modular exponentiations.  The *_oracle
functions recompute alpha and beta by literal exponent iteration instead;
they exist so sweeps and tests can cross-check the two routes.

a**order(a) - 1 is a multiple of n that the lifting formulas consume, but it
is never materialized: ``remainder_gcd`` extracts the needed gcd from a
single power reduced mod the larger modulus, which is exact because
gcd(n1, x) = gcd(n1, x mod n1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from ordlift import _backend
from ordlift.arith import euler_phi, factorize
from ordlift.errors import InvalidPairError, NotCoprimeError

__all__ = [
    "OrderRecord",
    "alpha",
    "alpha_oracle",
    "beta",
    "beta_oracle",
    "mult_order",
    "proj_order",
    "remainder_gcd",
]


@dataclass(frozen=True)
class OrderRecord:
    """A computed multiplicative order: base**order = 1 mod modulus, minimally."""

    modulus: int
    base: int
    order: int


@lru_cache(maxsize=1 << 20)
def _order_value(r: int, n: int) -> int:
    """Order of the reduced residue r mod n; caller guarantees gcd(r, n) = 1."""
    if n == 1:
        return 1
    e = euler_phi(n)
    for q, _ in factorize(e).factors:
        while e % q == 0 and pow(r, e // q, n) == 1:
            e //= q
    return e


def _reduced_coprime(a: int, n: int, what: str) -> int:
    if n < 1:
        raise ValueError(f"{what} requires n >= 1, got {n}")
    r = a % n
    if math.gcd(r, n) != 1:
        raise NotCoprimeError(f"{what} undefined: gcd({a}, {n}) != 1")
    return r


def mult_order(a: int, n: int) -> OrderRecord:
    """Multiplicative order of a mod n, for a coprime to n.

    Starts from phi(n) and strips prime factors while the congruence still
    holds, rather than scanning exponents one by one.
    """
    r = _reduced_coprime(a, n, "multiplicative order")
    return OrderRecord(n, r, _order_value(r, n))


def remainder_gcd(a: int, n2: int, n1: int) -> int:
    """gcd(n1, a**order(a mod n2) - 1), computed without the big power.

    Requires n2 | n1 and gcd(a, n1) = 1.  The result is always a multiple of
    n2 and a divisor of n1; it is the divisor the lifting formulas consume.
    """
    if n2 < 1:
        raise ValueError(f"remainder_gcd requires n2 >= 1, got {n2}")
    if n1 < 1:
        raise ValueError(f"remainder_gcd requires n1 >= 1, got {n1}")
    if n1 % n2:
        raise InvalidPairError(
            f"remainder_gcd requires n2 | n1, got ({n2}, {n1})",
            InvalidPairError.REASON_NOT_DIVISOR,
        )
    r = _reduced_coprime(a, n1, "remainder_gcd")
    o2 = _order_value(a % n2, n2)
    t = pow(r, o2, n1)
    return math.gcd(t - 1, n1)


def proj_order(a: int, n: int) -> int:
    """Smallest e >= 1 with a**e = +-1 mod n, for a coprime to n.

    Equals the plain order d unless d is even and a**(d/2) = -1, in which
    case it is d/2.  For n <= 2, where +1 and -1 coincide, it equals d.
    """
    rec = mult_order(a, n)
    d = rec.order
    if n > 2 and d % 2 == 0 and pow(rec.base, d // 2, n) == n - 1:
        return d // 2
    return d


def alpha(a: int, n: int) -> int:
    """Order of a**n mod n when gcd(a, n) = 1, else 0.

    Computed as order(a) / gcd(order(a), n): a**n generates the subgroup of
    index gcd(order(a), n) inside the cyclic group generated by a.
    """
    if n < 1:
        raise ValueError(f"alpha requires n >= 1, got {n}")
    r = a % n
    if math.gcd(r, n) != 1:
        return 0
    d = _order_value(r, n)
    return d // math.gcd(d, n)


def beta(a: int, n: int) -> int:
    """Projective order of a**n mod n when gcd(a, n) = 1, else 0."""
    if n < 1:
        raise ValueError(f"beta requires n >= 1, got {n}")
    r = a % n
    if math.gcd(r, n) != 1:
        return 0
    return proj_order(pow(r, n, n), n)


def alpha_oracle(a: int, n: int) -> int:
    """alpha recomputed the slow way: scan e = 1, 2, ... until (a**n)**e = 1.

    Shares no order-finding logic with ``alpha``; meant for tests and sweeps.
    """
    if n < 1:
        raise ValueError(f"alpha_oracle requires n >= 1, got {n}")
    r = a % n
    if math.gcd(r, n) != 1:
        return 0
    return _backend.order_scan(pow(r, n, n), n)


def beta_oracle(a: int, n: int) -> int:
    """beta recomputed the slow way: scan e = 1, 2, ... until (a**n)**e = +-1."""
    if n < 1:
        raise ValueError(f"beta_oracle requires n >= 1, got {n}")
    r = a % n
    if math.gcd(r, n) != 1:
        return 0
    return _backend.proj_order_scan(pow(r, n, n), n)
