"""Pure-Python kernels for the hot loops.

The compiled twin in ``_kernels.pyx`` implements exactly the same contracts;
``_backend`` picks whichever is available.  These versions double as the
reference implementation the compiled kernels are tested against.
"""

from __future__ import annotations

__all__ = ["order_scan", "proj_order_scan", "search_balanced_ap", "triangle_counts"]


def order_scan(base: int, n: int) -> int:
    """Smallest e >= 1 with base**e = 1 mod n, found by literal iteration.

    The caller guarantees gcd(base, n) = 1; the cap at n iterations turns a
    violated precondition into an error instead of a hang.
    """
    if n == 1:
        return 1
    b = base % n
    x = b
    e = 1
    while x != 1:
        x = x * b % n
        e += 1
        if e > n:
            raise ValueError("iteration cap hit: base not coprime to modulus")
    return e


def proj_order_scan(base: int, n: int) -> int:
    """Smallest e >= 1 with base**e = +-1 mod n, found by literal iteration."""
    if n <= 2:
        return order_scan(base, n)
    b = base % n
    x = b
    e = 1
    while x != 1 and x != n - 1:
        x = x * b % n
        e += 1
        if e > n:
            raise ValueError("iteration cap hit: base not coprime to modulus")
    return e


def triangle_counts(elements, n: int) -> list[int]:
    """Residue multiplicities of the iterated pairwise-sum triangle.

    Row r+1 entry j is (row r entry j + row r entry j+1) mod n; counts cover
    all m(m+1)/2 entries of an m-element input.
    """
    row = [x % n for x in elements]
    counts = [0] * n
    for x in row:
        counts[x] += 1
    while len(row) > 1:
        row = [(row[i] + row[i + 1]) % n for i in range(len(row) - 1)]
        for x in row:
            counts[x] += 1
    return counts


def search_balanced_ap(n: int, m: int):
    """First (start, step) in [0,n)^2, scanned lexicographically, whose
    length-m arithmetic progression has a balanced triangle; None if none."""
    total = m * (m + 1) // 2
    if total % n:
        return None
    target = total // n
    for c in range(n):
        for d in range(n):
            seq = [(c + k * d) % n for k in range(m)]
            if all(v == target for v in triangle_counts(seq, n)):
                return (c, d)
    return None
