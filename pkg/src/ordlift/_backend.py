"""Kernel dispatch: compiled extension when built, pure Python otherwise.

The compiled kernels do 64-bit arithmetic with 128-bit intermediates, so
dispatch also routes oversized operands to the pure-Python versions.
"""

from __future__ import annotations

from ordlift import _pykernels

try:
    from ordlift import _kernels
except ImportError:  # extension not built
    _kernels = None

BACKEND = "compiled" if _kernels is not None else "pure-python"

_SCAN_LIMIT = 1 << 62  # modulus bound for the 64-bit scan loops
_COUNTS_LIMIT = 10**7  # modulus bound for C-side count arrays
_LENGTH_LIMIT = 1 << 24  # sequence-length bound for C-side row buffers


def order_scan(base: int, n: int) -> int:
    if _kernels is not None and n < _SCAN_LIMIT:
        return _kernels.order_scan(base, n)
    return _pykernels.order_scan(base, n)


def proj_order_scan(base: int, n: int) -> int:
    if _kernels is not None and n < _SCAN_LIMIT:
        return _kernels.proj_order_scan(base, n)
    return _pykernels.proj_order_scan(base, n)


def triangle_counts(elements, n: int) -> list[int]:
    if _kernels is not None and n <= _COUNTS_LIMIT and len(elements) <= _LENGTH_LIMIT:
        return _kernels.triangle_counts(elements, n)
    return _pykernels.triangle_counts(elements, n)


def search_balanced_ap(n: int, m: int):
    if _kernels is not None and n <= _COUNTS_LIMIT and m <= _LENGTH_LIMIT:
        return _kernels.search_balanced_ap(n, m)
    return _pykernels.search_balanced_ap(n, m)
