"""Exact combinatorial primitives.

Counts are plain Python ``int`` (arbitrary precision) and ratios are
:class:`fractions.Fraction`, which already keeps itself in lowest terms.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

Count = int
Ratio = Fraction

__all__ = [
    "Count",
    "Ratio",
    "binomial",
    "catalan",
    "catalan_via_convolution",
    "catalan_stirling_approx",
    "catalan_stirling_ratio",
]


def binomial(n: int, r: int) -> Count:
    """C(n, r), with the convention C(n, r) = 0 for r < 0 or r > n."""
    if n < 0:
        raise ValueError(f"binomial: n must be nonnegative, got {n}")
    if r < 0 or r > n:
        return 0
    return math.comb(n, r)


class _CatalanTable:
    """Growable memo of Catalan numbers, safe for concurrent callers."""

    def __init__(self) -> None:
        self._values: list[int] = [1]
        self._lock = threading.Lock()

    def get(self, n: int) -> int:
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            values = self._values
            while len(values) <= n:
                m = len(values) - 1
                # C_{m+1} = C_m * 2(2m+1) / (m+2), always exact
                values.append(values[m] * 2 * (2 * m + 1) // (m + 2))
            return values[n]


_catalan_table = _CatalanTable()


def catalan(n: int) -> Count:
    """The n-th Catalan number C(2n, n) / (n + 1)."""
    if n < 0:
        raise ValueError(f"catalan: n must be nonnegative, got {n}")
    return _catalan_table.get(n)


def catalan_via_convolution(n: int) -> Count:
    """Catalan number from C_0 = 1, C_{m+1} = sum_i C_i C_{m-i}.

    Deliberately unmemoized and independent of :func:`catalan`.
    """
    if n < 0:
        raise ValueError(f"catalan_via_convolution: n must be nonnegative, got {n}")
    c = [1]
    for m in range(n):
        c.append(sum(c[i] * c[m - i] for i in range(m + 1)))
    return c[n]


def _log_stirling(n: int) -> float:
    return n * math.log(4.0) - 1.5 * math.log(n) - 0.5 * math.log(math.pi)


def catalan_stirling_approx(n: int) -> float:
    """Stirling-based estimate 4^n / (n^{3/2} sqrt(pi)) of C_n.

    Raises OverflowError once the estimate exceeds the float range (n > 513).
    """
    if n < 1:
        raise ValueError(f"catalan_stirling_approx: n must be positive, got {n}")
    return math.exp(_log_stirling(n))


def catalan_stirling_ratio(n: int) -> float:
    """catalan_stirling_approx(n) / catalan(n), computed in log space for any n."""
    if n < 1:
        raise ValueError(f"catalan_stirling_ratio: n must be positive, got {n}")
    return math.exp(_log_stirling(n) - math.log(catalan(n)))
