"""Dynamic programs for the sock matching recurrences.

These never touch the closed forms, so agreement with :mod:`closedform` is
an independent check.  Boundary conventions for B (never stated for the
recurrences but consumed by them):

* ``B(m, 0) = C_m`` for m >= 0 -- every path has height >= 0;
* ``B(0, j) = 0`` for j >= 1 -- the empty path has height 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import DomainError
from .numeric import Count, catalan

__all__ = [
    "CountTable",
    "a_recurrence",
    "b_table_first",
    "b_table_second",
    "b_recurrence_first",
    "b_recurrence_second",
]


@dataclass(frozen=True)
class CountTable:
    """Dense table of counts, ``rows[n][c]`` for 0 <= n <= n_max, 0 <= c <= c_max."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    @property
    def c_max(self) -> int:
        return len(self.rows[0]) - 1

    def __getitem__(self, index: tuple[int, int]) -> Count:
        n, c = index
        if n < 0 or c < 0:
            raise IndexError(index)
        return self.rows[n][c]


def a_recurrence(n_max: int, t_max: int) -> CountTable:
    """Table of A(n, t) from A(n, t+1) = sum_i A(n-1-i, t+1) A(i, t)."""
    if n_max < 0 or t_max < 0:
        raise DomainError(f"a_recurrence needs nonnegative bounds, got {n_max}, {t_max}")
    # cols[t][n]; filled one height column at a time
    cols = [[1] + [0] * n_max]
    for t in range(t_max):
        prev = cols[t]
        cur = [1] + [0] * n_max
        for n in range(1, n_max + 1):
            cur[n] = sum(cur[n - 1 - i] * prev[i] for i in range(n))
        cols.append(cur)
    return CountTable(tuple(tuple(cols[t][n] for t in range(t_max + 1)) for n in range(n_max + 1)))


def _b_table(n_max: int, k_max: int, cell: Callable[[list[list[int]], list[int], int, int], int]) -> CountTable:
    if n_max < 0 or k_max < 0:
        raise DomainError(f"B table needs nonnegative bounds, got {n_max}, {k_max}")
    cat = [catalan(m) for m in range(n_max + 1)]
    # b[k][n]; column k only reads columns k and k-1
    b = [cat[:]]
    for k in range(1, k_max + 1):
        col = [0] * (n_max + 1)
        b.append(col)
        for n in range(1, n_max + 1):
            col[n] = cell(b, cat, n, k)
    return CountTable(tuple(tuple(b[k][n] for k in range(k_max + 1)) for n in range(n_max + 1)))


def _first_cell(b: list[list[int]], cat: list[int], n: int, k: int) -> int:
    # split at the first return to the axis, (i, i)
    lo, here = b[k - 1], b[k]
    total = 0
    for i in range(1, n + 1):
        total += lo[i - 1] * cat[n - i] + cat[i - 1] * here[n - i] - lo[i - 1] * here[n - i]
    return total


def _second_cell(b: list[list[int]], cat: list[int], n: int, k: int) -> int:
    # split at the last visit to the axis before (n, n)
    lo, here = b[k - 1], b[k]
    total = 0
    for j in range(n):
        total += here[j] * cat[n - j - 1] + cat[j] * lo[n - j - 1] - here[j] * lo[n - j - 1]
    return total


def b_table_first(n_max: int, k_max: int) -> CountTable:
    """Table of B(n, k), 0 <= n <= n_max, 0 <= k <= k_max, via the first-return recurrence."""
    return _b_table(n_max, k_max, _first_cell)


def b_table_second(n_max: int, k_max: int) -> CountTable:
    """Same as :func:`b_table_first` but via the last-return recurrence."""
    return _b_table(n_max, k_max, _second_cell)


def b_recurrence_first(n: int, k: int) -> Count:
    if n < 0 or k < 1:
        raise DomainError(f"B(n, k) needs n >= 0 and k >= 1, got n={n}, k={k}")
    return b_table_first(n, k)[n, k]


def b_recurrence_second(n: int, k: int) -> Count:
    if n < 0 or k < 1:
        raise DomainError(f"B(n, k) needs n >= 0 and k >= 1, got n={n}, k={k}")
    return b_table_second(n, k)[n, k]
