"""Non-recursive exact formulas for bounded Dyck path counts.

Notation: ``B(n, k)`` counts Dyck paths of semilength ``n`` whose height is at
least ``k``; ``A(n, t)`` counts those whose height is at most ``t``.  Every
infinite sum below is truncated at the first index where all binomial
arguments go negative, which the zero convention of :func:`binomial` makes
exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .numeric import Count, binomial, catalan

__all__ = [
    "WalkSpec",
    "bounded_walk_count",
    "a_bounded",
    "b_explicit",
    "b_alt",
    "b_complement",
    "a_binomial_form",
]


@dataclass(frozen=True)
class WalkSpec:
    """A family of +-1 walks of 2n steps from 0 to 0 kept inside [-lower, upper]."""

    n: int
    lower: int = 0
    upper: int = 0

    def __post_init__(self) -> None:
        if min(self.n, self.lower, self.upper) < 0:
            raise DomainError(f"WalkSpec fields must be nonnegative: {self}")


def _narrow(value: int, what: str) -> Count:
    # a negative result means a transcription bug in the formula, never valid input
    assert value >= 0, f"{what} produced a negative count ({value})"
    return value


def bounded_walk_count(spec: WalkSpec) -> Count:
    """Number of walks in ``spec``, by the iterated reflection formula."""
    n, h, t = spec.n, spec.lower, spec.upper
    period = h + t + 2
    two_n = 2 * n
    total = 0
    j = 0
    while n - j * period >= 0:
        base = n - j * period
        total += (
            binomial(two_n, base)
            - binomial(two_n, base - h - 1)
            - binomial(two_n, base - t - 1)
            + binomial(two_n, base - period)
        )
        j += 1
    return _narrow(total, f"bounded_walk_count{(n, h, t)}")


def a_bounded(n: int, t: int) -> Count:
    """A(n, t): Dyck paths of semilength n with height at most t.

    ``A(0, t) = 1`` for every t (the empty path).
    """
    if n < 0 or t < 0:
        raise DomainError(f"a_bounded needs n, t >= 0, got n={n}, t={t}")
    if n == 0:
        return 1
    return bounded_walk_count(WalkSpec(n, 0, t))


def _check_bk(n: int, k: int) -> None:
    if n < 0 or k < 1:
        raise DomainError(f"B(n, k) needs n >= 0 and k >= 1, got n={n}, k={k}")


def b_explicit(n: int, k: int) -> Count:
    """B(n, k) as a difference of two binomial sums."""
    _check_bk(n, k)
    step = k + 1
    first = sum(
        binomial(2 * n + 2, n + 1 - j * step) for j in range(1, (n + 1) // step + 1)
    )
    second = sum(binomial(2 * n, n - j * step) for j in range(1, n // step + 1))
    return _narrow(first - 4 * second, f"b_explicit{(n, k)}")


def b_alt(n: int, k: int) -> Count:
    """B(n, k) as a second-difference binomial sum over j >= 1."""
    _check_bk(n, k)
    step = k + 1
    two_n = 2 * n
    total = 0
    j = 1
    # (n + 1) - j*step is the largest argument; once negative, every term is zero
    while n + 1 - j * step >= 0:
        base = n - j * step
        total += (
            binomial(two_n, base + 1) - 2 * binomial(two_n, base) + binomial(two_n, base - 1)
        )
        j += 1
    return _narrow(total, f"b_alt{(n, k)}")


def b_complement(n: int, k: int) -> Count:
    """B(n, k) = C_n - A(n, k - 1), with A taken from the reflection formula."""
    if n < 1 or k < 1:
        raise DomainError(f"b_complement needs n >= 1 and k >= 1, got n={n}, k={k}")
    return _narrow(catalan(n) - a_bounded(n, k - 1), f"b_complement{(n, k)}")


def _a_binomial_form_unchecked(n: int, t: int) -> int:
    period = t + 2
    low = binomial(2 * n - 1, n - 1) + sum(
        binomial(2 * n, n - j * period) for j in range(1, n // period + 1)
    )
    high = binomial(2 * n + 1, n) + sum(
        binomial(2 * n + 2, n + 1 - j * period) for j in range(1, (n + 1) // period + 1)
    )
    return 4 * low - high


def a_binomial_form(n: int, t: int) -> Count:
    """A(n, t) from the cosine power-sum identity, valid for n >= t + 2.

    Raises :class:`DomainError` outside that range instead of falling back;
    use :func:`a_bounded` there.
    """
    if t < 0 or n < 1:
        raise DomainError(f"a_binomial_form needs n >= 1 and t >= 0, got n={n}, t={t}")
    if n < t + 2:
        raise DomainError(f"a_binomial_form requires n >= t + 2, got n={n}, t={t}")
    return _narrow(_a_binomial_form_unchecked(n, t), f"a_binomial_form{(n, t)}")
