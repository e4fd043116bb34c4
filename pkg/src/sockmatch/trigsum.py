"""Trigonometric forms of A(n, t) and the asymptotics of the hit probability.

The float evaluations are confined to ``n <= 25``: there 4^{n+1} is about
4.5e15 and a correctly compensated sum still rounds to the exact count with a
wide margin.  Outside that envelope the functions refuse.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple

from .closedform import b_complement
from .errors import DomainError, PrecisionError
from .numeric import Count, Ratio, binomial, catalan

__all__ = [
    "TRIG_N_MAX",
    "RESIDUAL_LIMIT",
    "TrigEvaluation",
    "ConvergenceRow",
    "a_trig",
    "a_trig_split",
    "cos_power_sum",
    "dominant_term",
    "one_minus_p_estimate",
    "convergence_series",
    "hit_probability_uniform",
]

TRIG_N_MAX = 25
RESIDUAL_LIMIT = 0.25


@dataclass(frozen=True)
class TrigEvaluation:
    raw: float
    rounded: Count
    residual: float


def _cos_squared(j: int, period: int) -> float:
    """cos^2(j*pi/period).

    By Niven's theorem cos^2 of a rational multiple of pi is rational only
    when cos(2x) is in {0, +-1/2, +-1}; those values are returned exactly so
    that e.g. the height-1 term is exactly 1 rather than 1 +- ulp.
    """
    r = Fraction(2 * j, period) % 2  # 2x / pi reduced mod 2
    exact = {
        Fraction(0): 1.0,
        Fraction(1, 3): 0.75,
        Fraction(1, 2): 0.5,
        Fraction(2, 3): 0.25,
        Fraction(1): 0.0,
        Fraction(4, 3): 0.25,
        Fraction(3, 2): 0.5,
        Fraction(5, 3): 0.75,
    }.get(r)
    if exact is not None:
        return exact
    return math.cos(j * math.pi / period) ** 2


def _check_envelope(n: int, t: int) -> None:
    if not 1 <= n <= TRIG_N_MAX:
        raise DomainError(f"trigonometric evaluation needs 1 <= n <= {TRIG_N_MAX}, got n={n}")
    if t < 0:
        raise DomainError(f"t must be nonnegative, got {t}")


def _round(raw: float, what: str) -> TrigEvaluation:
    rounded = round(raw)
    residual = abs(raw - rounded)
    if not residual < RESIDUAL_LIMIT or rounded < 0:
        raise PrecisionError(f"{what}: raw value {raw!r} is {residual} from the nearest integer")
    return TrigEvaluation(raw, int(rounded), residual)


def a_trig(n: int, t: int) -> TrigEvaluation:
    """A(n, t) from the sin^2 cos^{2n} sum over 1 <= j <= (t+1)/2."""
    _check_envelope(n, t)
    period = t + 2
    terms = []
    for j in range(1, (t + 1) // 2 + 1):
        c2 = _cos_squared(j, period)
        # 4^{n+1} sin^2 cos^{2n} regrouped to keep the magnitudes moderate
        terms.append(4.0 * (1.0 - c2) * (4.0 * c2) ** n)
    return _round(math.fsum(terms) / period, f"a_trig({n}, {t})")


def a_trig_split(n: int, t: int) -> TrigEvaluation:
    """A(n, t) with sin^2 replaced by 1 - cos^2, as a difference of two power sums."""
    _check_envelope(n, t)
    period = t + 2
    scale = 4.0 ** (n + 1) / period
    cos_2n = []
    cos_2n2 = []
    for j in range(1, (t + 1) // 2 + 1):
        c2 = _cos_squared(j, period)
        cos_2n.append(c2**n)
        cos_2n2.append(c2 ** (n + 1))
    raw = scale * (math.fsum(cos_2n) - math.fsum(cos_2n2))
    return _round(raw, f"a_trig_split({n}, {t})")


def cos_power_sum(m: int, N: int) -> tuple[float, Ratio]:
    """Both sides of the binomial identity for sum_{j<N} cos^{2m}(j pi / N).

    Returns ``(lhs, rhs)``: the numeric sum and the exact closed form.
    """
    if N < 1 or m < 1:
        raise DomainError(f"cos_power_sum needs positive m and N, got m={m}, N={N}")
    if m < N:
        raise DomainError(f"cos_power_sum requires m >= N, got m={m}, N={N}")
    lhs = math.fsum(_cos_squared(j, N) ** m for j in range(N))
    inner = binomial(2 * m - 1, m - 1) + sum(binomial(2 * m, m - p * N) for p in range(1, m // N + 1))
    rhs = Fraction(N * inner, 2 ** (2 * m - 1))
    return lhs, rhs


def _check_asym(n: int, k: int) -> None:
    if n < 1 or k < 2:
        raise DomainError(f"asymptotic forms need n >= 1 and k >= 2, got n={n}, k={k}")


def dominant_term(n: int, k: int) -> float:
    """Leading (j = 1) term of the trigonometric sum for A(n, k - 1)."""
    _check_asym(n, k)
    c2 = _cos_squared(1, k + 1)
    return 4.0 * (1.0 - c2) * (4.0 * c2) ** n / (k + 1)


def one_minus_p_estimate(n: int, k: int) -> float:
    """Stirling estimate of 1 - P(n, k): (4(n+1)/(k+1)) sqrt(pi n) sin^2 cos^{2n}."""
    _check_asym(n, k)
    c2 = _cos_squared(1, k + 1)
    return 4.0 * (n + 1) / (k + 1) * math.sqrt(math.pi * n) * (1.0 - c2) * c2**n


def hit_probability_uniform(n: int, k: int) -> Ratio:
    """P(n, k) = B(n, k) / C_n, uniform over Dyck paths; 0 when k > n."""
    if n < 1 or k < 1:
        raise DomainError(f"P(n, k) needs n >= 1 and k >= 1, got n={n}, k={k}")
    return Fraction(b_complement(n, k), catalan(n))


class ConvergenceRow(NamedTuple):
    n: int
    p_exact: Ratio
    p_float: float
    bound: float


def convergence_series(k: int, n_max: int) -> Iterator[ConvergenceRow]:
    """Rows (n, P(n,k), float(P), estimate of 1 - P) for n = k..n_max.

    For k = 1 the dominant-term sum is empty, so the estimate is 0.0
    (matching 1 - P = 0 exactly).
    """
    if k < 1 or n_max < k:
        raise DomainError(f"convergence_series needs k >= 1 and n_max >= k, got k={k}, n_max={n_max}")
    for n in range(k, n_max + 1):
        p = hit_probability_uniform(n, k)
        bound = 0.0 if k == 1 else one_minus_p_estimate(n, k)
        yield ConvergenceRow(n, p, float(p), bound)
