"""Seeded Monte Carlo for the two probability models of sock drawing.

Generator contract (part of the public interface, since tests pin seeds):
the generator is CPython's ``random.Random`` (MT19937) constructed as
``random.Random(seed)`` with ``0 <= seed < 2**64``, which expands the seed
through MT19937 ``init_by_array`` over its 32-bit little-endian words.
Uniform integers below ``m`` are drawn by :func:`_below`: take
``getrandbits(m.bit_length())`` and reject values >= m.  Only
``getrandbits`` is consumed, so the stream does not depend on
``randrange`` internals.
"""

from __future__ import annotations

import math
import random
from functools import lru_cache
from dataclasses import asdict, dataclass
from statistics import NormalDist
from typing import Literal

from .errors import DomainError
from .oracle import Trajectory, suffix_completions

__all__ = [
    "MODELS",
    "CONFIDENCE",
    "SimResult",
    "make_rng",
    "sample_uniform_dyck",
    "simulate_physical_draw",
    "wilson_interval",
    "estimate_hit_probability",
]

Model = Literal["uniform", "physical"]
MODELS: tuple[str, ...] = ("uniform", "physical")
CONFIDENCE = 0.99
SEED_LIMIT = 2**64


@dataclass(frozen=True)
class SimResult:
    model: str
    n: int
    k: int
    trials: int
    hits: int
    p_hat: float
    ci_low: float
    ci_high: float
    seed: int

    def as_dict(self) -> dict:
        return asdict(self)


def make_rng(seed: int) -> random.Random:
    if not 0 <= seed < SEED_LIMIT:
        raise DomainError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return random.Random(seed)


def _below(rng: random.Random, m: int) -> int:
    bits = m.bit_length()
    r = rng.getrandbits(bits)
    while r >= m:
        r = rng.getrandbits(bits)
    return r


@lru_cache(maxsize=64)
def _completion_table(n: int) -> tuple[tuple[int, ...], ...]:
    # table[m][a] = suffix_completions(m, a) for 0 <= m <= 2n, 0 <= a <= n + 1
    return tuple(tuple(suffix_completions(m, a) for a in range(n + 2)) for m in range(2 * n + 1))


def _uniform_walk(n: int, rng: random.Random, table: tuple[tuple[int, ...], ...]) -> list[int]:
    values = []
    a = 0
    for m in range(2 * n, 0, -1):
        # up with probability S(m-1, a+1) / S(m, a), decided by an exact integer draw
        if _below(rng, table[m][a]) < table[m - 1][a + 1]:
            a += 1
        else:
            a -= 1
        values.append(a)
    return values


def _physical_walk(n: int, rng: random.Random) -> list[int]:
    total = 2 * n
    values = []
    u = 0
    for i in range(total):
        # u of the remaining total - i socks complete a pair
        if _below(rng, total - i) < u:
            u -= 1
        else:
            u += 1
        values.append(u)
    return values


def sample_uniform_dyck(n: int, rng: random.Random) -> Trajectory:
    """Draw a Dyck path of semilength n uniformly from all C_n of them."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    return Trajectory(tuple(_uniform_walk(n, rng, _completion_table(n))))


def simulate_physical_draw(n: int, rng: random.Random) -> Trajectory:
    """Draw 2n distinguishable socks in uniformly random order and record the unmatched counts."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    return Trajectory(tuple(_physical_walk(n, rng)))


def wilson_interval(hits: int, trials: int, confidence: float = CONFIDENCE) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if trials < 1 or not 0 <= hits <= trials:
        raise DomainError(f"need 0 <= hits <= trials and trials >= 1, got {hits}/{trials}")
    z = NormalDist().inv_cdf(0.5 + confidence / 2)
    p = hits / trials
    z2n = z * z / trials
    centre = (p + z2n / 2) / (1 + z2n)
    half = z / (1 + z2n) * math.sqrt(p * (1 - p) / trials + z2n / (4 * trials))
    low = 0.0 if hits == 0 else max(0.0, min(p, centre - half))
    high = 1.0 if hits == trials else min(1.0, max(p, centre + half))
    return low, high


def estimate_hit_probability(model: str, n: int, k: int, trials: int, seed: int = 0) -> SimResult:
    """Fraction of ``trials`` sampled trajectories whose height reaches ``k``."""
    if model not in MODELS:
        raise DomainError(f"model must be one of {MODELS}, got {model!r}")
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    if trials < 1:
        raise DomainError(f"trials must be positive, got {trials}")
    rng = make_rng(seed)
    hits = 0
    if model == "uniform":
        table = _completion_table(n)
        for _ in range(trials):
            hits += max(_uniform_walk(n, rng, table)) >= k
    else:
        for _ in range(trials):
            hits += max(_physical_walk(n, rng)) >= k
    low, high = wilson_interval(hits, trials)
    return SimResult(model, n, k, trials, hits, hits / trials, low, high, seed)
