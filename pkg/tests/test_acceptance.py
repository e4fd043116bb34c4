"""Exit criteria for the package.  Each test times itself against its budget;
``pytest`` prints a PASS/FAIL line per criterion in the terminal summary."""

import math
import time
from collections import Counter
from fractions import Fraction

import pytest

from sockmatch.closedform import WalkSpec, a_bounded, b_explicit, bounded_walk_count
from sockmatch.cli import B_METHODS, b_grid
from sockmatch.numeric import catalan
from sockmatch.oracle import (
    count_bounded_walks_oracle,
    enumerate_heights,
    physical_hit_probability,
    physical_hit_probability_oracle,
)
from sockmatch.sampler import estimate_hit_probability, make_rng, sample_uniform_dyck
from sockmatch.trigsum import (
    RESIDUAL_LIMIT,
    a_trig,
    a_trig_split,
    cos_power_sum,
    dominant_term,
    hit_probability_uniform,
    one_minus_p_estimate,
)

SEED = 0


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.seconds, f"took {self.elapsed:.1f}s, budget {self.seconds}s"


def test_01_table1_reproduction_all_methods(golden):
    assert len(golden) == 225
    with Budget(5):
        for method in B_METHODS:
            grid = b_grid(15, 15, method)
            mismatches = [(n, k) for (n, k), v in golden.items() if grid[n - 1][k - 1] != v]
            assert not mismatches, f"{method}: {mismatches}"


def test_02_enumeration_tail_sums():
    with Budget(60):
        for n in range(1, 13):
            dist = enumerate_heights(n)
            for k in range(1, n + 1):
                assert dist.at_least(k) == b_explicit(n, k), (n, k)


def test_03_reflection_formula_vs_exhaustive_walks():
    cases = [(n, h, t) for n in range(1, 9) for h in range(6) for t in range(6)]
    assert len(cases) == 288
    with Budget(30):
        for n, h, t in cases:
            spec = WalkSpec(n, h, t)
            assert bounded_walk_count(spec) == count_bounded_walks_oracle(spec), spec


def test_04_trigonometric_forms():
    with Budget(5):
        for n in range(1, 26):
            for t in range(13):
                exact = a_bounded(n, t)
                for fn in (a_trig, a_trig_split):
                    e = fn(n, t)
                    assert e.rounded == exact and e.residual < RESIDUAL_LIMIT, (fn.__name__, n, t, e)


def test_05_cosine_power_sum_identity():
    with Budget(5):
        for N in range(1, 9):
            for m in range(N, 41):
                lhs, rhs = cos_power_sum(m, N)
                assert abs(lhs - float(rhs)) < 1e-9 * max(1.0, float(rhs)), (m, N)


def test_06_hit_probability_tends_to_one():
    with Budget(30):
        for k in range(2, 7):
            ps = [hit_probability_uniform(n, k) for n in range(k, 61)]
            assert all(a < b for a, b in zip(ps, ps[1:])), k
        gap_200 = 1 - hit_probability_uniform(200, 3)
        gap_201 = 1 - hit_probability_uniform(201, 3)
        assert abs(float(gap_200) / one_minus_p_estimate(200, 3) - 1) < 0.02
        assert abs(float(gap_201 / gap_200) / math.cos(math.pi / 4) ** 2 - 1) < 0.01


def test_07_dominant_term_law():
    with Budget(5):
        for k in (3, 4, 5):
            assert abs(dominant_term(100, k) / a_bounded(100, k - 1) - 1) < 1e-6, k
        for n in range(1, 301):
            assert dominant_term(n, 2) == 1.0 == a_bounded(n, 1)


def test_08_physical_model():
    with Budget(30):
        for n in range(1, 9):
            for k in range(1, n + 2):
                assert physical_hit_probability(n, k) == physical_hit_probability_oracle(n, k), (n, k)
        assert physical_hit_probability(2, 2) == Fraction(2, 3)
        assert Fraction(b_explicit(2, 2), catalan(2)) == Fraction(1, 2)
        assert physical_hit_probability(2, 2) != Fraction(b_explicit(2, 2), catalan(2))


def test_09_monte_carlo_grid():
    exact = {
        "uniform": lambda n, k: hit_probability_uniform(n, k),
        "physical": lambda n, k: physical_hit_probability(n, k),
    }
    with Budget(60):
        first = {}
        for model in ("uniform", "physical"):
            for n in (2, 5, 8):
                for k in (1, 2, 3):
                    r = estimate_hit_probability(model, n, k, 100_000, SEED)
                    p = float(exact[model](n, k))
                    assert r.ci_low <= p <= r.ci_high, (r, p)
                    first[model, n, k] = r
        for (model, n, k), r in first.items():
            assert estimate_hit_probability(model, n, k, 100_000, SEED) == r


def test_10_uniform_sampler_distribution():
    trials = 1_000_000
    with Budget(60):
        rng = make_rng(SEED)
        counts = Counter(sample_uniform_dyck(3, rng).values for _ in range(trials))
    assert len(counts) == 5
    sigma = math.sqrt(0.2 * 0.8 / trials)
    for path, c in counts.items():
        assert abs(c / trials - 0.2) < 5 * sigma, (path, c)
