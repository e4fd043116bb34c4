from fractions import Fraction
from itertools import permutations, product

import pytest

from sockmatch.closedform import WalkSpec, b_explicit, bounded_walk_count
from sockmatch.errors import BudgetError
from sockmatch.numeric import catalan
from sockmatch.oracle import (
    Trajectory,
    count_bounded_walks_oracle,
    enumerate_heights,
    iter_trajectories,
    physical_hit_probability,
    physical_hit_probability_oracle,
    suffix_completions,
    trajectory_weight,
)
from sockmatch.trigsum import hit_probability_uniform


def draw_order_probability(n, k):
    """Fraction of all (2n)! orders of labelled socks whose unmatched count reaches k."""
    socks = [i // 2 for i in range(2 * n)]
    hit = total = 0
    for order in permutations(range(2 * n)):
        seen = set()
        top = 0
        for s in order:
            seen ^= {socks[s]}
            top = max(top, len(seen))
        hit += top >= k
        total += 1
    return Fraction(hit, total)


def test_trajectory_invariants():
    t = Trajectory((1, 0, 1, 2, 1, 0))
    assert t.n == 3 and t.height == 2 and t.steps() == "UDUUDD"
    assert Trajectory.from_steps("UUDD").values == (1, 2, 1, 0)
    for bad in [(1,), (0, 1), (1, 2), (1, 0, -1, 0), (1, 3, 2, 1), (2, 1)]:
        with pytest.raises(ValueError):
            Trajectory(bad)


def test_iter_trajectories_order_and_count():
    assert [t.steps() for t in iter_trajectories(3)] == ["UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD", "UDUDUD"]
    for n in range(1, 9):
        paths = list(iter_trajectories(n))
        assert len(paths) == len(set(paths)) == catalan(n)
        words = [p.steps() for p in paths]
        assert words == sorted(words, key=lambda w: w.replace("U", "0").replace("D", "1"))


@pytest.mark.parametrize(
    "n, expected",
    [(1, {1: 1}), (3, {1: 1, 2: 3, 3: 1}), (4, {1: 1, 2: 7, 3: 5, 4: 1})],
)
def test_enumerate_heights_examples(n, expected):
    assert enumerate_heights(n).exact_counts == expected


def test_enumerate_heights_matches_trajectories():
    for n in range(1, 9):
        tally = {}
        for t in iter_trajectories(n):
            tally[t.height] = tally.get(t.height, 0) + 1
        dist = enumerate_heights(n)
        assert {h: c for h, c in dist.exact_counts.items() if c} == tally
        assert dist.total() == catalan(n)


def test_enumeration_budget():
    with pytest.raises(BudgetError):
        enumerate_heights(16)
    with pytest.raises(BudgetError):
        count_bounded_walks_oracle(WalkSpec(11, 1, 1))
    with pytest.raises(BudgetError):
        physical_hit_probability_oracle(11, 2)


@pytest.mark.parametrize("spec, expected", [((1, 0, 0), 0), ((1, 1, 0), 1), ((2, 2, 2), 6)])
def test_walk_oracle_examples(spec, expected):
    assert count_bounded_walks_oracle(WalkSpec(*spec)) == expected


def test_walk_oracle_vs_unpruned():
    for n in range(0, 5):
        for h in range(3):
            for t in range(3):
                brute = sum(
                    1
                    for steps in product((1, -1), repeat=2 * n)
                    if sum(steps) == 0
                    and all(-h <= sum(steps[: i + 1]) <= t for i in range(2 * n))
                )
                assert count_bounded_walks_oracle(WalkSpec(n, h, t)) == brute


@pytest.mark.parametrize("m, a, expected", [(2, 0, 1), (3, 1, 2), (3, 0, 0), (0, 0, 1), (1, 2, 0)])
def test_suffix_completions_examples(m, a, expected):
    assert suffix_completions(m, a) == expected


def test_suffix_completions_vs_brute():
    for m in range(11):
        for a in range(6):
            brute = 0
            for steps in product((1, -1), repeat=m):
                y = a
                for s in steps:
                    y += s
                    if y < 0:
                        break
                else:
                    brute += y == 0
            assert suffix_completions(m, a) == brute


def test_suffix_completions_catalan():
    for n in range(1, 13):
        assert suffix_completions(2 * n - 1, 1) == catalan(n)
        assert suffix_completions(2 * n, 0) == catalan(n)


def test_physical_examples():
    assert physical_hit_probability(1, 1) == 1
    assert physical_hit_probability(2, 2) == Fraction(2, 3)
    assert physical_hit_probability(2, 3) == 0
    assert physical_hit_probability_oracle(2, 2) == Fraction(2, 3)
    assert physical_hit_probability_oracle(3, 1) == 1


@pytest.mark.parametrize("n", [2, 3])
def test_physical_vs_draw_orders(n):
    for k in range(1, n + 2):
        assert physical_hit_probability(n, k) == draw_order_probability(n, k)


def test_trajectory_weights_normalised():
    assert sum(trajectory_weight(t) for t in iter_trajectories(5)) == 1


def test_physical_dp_vs_path_weights():
    for n in range(1, 9):
        for k in range(1, n + 2):
            assert physical_hit_probability(n, k) == physical_hit_probability_oracle(n, k)
        assert physical_hit_probability(n, 1) == 1


def test_models_differ():
    assert physical_hit_probability(2, 2) != hit_probability_uniform(2, 2)


def test_tail_sum_bridge():
    for n in range(1, 11):
        dist = enumerate_heights(n)
        for k in range(1, n + 1):
            assert dist.at_least(k) == b_explicit(n, k)
