"""Brute-force ground truth and the exact model of physically drawing socks.

A :class:`Trajectory` is the sequence a_1..a_2n of unmatched-sock counts
after each draw.  Its height (max a_i) is one less than the height of the
corresponding planted plane tree and of the walk c_i = a_i + 1 absorbed at 0;
those interpretations are not modelled separately.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction

from .closedform import WalkSpec
from .errors import BudgetError, DomainError
from .numeric import Count, Ratio, binomial

__all__ = [
    "ENUMERATION_N_MAX",
    "WALK_ORACLE_N_MAX",
    "Trajectory",
    "HeightDistribution",
    "iter_trajectories",
    "enumerate_heights",
    "count_bounded_walks_oracle",
    "suffix_completions",
    "physical_hit_probability",
    "physical_hit_probability_oracle",
    "trajectory_weight",
]

ENUMERATION_N_MAX = 15
WALK_ORACLE_N_MAX = 10


@dataclass(frozen=True)
class Trajectory:
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        v = self.values
        if not v or len(v) % 2:
            raise ValueError(f"trajectory must have positive even length, got {len(v)}")
        if v[0] != 1 or v[-1] != 0:
            raise ValueError(f"trajectory must start at 1 and end at 0: {v}")
        prev = 0
        for i, a in enumerate(v):
            if a < 0 or abs(a - prev) != 1:
                raise ValueError(f"invalid step at position {i + 1}: {v}")
            prev = a

    @property
    def n(self) -> int:
        return len(self.values) // 2

    @property
    def height(self) -> int:
        return max(self.values)

    @classmethod
    def from_steps(cls, steps: str) -> "Trajectory":
        """Build from a word over {U, D}, e.g. ``"UDUD"``."""
        a = 0
        values = []
        for s in steps:
            a += 1 if s == "U" else -1
            values.append(a)
        return cls(tuple(values))

    def steps(self) -> str:
        prev = 0
        out = []
        for a in self.values:
            out.append("U" if a > prev else "D")
            prev = a
        return "".join(out)


@dataclass(frozen=True)
class HeightDistribution:
    n: int
    exact_counts: dict[int, int]

    def total(self) -> Count:
        return sum(self.exact_counts.values())

    def at_least(self, k: int) -> Count:
        """Number of paths of height >= k (the tail sum)."""
        return sum(c for h, c in self.exact_counts.items() if h >= k)


def iter_trajectories(n: int) -> Iterator[Trajectory]:
    """Every Dyck path of semilength n, up-steps ordered before down-steps."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if n > ENUMERATION_N_MAX:
        raise BudgetError(f"enumeration limited to n <= {ENUMERATION_N_MAX}, got {n}")
    length = 2 * n
    path = [0] * length
    # explicit stack of (position, height at that position)
    stack = [(0, 1)]
    while stack:
        i, a = stack.pop()
        path[i] = a
        i += 1
        if i == length:
            yield Trajectory(tuple(path))
            continue
        remaining = length - i
        # push down first so the up branch is explored first
        if a > 0:
            stack.append((i, a - 1))
        if a + 1 <= remaining - 1:
            stack.append((i, a + 1))


def enumerate_heights(n: int) -> HeightDistribution:
    """Tally exact heights over all Dyck paths of semilength n by exhaustive search."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if n > ENUMERATION_N_MAX:
        raise BudgetError(f"enumeration limited to n <= {ENUMERATION_N_MAX}, got {n}")
    length = 2 * n
    tally = [0] * (n + 1)
    # same traversal as iter_trajectories, carrying the running max instead of the path
    stack = [(1, 1, 1)]
    pop, push = stack.pop, stack.append
    while stack:
        i, a, top = pop()
        if i == length:
            tally[top] += 1
            continue
        remaining = length - i
        if a > 0:
            push((i + 1, a - 1, top))
        if a < remaining - 1:
            push((i + 1, a + 1, top if top > a else a + 1))
    return HeightDistribution(n, {h: tally[h] for h in range(1, n + 1)})


def count_bounded_walks_oracle(spec: WalkSpec) -> Count:
    """Count +-1 walks in ``spec`` by walking every admissible prefix."""
    n, low, high = spec.n, -spec.lower, spec.upper
    if n > WALK_ORACLE_N_MAX:
        raise BudgetError(f"walk enumeration limited to n <= {WALK_ORACLE_N_MAX}, got {n}")
    length = 2 * n
    count = 0
    stack = [(0, 0)]
    while stack:
        i, y = stack.pop()
        if i == length:
            count += y == 0
            continue
        remaining = length - i - 1
        for y2 in (y + 1, y - 1):
            # prune walks that leave the band or can no longer return to 0
            if low <= y2 <= high and abs(y2) <= remaining:
                stack.append((i + 1, y2))
    return count


def suffix_completions(m: int, a: int) -> Count:
    """Walks of m +-1 steps from height a down to 0 that never go below 0.

    Reflection principle: a walk that touches -1 is mirrored after its first
    touch into a walk ending at -2, giving C(m, (m-a)/2) - C(m, (m-a)/2 - 1).
    """
    if m < 0 or a < 0:
        raise DomainError(f"suffix_completions needs m, a >= 0, got m={m}, a={a}")
    if a > m or (m - a) % 2:
        return 0
    up_steps = (m - a) // 2
    return binomial(m, up_steps) - binomial(m, up_steps - 1)


def physical_hit_probability(n: int, k: int) -> Ratio:
    """Exact chance that the unmatched count reaches k while drawing 2n socks at random.

    Forward DP over (socks drawn i, unmatched u).  With 2n - i socks left, u of
    them complete a pair, so a match happens with probability u / (2n - i).
    All mass reaching u = k is folded into one absorbed total.
    """
    if n < 1 or k < 1:
        raise DomainError(f"physical_hit_probability needs n, k >= 1, got n={n}, k={k}")
    if k > n:
        return Fraction(0)
    total = 2 * n
    dist = {0: Fraction(1)}
    absorbed = Fraction(0)
    for i in range(total):
        left = total - i
        nxt: dict[int, Fraction] = {}
        for u, mass in dist.items():
            if u:
                nxt[u - 1] = nxt.get(u - 1, 0) + mass * Fraction(u, left)
            if left - u:
                up = mass * Fraction(left - u, left)
                if u + 1 == k:
                    absorbed += up
                else:
                    nxt[u + 1] = nxt.get(u + 1, 0) + up
        dist = nxt
    return absorbed


def trajectory_weight(trajectory: Trajectory) -> Ratio:
    """Probability that random drawing produces exactly this trajectory."""
    total = 2 * trajectory.n
    weight = Fraction(1)
    prev = 0
    for i, a in enumerate(trajectory.values):
        left = total - i
        weight *= Fraction(prev if a < prev else left - prev, left)
        prev = a
    return weight


def physical_hit_probability_oracle(n: int, k: int) -> Ratio:
    """Same quantity as :func:`physical_hit_probability`, by weighting every trajectory."""
    if n > WALK_ORACLE_N_MAX:
        raise BudgetError(f"path-weight oracle limited to n <= {WALK_ORACLE_N_MAX}, got {n}")
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    hit = Fraction(0)
    mass = Fraction(0)
    for traj in iter_trajectories(n):
        w = trajectory_weight(traj)
        mass += w
        if traj.height >= k:
            hit += w
    assert mass == 1, f"trajectory weights sum to {mass}, not 1"
    return hit
