"""Exact and Monte Carlo counting for the sock matching problem.

Dyck paths of semilength n are stored as the sequence of unmatched-sock
counts after each draw; ``B(n, k)`` counts those of height >= k and
``A(n, t)`` those of height <= t.
"""

from .closedform import WalkSpec, a_binomial_form, a_bounded, b_alt, b_complement, b_explicit, bounded_walk_count
from .errors import BudgetError, DomainError, PrecisionError
from .numeric import binomial, catalan, catalan_stirling_approx, catalan_via_convolution
from .oracle import (
    HeightDistribution,
    Trajectory,
    count_bounded_walks_oracle,
    enumerate_heights,
    physical_hit_probability,
    physical_hit_probability_oracle,
    suffix_completions,
)
from .recurrences import CountTable, a_recurrence, b_recurrence_first, b_recurrence_second
from .sampler import SimResult, estimate_hit_probability, sample_uniform_dyck, simulate_physical_draw
from .trigsum import (
    TrigEvaluation,
    a_trig,
    a_trig_split,
    convergence_series,
    cos_power_sum,
    dominant_term,
    hit_probability_uniform,
    one_minus_p_estimate,
)

__version__ = "0.1.0"
