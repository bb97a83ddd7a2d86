"""Inequality checks, scans and the Littlewood-Offord suite."""

from .checks import (
    check_bc_upper,
    check_bernoulli_repi,
    check_bmm_lower,
    check_delta_le_12var_bernoulli,
    check_entropy_variance_bound,
    check_min_epi,
    check_min_epi_reversal,
    check_small_value_min_epi,
)
from .instances import DEFAULT_SEED
from .littlewood_offord import (
    empirical_max_point_probability,
    erdos_value,
    exact_max_point_probability,
    exact_weighted_sum,
    lo_erdos_comparison,
    lo_q_bound,
    lo_q_bound_poisson,
    lo_reduce,
    lo_renyi_bound,
    max_point_probability,
    weighted_sum_pmf,
)
from .scans import shannon_counterexample_scan, tightness_scan

__all__ = [
    "DEFAULT_SEED",
    "check_bc_upper",
    "check_bernoulli_repi",
    "check_bmm_lower",
    "check_delta_le_12var_bernoulli",
    "check_entropy_variance_bound",
    "check_min_epi",
    "check_min_epi_reversal",
    "check_small_value_min_epi",
    "empirical_max_point_probability",
    "erdos_value",
    "exact_max_point_probability",
    "exact_weighted_sum",
    "lo_erdos_comparison",
    "lo_q_bound",
    "lo_q_bound_poisson",
    "lo_reduce",
    "lo_renyi_bound",
    "max_point_probability",
    "shannon_counterexample_scan",
    "tightness_scan",
    "weighted_sum_pmf",
]
