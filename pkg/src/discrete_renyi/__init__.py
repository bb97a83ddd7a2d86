"""Rényi entropy of integer-valued laws: exact arithmetic, bounds and checks."""

from .bounds import (
    DELTA_VAR_LOWER,
    DELTA_VAR_UPPER,
    EXP_CHARFN_CONSTANT,
    MIN_EPI_CONSTANT,
    MIN_EPI_IMPROVED_CONSTANT,
    REVERSAL_CONSTANT,
    SMALL_VALUE_CONSTANT,
    bernoulli_charfn_bound,
    bernoulli_exp_charfn_bound,
    entropy_variance_lower_bound,
    gauss_ratio,
    gauss_ratio_bound,
    np_phi_monotone,
    np_single_crossing,
    v_lambda,
    w_lambda,
)
from .extremal import (
    ExtremePointSpec,
    GuardError,
    enumerate_extreme_points,
    extreme_point_count,
    majorizes,
    min_entropy_over_extremes,
    rearrange,
)
from .pmf import (
    ConvolutionError,
    Pmf,
    WeightVector,
    bernoulli,
    convolve,
    convolve_all,
    convolve_auto,
    convolve_fft,
    convolve_power,
    dirac,
    is_log_concave,
    is_symmetric,
    mean_var,
    poisson_binomial,
    poisson_truncated,
    symmetric_geometric_half,
    uniform,
    variance,
    weighted_bernoulli_sum,
)
from .renyi import RenyiOrder, delta, renyi_entropy, shannon_entropy
from .report import IneqReport, Table
from .spectral import CharEval, char_lq_norm, char_modulus, hausdorff_young_check

__version__ = "0.1.0"
