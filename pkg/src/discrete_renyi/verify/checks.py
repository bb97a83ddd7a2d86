"""Inequality checks between Rényi entropy powers and variances."""

from __future__ import annotations

import math
from typing import Sequence

from ..bounds import (
    DELTA_VAR_LOWER,
    DELTA_VAR_UPPER,
    MIN_EPI_CONSTANT,
    MIN_EPI_IMPROVED_CONSTANT,
    REVERSAL_CONSTANT,
    SMALL_VALUE_CONSTANT,
    entropy_variance_lower_bound,
)
from ..pmf import Pmf, bernoulli, convolve_all, is_log_concave, is_symmetric, mean_var, poisson_binomial
from ..renyi import OrderKind, OrderLike, as_order, delta, renyi_entropy
from ..report import ENTROPY_TOL, IneqReport


def _order_at_least_two(a: OrderLike):
    a = as_order(a)
    if a.kind is not OrderKind.INFINITY and not a.value >= 2:
        raise ValueError(f"order must be at least 2, got {a}")
    return a


def _rel_tol(scale: float) -> float:
    return ENTROPY_TOL * max(1.0, abs(scale))


def check_delta_le_12var_bernoulli(p: float, a: OrderLike) -> IneqReport:
    """``Delta_alpha(Bernoulli(p)) <= 12 Var`` for ``alpha >= 2``."""
    a = _order_at_least_two(a)
    f = bernoulli(p)
    lhs = delta(f, a)
    rhs = DELTA_VAR_UPPER * p * (1.0 - p)
    return IneqReport.le(
        "delta_le_12var_bernoulli",
        lhs,
        rhs,
        _rel_tol(rhs),
        {"p": p, "alpha": str(a), "equality_case": p == 0.5},
    )


def check_bernoulli_repi(ps_list: Sequence[Sequence[float]], a: OrderLike) -> IneqReport:
    """``Delta_alpha(sum X_i) >= (alpha'/6) sum Delta_alpha(X_i)`` for Poisson-binomials."""
    a = _order_at_least_two(a)
    parts = [poisson_binomial(ps) for ps in ps_list]
    total = convolve_all(parts)
    lhs = delta(total, a)
    rhs = a.conjugate / 6.0 * math.fsum(delta(f, a) for f in parts)
    return IneqReport.ge(
        "bernoulli_repi", lhs, rhs, _rel_tol(lhs), {"alpha": str(a), "ps_list": [list(map(float, ps)) for ps in ps_list]}
    )


def check_min_epi(fs: Sequence[Pmf]) -> IneqReport:
    """``Delta_inf(sum X_i) >= c sum Delta_inf(X_i)``.

    The report is for the improved constant ``1/(16 + 36/pi^2)``; the
    outcome for ``1/22`` and the empirical ratio are in ``params``.
    """
    fs = list(fs)
    lhs = delta(convolve_all(fs), "inf")
    total = math.fsum(delta(f, "inf") for f in fs)
    tol = _rel_tol(lhs)
    ratio = lhs / total if total > 0 else None
    params = {
        "n": len(fs),
        "ratio": ratio,
        "constant": MIN_EPI_IMPROVED_CONSTANT,
        "slack_1_22": lhs - MIN_EPI_CONSTANT * total,
        "pass_1_22": lhs - MIN_EPI_CONSTANT * total >= -tol,
    }
    return IneqReport.ge("min_epi", lhs, MIN_EPI_IMPROVED_CONSTANT * total, tol, params)


def check_min_epi_reversal(ps_list: Sequence[Sequence[float]]) -> IneqReport:
    """``Delta_inf(sum X_i) <= 6 sum Delta_inf(X_i)`` for Poisson-binomials."""
    parts = [poisson_binomial(ps) for ps in ps_list]
    lhs = delta(convolve_all(parts), "inf")
    rhs = REVERSAL_CONSTANT * math.fsum(delta(f, "inf") for f in parts)
    return IneqReport.le("min_epi_reversal", lhs, rhs, _rel_tol(rhs), {"n": len(parts)})


def check_small_value_min_epi(factors: Sequence[float | Pmf]) -> IneqReport:
    """``Delta_inf(sum X_i) >= (pi^2/36) sum Delta_inf(X_i)`` when every max mass is >= 1/2.

    ``factors`` are Bernoulli parameters or Pmfs.
    """
    fs = [f if isinstance(f, Pmf) else bernoulli(f) for f in factors]
    for f in fs:
        if f.max_mass() < 0.5:
            raise ValueError(f"factor with max mass {f.max_mass()!r} < 1/2")
    lhs = delta(convolve_all(fs), "inf")
    rhs = SMALL_VALUE_CONSTANT * math.fsum(delta(f, "inf") for f in fs)
    return IneqReport.ge("small_value_min_epi", lhs, rhs, _rel_tol(lhs), {"n": len(fs)})


def check_bc_upper(f: Pmf) -> IneqReport:
    """``Delta_inf(X) <= 12 Var(X)`` for any finitely supported law."""
    lhs = delta(f, "inf")
    rhs = DELTA_VAR_UPPER * mean_var(f)[1]
    return IneqReport.le("bc_upper", lhs, rhs, _rel_tol(rhs), {"support": len(f)})


def check_bmm_lower(f: Pmf) -> IneqReport:
    """``Delta_inf(X) >= 2 Var(X)`` for symmetric log-concave laws."""
    center = is_symmetric(f)
    if center is None:
        raise ValueError("check_bmm_lower requires a symmetric law")
    if not is_log_concave(f):
        raise ValueError("check_bmm_lower requires a log-concave law")
    lhs = delta(f, "inf")
    rhs = DELTA_VAR_LOWER * mean_var(f)[1]
    return IneqReport.ge("bmm_lower", lhs, rhs, _rel_tol(lhs), {"center": str(center)})


def check_entropy_variance_bound(ps: Sequence[float], a: OrderLike) -> IneqReport:
    """``H_alpha(Y)`` against both variance bounds for a Poisson-binomial ``Y``.

    The report compares with the integral form; the max form is in
    ``params`` and must hold as well for ``passed`` in ``params``.
    """
    a = _order_at_least_two(a)
    y = poisson_binomial(ps)
    h = renyi_entropy(y, a)
    sigma2 = math.fsum(p * (1.0 - p) for p in ps)
    bound = entropy_variance_lower_bound(sigma2, a)
    tol = _rel_tol(h)
    params = {
        "alpha": str(a),
        "n": len(ps),
        "sigma2": sigma2,
        "rhs_max_form": bound.max_form,
        "pass_max_form": h - bound.max_form >= -tol,
    }
    return IneqReport.ge("entropy_variance", h, bound.integral, tol, params)
