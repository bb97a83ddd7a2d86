"""Parameter scans producing CSV-ready tables."""

from __future__ import annotations

import math
from typing import Sequence

from ..bounds import two_var_times
from ..pmf import Pmf, bernoulli, convolve_power, poisson_truncated
from ..renyi import OrderLike, as_order, delta
from ..report import Table

SHANNON_COLUMNS = ("theta", "n", "ratio")
TIGHTNESS_COLUMNS = ("family", "param", "alpha", "lhs", "rhs", "slack")
FAMILIES = ("bernoulli_p", "poisson_lambda", "iid_binomial")


def shannon_counterexample_scan(theta_grid: Sequence[float], n_max: int) -> Table:
    """``Delta_1(X_1 + ... + X_n) / sum Delta_1(X_i)`` for iid Bernoulli(theta).

    One row per ``(theta, n)`` with ``n = 1..n_max``.
    """
    if not 1 <= n_max <= 60:
        raise ValueError("n_max must lie in [1, 60]")
    table = Table(SHANNON_COLUMNS)
    for theta in theta_grid:
        theta = float(theta)
        if not 0 < theta <= 0.5:
            raise ValueError(f"theta must lie in (0, 1/2], got {theta!r}")
        f = bernoulli(theta)
        d1 = delta(f, 1)
        s = f
        for n in range(1, n_max + 1):
            if n > 1:
                s = convolve_power(f, n)
            table.append(theta, n, delta(s, 1) / (n * d1))
    return table


def _family_member(family: str, param: float) -> Pmf:
    if family == "bernoulli_p":
        return bernoulli(param)
    if family == "poisson_lambda":
        return poisson_truncated(param)
    if family == "iid_binomial":
        n = int(param)
        if n != param or n < 1:
            raise ValueError(f"iid_binomial takes a positive integer n, got {param!r}")
        return convolve_power(bernoulli(0.5), n)
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def tightness_scan(family: str, grid: Sequence[float], alpha: OrderLike = "inf") -> Table:
    """Slack of ``2 alpha' Var(X) <= Delta_alpha(X)`` along a one-parameter family.

    ``bernoulli_p`` takes ``p``, ``poisson_lambda`` takes ``lambda`` and
    ``iid_binomial`` takes the number ``n`` of fair coins.  The comparison
    is sharp as ``p`` or ``lambda`` tend to 0.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    a = as_order(alpha)
    table = Table(TIGHTNESS_COLUMNS)
    for param in grid:
        f = _family_member(family, param)
        lhs = two_var_times(f, a)
        rhs = delta(f, a)
        table.append(family, param, str(a), lhs, rhs, rhs - lhs)
    return table


def relative_slack(row: dict) -> float:
    return row["slack"] / row["rhs"] if row["rhs"] else math.nan
