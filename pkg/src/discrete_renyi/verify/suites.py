"""Named suites of checks on fixed or seeded random instances.

Instance ``i`` of a random suite is drawn from its own generator seeded
with ``(seed, i)``, so any single failure can be replayed in isolation.
Reports come back sorted by instance id.
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from ..bounds import bernoulli_exp_charfn_bound, np_phi_monotone, np_single_crossing, v_lambda, w_lambda
from ..pmf import Pmf, bernoulli, convolve_power, symmetric_geometric_half, uniform
from ..report import IneqReport
from . import checks
from .instances import (
    DEFAULT_SEED,
    random_mixed_pmf,
    random_pmf,
    random_ps,
    random_ps_list,
    random_rational_ps,
    random_rational_weights,
)
from .littlewood_offord import lo_q_bound, lo_renyi_bound

S_GRID = (1.0, 2.0, 4.0, 8.0, 16.0)
EXP_T_POINTS = 1000


def crossing_report(lam: float, resolution: int = 4096, s_grid=S_GRID) -> IneqReport:
    """Single crossing of ``w_lam - v_lam`` on ``(0, pi]`` and monotonicity of ``phi``."""
    w, v = w_lambda(lam), v_lambda(lam)
    t0 = np_single_crossing(w, v, resolution=resolution)
    report = np_phi_monotone(w, v, t0, s_grid)
    report.params["lambda"] = lam
    return report


def exp_charfn_report(p: float, points: int = EXP_T_POINTS) -> IneqReport:
    t = np.linspace(-math.pi, math.pi, points)
    return bernoulli_exp_charfn_bound(bernoulli(p), t)


def _symmetric_log_concave(gen: np.random.Generator, max_half: int = 25) -> Pmf:
    h = int(gen.integers(0, max_half + 1))
    slopes = np.cumsum(gen.exponential(0.5, h))
    half = np.exp(-np.concatenate([[0.0], np.cumsum(slopes)]))
    if gen.random() < 0.5:
        w = np.concatenate([half[:0:-1], half])
    else:
        w = np.concatenate([half[::-1], half])
    return Pmf.from_weights(w)


def _pmf_params(fs) -> list[dict]:
    return [f.to_dict() for f in fs]


def _random(name: str, gen: np.random.Generator, n: int) -> IneqReport:
    if name == "delta-12var":
        return checks.check_delta_le_12var_bernoulli(float(gen.random()), str(gen.choice(["2", "3", "5", "inf"])))
    if name == "bernoulli-repi":
        return checks.check_bernoulli_repi(random_ps_list(gen, n, 12), str(gen.choice(["2", "3", "inf"])))
    if name == "min-epi":
        fs = [random_mixed_pmf(gen, 50) for _ in range(int(gen.integers(1, n + 1)))]
        r = checks.check_min_epi(fs)
        r.params["factors"] = _pmf_params(fs)
        return r
    if name == "reversal":
        ps_list = random_ps_list(gen, n, 12)
        r = checks.check_min_epi_reversal(ps_list)
        r.params["ps_list"] = ps_list
        return r
    if name == "small-value":
        ps = gen.random(int(gen.integers(1, n + 1))).tolist()
        r = checks.check_small_value_min_epi(ps)
        r.params["ps"] = ps
        return r
    if name == "bc-upper":
        f = random_pmf(gen, 100)
        r = checks.check_bc_upper(f)
        r.params["pmf"] = f.to_dict()
        return r
    if name == "bmm-lower":
        f = _symmetric_log_concave(gen)
        r = checks.check_bmm_lower(f)
        r.params["pmf"] = f.to_dict()
        return r
    if name == "entropy-variance":
        ps = random_ps(gen, 15)
        r = checks.check_entropy_variance_bound(ps, str(gen.choice(["2", "4", "inf"])))
        r.params["ps"] = ps
        return r
    if name == "exp-charfn":
        return exp_charfn_report(float(gen.random()))
    if name == "crossing":
        return crossing_report(float(1.0 - gen.random()) / 2.0)
    if name == "lo-bound":
        k = int(gen.integers(1, 13))
        return lo_q_bound(random_rational_weights(gen, k), random_rational_ps(gen, k))
    if name == "lo-renyi":
        k = int(gen.integers(1, 13))
        return lo_renyi_bound(random_rational_weights(gen, k), random_rational_ps(gen, k), str(gen.choice(["2", "inf"])))
    raise ValueError(f"unknown suite {name!r}")


def _fixed(name: str) -> list[IneqReport]:
    if name == "delta-12var":
        return [checks.check_delta_le_12var_bernoulli(p, a) for a in ("2", "5", "inf") for p in (0.0, 0.1, 0.25, 0.5)]
    if name == "bernoulli-repi":
        return [checks.check_bernoulli_repi([[0.5], [0.5]], a) for a in ("2", "3", "inf")]
    if name == "min-epi":
        return [checks.check_min_epi([bernoulli(0.5), bernoulli(0.5)]), checks.check_min_epi([uniform(0, 9), bernoulli(0.3)])]
    if name == "reversal":
        return [checks.check_min_epi_reversal([[0.5]]), checks.check_min_epi_reversal([[0.5], [0.5]])]
    if name == "small-value":
        return [checks.check_small_value_min_epi([0.5, 0.5]), checks.check_small_value_min_epi([0.9])]
    if name == "bc-upper":
        return [checks.check_bc_upper(uniform(0, m - 1)) for m in (1, 2, 10, 100)]
    if name == "bmm-lower":
        out = [checks.check_bmm_lower(convolve_power(bernoulli(0.5), 2 * k)) for k in range(1, 11)]
        return out + [checks.check_bmm_lower(symmetric_geometric_half(p)) for p in (0.1, 0.5, 0.9)]
    if name == "entropy-variance":
        return [checks.check_entropy_variance_bound([0.5] * 20, a) for a in ("2", "4", "inf")]
    if name == "exp-charfn":
        return [exp_charfn_report(p) for p in (0.01, 0.25, 0.5, 0.75, 0.99)]
    if name == "crossing":
        return [crossing_report(lam) for lam in (0.01, 0.1, 0.25, 0.5)]
    if name == "lo-bound":
        return [lo_q_bound([1, 1, 1, 1], [0.5] * 4), lo_q_bound([3, -2, 5], ["1/3"] * 3)]
    if name == "lo-renyi":
        return [lo_renyi_bound([1, -1, 1], ["1/3"] * 3, "2")]
    raise ValueError(f"unknown suite {name!r}")


SUITES = (
    "delta-12var",
    "bernoulli-repi",
    "min-epi",
    "reversal",
    "small-value",
    "bc-upper",
    "bmm-lower",
    "entropy-variance",
    "exp-charfn",
    "crossing",
    "lo-bound",
    "lo-renyi",
)


def run_suite(
    name: str,
    mode: str = "random",
    count: int = 100,
    n: int = 8,
    seed: int | None = None,
    progress: Callable[[IneqReport], None] | None = None,
) -> list[IneqReport]:
    """Run suite ``name`` on fixed instances or ``count`` random ones.

    ``n`` caps the number of independent factors where that applies.
    """
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; expected one of {SUITES}")
    if mode == "fixed":
        reports = _fixed(name)
        for i, r in enumerate(reports):
            r.params.setdefault("instance", i)
        return reports
    if mode != "random":
        raise ValueError(f"unknown mode {mode!r}; expected 'random' or 'fixed'")
    if count < 1 or n < 1:
        raise ValueError("count and n must be positive")
    seed = DEFAULT_SEED if seed is None else int(seed)
    reports = []
    for i in range(count):
        r = _random(name, np.random.default_rng([seed, i]), n)
        r.seed = seed
        r.params["instance"] = i
        reports.append(r)
        if progress is not None:
            progress(r)
    return reports
