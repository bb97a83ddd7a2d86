"""Point probabilities of weighted Bernoulli sums (Littlewood-Offord).

``Q(S) = max_x P(S = x)`` for ``S = sum v_i B_i`` with nonzero rational
weights.  Small instances are computed in exact rational arithmetic.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from fractions import Fraction
from typing import Sequence

import numpy as np

from ..bounds import entropy_variance_lower_bound, gauss_ratio
from ..pmf import Pmf, WeightVector, poisson_truncated, weighted_bernoulli_sum
from ..renyi import OrderKind, OrderLike, as_order, renyi_entropy
from ..report import ENTROPY_TOL, PROB_TOL, IneqReport, Table

EXACT_MAX_N = 12


def _weights(v) -> WeightVector:
    return v if isinstance(v, WeightVector) else WeightVector(tuple(v))


def _fractions(ps: Sequence) -> list[Fraction]:
    out = []
    for p in ps:
        fp = Fraction(p)
        if not 0 <= fp <= 1:
            raise ValueError(f"Bernoulli parameter {p!r} outside [0, 1]")
        out.append(fp)
    return out


def exact_weighted_sum(v, ps: Sequence) -> dict[int, Fraction]:
    """Exact law of the integer-scaled sum as ``{atom: probability}``."""
    v = _weights(v)
    if len(v) != len(ps):
        raise ValueError("weights and probabilities differ in length")
    law: dict[int, Fraction] = {0: Fraction(1)}
    for m, p in zip(v.integer_weights(), _fractions(ps)):
        nxt: dict[int, Fraction] = defaultdict(Fraction)
        for x, q in law.items():
            if p != 1:
                nxt[x] += q * (1 - p)
            if p != 0:
                nxt[x + m] += q * p
        law = dict(nxt)
    return law


def exact_max_point_probability(v, ps: Sequence) -> Fraction:
    return max(exact_weighted_sum(v, ps).values())


def max_point_probability(v, ps: Sequence[float], exact: bool | None = None) -> float | Fraction:
    """``Q(v . B)``; exact ``Fraction`` for ``n <= 12`` unless ``exact`` is False."""
    v = _weights(v)
    if exact is None:
        exact = len(v) <= EXACT_MAX_N
    if exact:
        return exact_max_point_probability(v, ps)
    return weighted_bernoulli_sum(v, _floats(ps)).max_mass()


def weighted_sum_pmf(v, ps: Sequence) -> Pmf:
    """Law of the integer-scaled sum; exact rational convolution for ``n <= 12``."""
    v = _weights(v)
    if len(v) > EXACT_MAX_N:
        return weighted_bernoulli_sum(v, _floats(ps))
    law = exact_weighted_sum(v, ps)
    lo, hi = min(law), max(law)
    probs = np.zeros(hi - lo + 1)
    for x, q in law.items():
        probs[x - lo] = float(q)
    return Pmf.from_weights(probs, offset=lo)


def lo_reduce(v) -> tuple[int, ...]:
    """Signs of the weights; ``v . B`` is no more spread out than ``sign(v) . B``."""
    return tuple(1 if w > 0 else -1 for w in _weights(v))


def _floats(ps: Sequence) -> list[float]:
    return [float(p) for p in _fractions(ps)]


def _variance(ps: Sequence) -> float:
    return math.fsum(p * (1.0 - p) for p in _floats(ps))


def lo_q_bound(v, ps: Sequence) -> IneqReport:
    """``Q(v . B) <= G(sqrt(6 sigma^2))`` and ``Q <= 1/sqrt(1 + 2 sigma^2)``.

    The report is for the integral (Gaussian ratio) form; the simpler
    bound ``1/sqrt(1 + 2 sigma^2)`` is in ``params``.
    """
    v = _weights(v)
    q = max_point_probability(v, ps)
    sigma2 = _variance(ps)
    rhs = gauss_ratio(math.sqrt(6.0 * sigma2))
    simple = 1.0 / math.sqrt(1.0 + 2.0 * sigma2)
    params = {
        "weights": [str(w) for w in v],
        "ps": [str(p) for p in ps],
        "sigma2": sigma2,
        "exact": isinstance(q, Fraction),
        "q_exact": str(q) if isinstance(q, Fraction) else None,
        "rhs_simple": simple,
        "pass_simple": float(q) <= simple + PROB_TOL,
    }
    return IneqReport.le("lo_q_bound", float(q), rhs, PROB_TOL, params)


def lo_q_bound_poisson(lam: float, tail_eps: float = 1e-15) -> IneqReport:
    """Point probability of Poisson(``lam``) against ``G(sqrt(6 lam))``."""
    f = poisson_truncated(lam, tail_eps)
    q = f.max_mass()
    rhs = gauss_ratio(math.sqrt(6.0 * lam))
    simple = 1.0 / math.sqrt(1.0 + 2.0 * lam)
    params = {"lambda": lam, "rhs_simple": simple, "pass_simple": q <= simple + PROB_TOL}
    return IneqReport.le("lo_q_bound_poisson", q, rhs, PROB_TOL, params)


def lo_renyi_bound(v, ps: Sequence, a: OrderLike) -> IneqReport:
    """``H_alpha(v . B)`` against the variance bounds, ``alpha >= 2``."""
    a = as_order(a)
    if a.kind is not OrderKind.INFINITY and not a.value >= 2:
        raise ValueError(f"order must be at least 2, got {a}")
    v = _weights(v)
    h = renyi_entropy(weighted_sum_pmf(v, ps), a)
    sigma2 = _variance(ps)
    bound = entropy_variance_lower_bound(sigma2, a)
    tol = ENTROPY_TOL * max(1.0, h)
    params = {
        "weights": [str(w) for w in v],
        "alpha": str(a),
        "sigma2": sigma2,
        "rhs_max_form": bound.max_form,
        "pass_max_form": h - bound.max_form >= -tol,
    }
    return IneqReport.ge("lo_renyi_bound", h, bound.integral, tol, params)


def empirical_max_point_probability(n: int, ps: Sequence, max_weight: int = 3) -> tuple[Fraction, tuple[int, ...]]:
    """Largest exact ``Q(v . B)`` over integer weights ``1 <= |v_i| <= max_weight``.

    Exhaustive over all ``(2 max_weight)^n`` weight vectors; small ``n``
    only.  Returns the maximum and the first maximizing vector in
    enumeration order.
    """
    if len(ps) != n:
        raise ValueError("need one probability per weight")
    if (2 * max_weight) ** n > 10**5:
        raise ValueError("too many weight vectors to enumerate")
    values = [w for w in range(-max_weight, max_weight + 1) if w]
    best, arg = Fraction(-1), ()
    for v in itertools.product(values, repeat=n):
        q = exact_max_point_probability(v, ps)
        if q > best:
            best, arg = q, v
    return best, arg


def erdos_value(n: int) -> Fraction:
    """``2^-n binom(n, floor(n/2))``."""
    return Fraction(math.comb(n, n // 2), 2**n)


ERDOS_COLUMNS = ("n", "q_exact", "erdos", "bound", "ratio")


def lo_erdos_comparison(n_max: int) -> Table:
    """Exact ``Q`` of ``n`` fair coins with unit weights against both bounds.

    Rows for ``n = 1..n_max``: exact point probability (rational
    convolution), the Erdős value, the Gaussian-ratio bound and
    ``bound / Q``.
    """
    if not 1 <= n_max <= 60:
        raise ValueError("n_max must lie in [1, 60]")
    table = Table(ERDOS_COLUMNS)
    half = Fraction(1, 2)
    law: dict[int, Fraction] = {0: Fraction(1)}
    for n in range(1, n_max + 1):
        nxt: dict[int, Fraction] = defaultdict(Fraction)
        for x, q in law.items():
            nxt[x] += q * half
            nxt[x + 1] += q * half
        law = dict(nxt)
        q = max(law.values())
        bound = gauss_ratio(math.sqrt(6.0 * n / 4.0))
        table.append(n, q, erdos_value(n), bound, bound / float(q))
    return table
