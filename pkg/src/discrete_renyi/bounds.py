"""Closed-form bounds and the single-crossing comparison machinery.

The central special function is the Gaussian ratio

    G(z) = (1/z) * int_0^z exp(-t^2/2) dt = sqrt(pi/2) * erf(z/sqrt 2) / z,

which bounds L^q norms of Bernoulli characteristic functions through
``G(sqrt(6 sigma^2 q))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .pmf import Pmf, mean_var
from .quadrature import integrate
from .renyi import OrderKind, OrderLike, as_order, delta
from .report import IneqReport

MIN_EPI_CONSTANT = 1.0 / 22.0
MIN_EPI_IMPROVED_CONSTANT = 1.0 / (16.0 + 36.0 / math.pi**2)
SMALL_VALUE_CONSTANT = math.pi**2 / 36.0
REVERSAL_CONSTANT = 6.0
DELTA_VAR_UPPER = 12.0
DELTA_VAR_LOWER = 2.0
EXP_CHARFN_CONSTANT = 1.0 / 24.0
GAUSS_BRANCH_SWITCH = math.sqrt(3.0 * math.pi / (6.0 - math.pi))

_SQRT_HALF_PI = math.sqrt(math.pi / 2.0)


# -- Gaussian ratio -----------------------------------------------------------


def gauss_ratio(z: float) -> float:
    """``(1/z) int_0^z exp(-t^2/2) dt``; the ``z -> 0`` limit 1 at ``z = 0``."""
    z = float(z)
    if z < 0 or math.isnan(z):
        raise ValueError(f"z must be non-negative, got {z!r}")
    if z < 1e-3:
        z2 = z * z
        return 1.0 - z2 / 6.0 + z2 * z2 / 40.0 - z2**3 / 336.0
    return _SQRT_HALF_PI * math.erf(z / math.sqrt(2.0)) / z


def log_gauss_ratio(z: float) -> float:
    """``log G(z)`` with full relative accuracy as ``z -> 0``."""
    z = float(z)
    if z < 1e-3:
        z2 = z * z
        return math.log1p(-z2 / 6.0 + z2 * z2 / 40.0 - z2**3 / 336.0)
    if z < 1.0:
        # G(z) - 1 from the Taylor series of erf, no cancellation
        z2 = z * z
        term, total, k = 1.0, 0.0, 0
        while True:
            k += 1
            term *= -z2 / (2.0 * k)
            inc = term / (2 * k + 1)
            total += inc
            if abs(inc) < 1e-18 * abs(total):
                break
        return math.log1p(total)
    return math.log(gauss_ratio(z))


def gauss_ratio_bound(z: float) -> float:
    """``min(1/sqrt(1 + z^2/3), sqrt(pi/(2 z^2)))``, an upper bound on G."""
    z = float(z)
    if not z > 0:
        raise ValueError(f"z must be positive, got {z!r}")
    return min(1.0 / math.sqrt(1.0 + z * z / 3.0), _SQRT_HALF_PI / z)


def bernoulli_charfn_bound(sigma2: float, q: float) -> float:
    """``G(sqrt(6 sigma^2 q))``, an upper bound on ``||phi||_q^q`` of a Bernoulli."""
    if not 0.0 <= sigma2 <= 0.25 + 1e-15:
        raise ValueError(f"Bernoulli variance {sigma2!r} outside [0, 1/4]")
    if not q >= 1:
        raise ValueError(f"q must be at least 1, got {q!r}")
    return gauss_ratio(math.sqrt(6.0 * sigma2 * q))


def phi_bound(x: float) -> float:
    """``Phi(x) = G(sqrt(6x))``: the Fourier bound as a function of ``sigma^2 q``."""
    return gauss_ratio(math.sqrt(6.0 * x))


def holder_composition(phi: Callable[[float], float], cs: Sequence[float], q: float) -> float:
    """``prod_i phi(c_i q_i q)**(1/q_i)`` with ``q_i = c/c_i``, ``c = sum c_i``.

    This is the bound Hölder's inequality gives for the sum of independent
    variables whose Fourier norms are bounded by ``phi(c_i q)``.
    """
    c = math.fsum(cs)
    out = 1.0
    for ci in cs:
        qi = c / ci
        out *= phi(ci * qi * q) ** (1.0 / qi)
    return out


def harmonic_combination(alpha: float, beta: float, a: float, b: float) -> tuple[float, float]:
    """``(max(alpha a, beta b), alpha beta/(alpha + beta) (a + b))``; first >= second."""
    return max(alpha * a, beta * b), alpha * beta / (alpha + beta) * (a + b)


# -- comparison functions -----------------------------------------------------


@dataclass(frozen=True)
class BoundFn:
    name: str
    evaluate: Callable[[np.ndarray], np.ndarray]
    domain: str = "[0, pi]"

    def __call__(self, t):
        return self.evaluate(t)


def v_lambda(lam: float) -> BoundFn:
    """``sqrt((1 - lam) + lam cos t)``: Bernoulli modulus with ``lam = 2 Var``."""
    lam = float(lam)

    def v(t):
        return np.sqrt(np.maximum((1.0 - lam) + lam * np.cos(t), 0.0))

    return BoundFn(f"v[{lam!r}]", v)


def w_lambda(lam: float) -> BoundFn:
    """Gaussian comparison ``exp(-3 lam t^2 / (2 pi^2))``."""
    lam = float(lam)
    k = 3.0 * lam / (2.0 * math.pi**2)

    def w(t):
        t = np.asarray(t, dtype=float)
        return np.exp(-k * t * t)

    return BoundFn(f"w[{lam!r}]", w)


class MultipleCrossingsError(ArithmeticError):
    """``w - v`` changes sign more than once on the interval."""


class IndeterminateCrossingError(ArithmeticError):
    """Sign changes closer than the resolvable distance (possible tangency)."""


def _bisect(d: Callable[[float], float], lo: float, hi: float, xtol: float) -> float:
    dlo = d(lo)
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        dm = d(mid)
        if dm == 0.0:
            return mid
        if (dm > 0) == (dlo > 0):
            lo, dlo = mid, dm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def np_single_crossing(
    w: BoundFn,
    v: BoundFn,
    resolution: int = 4096,
    interval: tuple[float, float] = (0.0, math.pi),
    xtol: float = 1e-13,
    merge_dist: float = 1e-10,
) -> float | None:
    """The unique sign change of ``w - v`` on ``(a, b]``, or ``None``.

    The difference is sampled at ``resolution`` points and each sign change
    is polished by bisection to ``xtol``.  Two or more sign changes raise
    :class:`MultipleCrossingsError`, unless they all lie within
    ``merge_dist`` of each other, which raises
    :class:`IndeterminateCrossingError` instead.
    """
    a, b = interval
    t = np.linspace(a, b, resolution + 1)[1:]
    d = np.asarray(w(t), dtype=float) - np.asarray(v(t), dtype=float)

    def diff(x: float) -> float:
        return float(w(np.array([x]))[0] - v(np.array([x]))[0])

    crossings = []
    sgn = np.sign(d)
    nz = np.nonzero(sgn)[0]
    for i, j in zip(nz[:-1], nz[1:]):
        if sgn[i] == sgn[j]:
            continue
        if j == i + 1:
            crossings.append(_bisect(diff, float(t[i]), float(t[j]), xtol))
        else:
            crossings.append(float(t[i + 1]))  # exact zero on the grid
    if nz.size and nz[-1] < t.size - 1:
        crossings.append(float(t[nz[-1] + 1]))  # lands on zero at the right end
    if len(crossings) <= 1:
        return crossings[0] if crossings else None
    if crossings[-1] - crossings[0] <= merge_dist:
        raise IndeterminateCrossingError(f"sign changes at {crossings} cannot be separated")
    raise MultipleCrossingsError(f"{w.name} - {v.name} changes sign at {crossings}")


def np_phi(w: BoundFn, v: BoundFn, level: float, s: float, interval=(0.0, math.pi), tol=1e-14) -> float:
    """``int (w^s - v^s) / (s level^s)`` over ``interval``."""
    a, b = interval
    val, _ = integrate(lambda t: w(t) ** s - v(t) ** s, a, b, tol=tol)
    return val / (s * level**s)


def np_phi_monotone(
    w: BoundFn,
    v: BoundFn,
    t0: float | None,
    s_grid: Sequence[float],
    rel_tol: float = 1e-9,
    interval: tuple[float, float] = (0.0, math.pi),
) -> IneqReport:
    """Check that ``s -> phi(s)`` is non-decreasing on ``s_grid``.

    ``t0`` is the crossing abscissa returned by :func:`np_single_crossing`;
    the distribution functions of ``w`` and ``v`` then cross at the level
    ``w(t0)``.  With no crossing (``t0 is None``) the level is the smaller
    endpoint value at ``b``, the largest level below which both distribution
    functions coincide.  If that level is zero the report instead certifies
    ``w >= v`` pointwise, which gives the same comparison of integrals
    directly.
    """
    s_grid = [float(s) for s in s_grid]
    a, b = interval
    if t0 is not None:
        level = float(w(np.array([t0]))[0])
        mode = "crossing"
    else:
        level = float(min(w(np.array([b]))[0], v(np.array([b]))[0]))
        mode = "no_crossing"
    if level <= 0.0:
        t = np.linspace(a, b, 4097)
        gap = float(np.min(w(t) - v(t)))
        return IneqReport.ge(
            "np_phi_monotone", gap, 0.0, 1e-15, {"mode": "dominated", "s_grid": s_grid}
        )
    phis = [np_phi(w, v, level, s, interval) for s in s_grid]
    scale = max((abs(x) for x in phis), default=0.0) or 1.0
    steps = [y - x for x, y in zip(phis, phis[1:])]
    worst = min(steps) if steps else 0.0
    return IneqReport.ge(
        "np_phi_monotone",
        worst,
        0.0,
        rel_tol * scale,
        {"mode": mode, "level": level, "t0": t0, "s_grid": s_grid, "phi": phis},
    )


# -- characteristic function bounds ------------------------------------------


def bernoulli_exp_charfn_bound(f: Pmf, t_grid, tol: float = 1e-14) -> IneqReport:
    """``|E exp(itX)| <= exp(-Delta_inf(X) t^2 / 24)`` on ``t_grid``."""
    if f.probs.size > 2:
        raise ValueError("bernoulli_exp_charfn_bound needs a law on at most two adjacent points")
    t = np.asarray(t_grid, dtype=float)
    if np.any(np.abs(t) > math.pi + 1e-15):
        raise ValueError("t_grid must lie in [-pi, pi]")
    p = f.probs[-1] if f.probs.size == 2 else 0.0
    lhs = np.abs((1.0 - p) + p * np.exp(1j * t))
    d_inf = delta(f, "inf")
    rhs = np.exp(-d_inf * t * t * EXP_CHARFN_CONSTANT)
    gap = rhs - lhs
    i = int(np.argmin(gap))
    return IneqReport.le(
        "bernoulli_exp_charfn",
        float(lhs[i]),
        float(rhs[i]),
        tol,
        {"p": float(p), "t_worst": float(t[i]), "delta_inf": d_inf, "points": int(t.size)},
    )


# -- entropy versus variance -------------------------------------------------


class EntropyVarianceBound(NamedTuple):
    integral: float
    max_form: float


def entropy_variance_lower_bound(sigma2: float, a: OrderLike) -> EntropyVarianceBound:
    """Lower bounds on ``H_alpha`` (nats) of a Bernoulli sum with variance ``sigma2``.

    ``integral`` is ``-log G(sqrt(6 sigma^2 alpha'))``; ``max_form`` is
    ``max(log(1 + 2 alpha' sigma^2), log(12 alpha' sigma^2 / pi)) / 2``.
    Valid for ``alpha`` in ``[2, inf]``.
    """
    a = as_order(a)
    if a.kind is not OrderKind.INFINITY and not a.value >= 2:
        raise ValueError(f"order must be at least 2, got {a}")
    if sigma2 < 0:
        raise ValueError("variance must be non-negative")
    ac = a.conjugate
    x = ac * sigma2
    if x == 0:
        return EntropyVarianceBound(0.0, 0.0)
    integral = -log_gauss_ratio(math.sqrt(6.0 * x))
    max_form = 0.5 * max(math.log1p(2.0 * x), math.log(12.0 * x / math.pi))
    return EntropyVarianceBound(integral, max_form)


def delta_var_polynomial(t):
    """``(12 t(1-t) + 1)(t^2 + (1-t)^2)^2 - 1``; non-negative on [0, 1]."""
    t = np.asarray(t, dtype=float)
    return (12.0 * t * (1.0 - t) + 1.0) * (t * t + (1.0 - t) ** 2) ** 2 - 1.0


def delta_var_polynomial_factored(t):
    """``-4 (t - 1) t (2t - 1)^2 (3t^2 - 3t + 2)``."""
    t = np.asarray(t, dtype=float)
    return -4.0 * (t - 1.0) * t * (2.0 * t - 1.0) ** 2 * (3.0 * t * t - 3.0 * t + 2.0)


def two_var_times(f: Pmf, a: OrderLike) -> float:
    """``2 alpha' Var(f)``, the variance side of the sharp comparison."""
    return 2.0 * as_order(a).conjugate * mean_var(f)[1]
