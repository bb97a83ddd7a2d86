"""Characteristic functions of integer-valued laws and their L^q norms.

Norms are taken with respect to normalized Lebesgue measure on
``[-pi, pi]``: ``||phi||_q^q = (1/2pi) int |phi(t)|^q dt``.  The modulus is
even in ``t``, so every integral is computed on ``[0, pi]`` and divided by
``pi``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .pmf import Pmf, poisson_binomial
from .quadrature import integrate
from .report import IneqReport

UNDERFLOW_GUARD = 1e-300


@dataclass(frozen=True)
class CharEval:
    """Modulus ``t -> |E exp(itX)|`` of ``source``.

    When ``factors`` holds Bernoulli parameters whose sum law is ``source``,
    the modulus is evaluated as the product of the per-factor moduli
    ``sqrt((1 - lam_i) + lam_i cos t)`` with ``lam_i = 2 p_i (1 - p_i)``.
    """

    source: Pmf
    factors: tuple[float, ...] | None = None

    @classmethod
    def poisson_binomial(cls, ps: Sequence[float]) -> "CharEval":
        ps = tuple(float(p) for p in ps)
        return cls(poisson_binomial(ps), ps)

    def modulus(self, t) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        if self.factors is not None:
            out = np.ones_like(t)
            c = np.cos(t)
            for p in self.factors:
                lam = 2.0 * p * (1.0 - p)
                out = out * np.sqrt(np.maximum((1.0 - lam) + lam * c, 0.0))
            return out
        return _horner_modulus(self.source.probs, t)

    def __call__(self, t) -> np.ndarray:
        return self.modulus(t)


CharLike = Union[Pmf, CharEval]


def _as_char(f: CharLike) -> CharEval:
    return f if isinstance(f, CharEval) else CharEval(f)


def _horner_modulus(probs: np.ndarray, t: np.ndarray) -> np.ndarray:
    z = np.exp(1j * t)
    acc = np.zeros_like(z)
    for c in probs[::-1]:
        acc = acc * z + c
    return np.abs(acc)


def char_modulus(f: CharLike, t) -> float | np.ndarray:
    """``|sum_k f(k) exp(ikt)|``; scalar in, scalar out."""
    out = _as_char(f).modulus(t)
    return float(out) if np.ndim(out) == 0 else out


def bernoulli_modulus(lam: float, t) -> np.ndarray:
    """Modulus of a Bernoulli characteristic function with ``lam = 2 Var``."""
    return np.sqrt(np.maximum((1.0 - lam) + lam * np.cos(np.asarray(t, dtype=float)), 0.0))


def _power(mod: np.ndarray, q: float) -> np.ndarray:
    out = np.zeros_like(mod)
    ok = mod >= UNDERFLOW_GUARD
    out[ok] = np.exp(q * np.log(mod[ok]))
    return out


def char_lq_norm(f: CharLike, q: float, tol: float = 1e-10) -> float:
    """``||phi_f||_q^q`` by adaptive quadrature, absolute error below ``tol``."""
    if not q >= 1:
        raise ValueError(f"q must be at least 1, got {q!r}")
    if not 1e-12 <= tol <= 1e-6:
        raise ValueError("tol must lie in [1e-12, 1e-6]")
    ev = _as_char(f)
    if ev.source.probs.size == 1:
        return 1.0
    value, _ = integrate(lambda t: _power(ev.modulus(t), q), 0.0, math.pi, tol=tol * math.pi)
    return value / math.pi


def lp_norm(f: Pmf, p: float) -> float:
    """``||f||_p`` of the mass vector, ``p`` in ``[1, inf]``."""
    if math.isinf(p):
        return f.max_mass()
    m = f.max_mass()
    s = math.fsum(((f.probs / m) ** p).tolist())
    return m * s ** (1.0 / p)


def hausdorff_young_check(f: CharLike, p: float, tol: float = 1e-10) -> IneqReport:
    """``||f||_p <= ||phi_f||_q`` with ``1/p + 1/q = 1``, ``p >= 2``."""
    p = float(p)
    if not p >= 2:
        raise ValueError(f"p must be at least 2, got {p!r}")
    q = 1.0 if math.isinf(p) else p / (p - 1.0)
    ev = _as_char(f)
    lhs = lp_norm(ev.source, p)
    rhs = char_lq_norm(ev, q, tol) ** (1.0 / q)
    return IneqReport.le("hausdorff_young", lhs, rhs, tol, {"p": p, "q": q})
