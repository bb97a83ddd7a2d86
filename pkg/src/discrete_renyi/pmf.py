"""Finitely supported probability mass functions on the integers.

A :class:`Pmf` is a contiguous probability vector plus the integer location
of its first entry.  Every constructor returns a trimmed, normalized value:
boundary masses below ``TRIM_EPS`` are dropped and the rest rescaled so the
total is one.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

TRIM_EPS = 1e-15
NORM_TOL = 1e-12
FFT_THRESHOLD = 1024
FFT_NEGATIVE_TOL = 1e-10


class ConvolutionError(ArithmeticError):
    """Round-off in the FFT path exceeded the clamping budget."""


def _fsum(values) -> float:
    return math.fsum(np.asarray(values, dtype=float).ravel().tolist())


@dataclass(frozen=True, eq=False)
class Pmf:
    """Mass function with ``P(X = k) = probs[k - offset]``.

    Use :meth:`from_weights` (or one of the module constructors) to build
    instances from unnormalized data; the raw constructor only validates.
    """

    offset: int
    probs: np.ndarray

    def __post_init__(self):
        probs = np.array(self.probs, dtype=float, copy=True).ravel()
        if probs.size == 0:
            raise ValueError("empty probability vector")
        if not np.all(np.isfinite(probs)):
            raise ValueError("probabilities must be finite")
        if np.any(probs < 0):
            raise ValueError("probabilities must be non-negative")
        total = _fsum(probs)
        if abs(total - 1.0) > NORM_TOL:
            raise ValueError(f"probabilities sum to {total!r}, not 1")
        if probs[0] <= 0 or probs[-1] <= 0:
            raise ValueError("support must be trimmed (positive boundary masses)")
        probs.setflags(write=False)
        object.__setattr__(self, "offset", int(self.offset))
        object.__setattr__(self, "probs", probs)

    @classmethod
    def from_weights(cls, weights, offset: int = 0, trim_eps: float = TRIM_EPS) -> "Pmf":
        """Trim negligible boundary masses from ``weights`` and normalize."""
        w = np.array(weights, dtype=float, copy=True).ravel()
        if w.size == 0 or not np.all(np.isfinite(w)) or np.any(w < 0):
            raise ValueError("weights must be a non-empty vector of finite non-negative numbers")
        total = _fsum(w)
        if total <= 0:
            raise ValueError("weights have zero total mass")
        w /= total
        keep = np.nonzero(w > trim_eps)[0]
        if keep.size == 0:
            keep = np.array([int(np.argmax(w))])
        lo, hi = int(keep[0]), int(keep[-1])
        w = w[lo : hi + 1]
        w /= _fsum(w)
        return cls(offset + lo, w)

    @property
    def support(self) -> np.ndarray:
        """Integer grid covered by ``probs`` (may include interior zeros)."""
        return np.arange(self.offset, self.offset + self.probs.size)

    @property
    def first(self) -> int:
        return self.offset

    @property
    def last(self) -> int:
        return self.offset + self.probs.size - 1

    def __len__(self) -> int:
        return self.probs.size

    def __getitem__(self, k: int) -> float:
        i = k - self.offset
        if 0 <= i < self.probs.size:
            return float(self.probs[i])
        return 0.0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Pmf):
            return NotImplemented
        return self.offset == other.offset and np.array_equal(self.probs, other.probs)

    def __hash__(self):
        return hash((self.offset, self.probs.tobytes()))

    def __repr__(self) -> str:
        return f"Pmf(offset={self.offset}, probs={self.probs.tolist()!r})"

    def shift(self, k: int) -> "Pmf":
        return Pmf(self.offset + int(k), self.probs)

    def max_mass(self) -> float:
        return float(self.probs.max())

    def allclose(self, other: "Pmf", atol: float = 1e-12) -> bool:
        """Entry-wise comparison on the union of the two supports."""
        lo = min(self.first, other.first)
        hi = max(self.last, other.last)
        a = np.zeros(hi - lo + 1)
        b = np.zeros(hi - lo + 1)
        a[self.first - lo : self.last - lo + 1] = self.probs
        b[other.first - lo : other.last - lo + 1] = other.probs
        return bool(np.max(np.abs(a - b)) <= atol)

    def to_dict(self) -> dict:
        return {"offset": self.offset, "probs": self.probs.tolist()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "Pmf":
        if set(data) != {"offset", "probs"}:
            raise ValueError("Pmf JSON must have exactly the keys 'offset' and 'probs'")
        offset = data["offset"]
        if isinstance(offset, bool) or not isinstance(offset, int):
            raise ValueError("'offset' must be an integer")
        return cls.from_weights(data["probs"], offset=offset)

    @classmethod
    def from_json(cls, text: str) -> "Pmf":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class WeightVector:
    """Nonzero rational weights, stored as reduced fractions."""

    weights: tuple[Fraction, ...]

    def __post_init__(self):
        ws = tuple(_as_fraction(w) for w in self.weights)
        if any(w == 0 for w in ws):
            raise ValueError("weights must be nonzero")
        object.__setattr__(self, "weights", ws)

    @classmethod
    def parse(cls, text: str) -> "WeightVector":
        """Parse a comma separated list such as ``"1,-1/2,0.25"``."""
        items = [s.strip() for s in text.split(",") if s.strip()]
        if not items:
            raise ValueError("no weights given")
        return cls(tuple(Fraction(s) for s in items))

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def common_denominator(self) -> int:
        return reduce(math.lcm, (w.denominator for w in self.weights), 1)

    def integer_weights(self) -> tuple[int, ...]:
        """Weights multiplied by the lcm of their denominators."""
        lcm = self.common_denominator()
        return tuple(int(w * lcm) for w in self.weights)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError("weights must be finite")
        return Fraction(x)
    return Fraction(x)


# -- constructors -------------------------------------------------------------


def dirac(k: int = 0) -> Pmf:
    return Pmf(int(k), np.ones(1))


def bernoulli(p: float) -> Pmf:
    """Mass ``1 - p`` at 0 and ``p`` at 1; a Dirac at the endpoints."""
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"Bernoulli parameter {p!r} outside [0, 1]")
    if p == 0.0:
        return dirac(0)
    if p == 1.0:
        return dirac(1)
    return Pmf(0, np.array([1.0 - p, p]))


def uniform(a: int, b: int) -> Pmf:
    """Uniform mass on the integers ``a, a+1, ..., b``."""
    a, b = int(a), int(b)
    if a > b:
        raise ValueError(f"empty range [{a}, {b}]")
    n = b - a + 1
    return Pmf(a, np.full(n, 1.0 / n))


def poisson_truncated(lam: float, tail_eps: float = 1e-15) -> Pmf:
    """Poisson(``lam``) on ``0..N`` with dropped upper tail below ``tail_eps``.

    N is the smallest cutoff whose upper tail, summed term by term from the
    far end of the series, is below ``tail_eps``; the kept masses are then
    renormalized.
    """
    lam = float(lam)
    if not lam > 0 or not math.isfinite(lam):
        raise ValueError(f"Poisson parameter must be positive, got {lam!r}")
    if not 0 < tail_eps <= 1e-6:
        raise ValueError("tail_eps must lie in (0, 1e-6]")
    # log space so that e^{-lam} does not underflow for large lam
    stop = math.log(tail_eps) - 40.0
    logs = [-lam]
    k = 0
    while k < lam or logs[-1] > stop:
        k += 1
        logs.append(logs[-1] + math.log(lam) - math.log(k))
    terms = np.exp(np.array(logs))
    tails = np.cumsum(terms[::-1])[::-1]  # tails[j] = sum_{k >= j} p_k
    above = np.append(tails[1:], 0.0)  # mass strictly above j
    n_cut = int(np.argmax(above < tail_eps))
    return Pmf.from_weights(terms[: n_cut + 1])


def symmetric_geometric_half(p: float, tail_eps: float = 1e-18) -> Pmf:
    """Two-sided geometric law on half-integers, moved onto the integers.

    The law puts mass ``(1 - p)/2 * p**k`` on ``+-(1/2 + k)``; subtracting
    1/2 places it on ``..., -2, -1, 0, 1, ...`` symmetric about ``-1/2``.
    The series is cut where the dropped mass (weighted by the squared
    distance, so the variance is also accurate) falls below ``tail_eps``.
    """
    p = float(p)
    if not 0.0 < p < 1.0:
        raise ValueError(f"geometric parameter {p!r} outside (0, 1)")
    K = 0
    while p ** (K + 1) * (K + 2) ** 2 / (1.0 - p) ** 3 >= tail_eps:
        K += 1
    half = (1.0 - p) / 2.0 * p ** np.arange(K + 1)
    weights = np.concatenate([half[::-1], half])
    return Pmf.from_weights(weights, offset=-(K + 1))


# -- convolution --------------------------------------------------------------


def convolve(f: Pmf, g: Pmf) -> Pmf:
    """Exact dense convolution (law of the independent sum)."""
    out = np.convolve(f.probs, g.probs)
    return Pmf.from_weights(np.maximum(out, 0.0), offset=f.offset + g.offset)


def convolve_fft(f: Pmf, g: Pmf) -> Pmf:
    """FFT convolution with the same contract as :func:`convolve`.

    Round-off negatives no larger than ``FFT_NEGATIVE_TOL`` are clamped to
    zero; anything larger raises :class:`ConvolutionError`.
    """
    n = f.probs.size + g.probs.size - 1
    size = 1 << (n - 1).bit_length()
    out = np.fft.irfft(np.fft.rfft(f.probs, size) * np.fft.rfft(g.probs, size), size)[:n]
    worst = float(out.min())
    if worst < -FFT_NEGATIVE_TOL:
        raise ConvolutionError(f"FFT produced a negative mass {worst:.3e}")
    return Pmf.from_weights(np.maximum(out, 0.0), offset=f.offset + g.offset)


def convolve_auto(f: Pmf, g: Pmf) -> Pmf:
    """Dense up to ``FFT_THRESHOLD`` combined length, FFT above it."""
    if f.probs.size + g.probs.size - 1 > FFT_THRESHOLD:
        return convolve_fft(f, g)
    return convolve(f, g)


def convolve_all(pmfs: Iterable[Pmf]) -> Pmf:
    return reduce(convolve_auto, pmfs, dirac(0))


def convolve_power(f: Pmf, n: int, conv=convolve_auto) -> Pmf:
    """``n``-fold self convolution by repeated squaring."""
    if n < 0:
        raise ValueError("power must be non-negative")
    result = dirac(0)
    base = f
    while n:
        if n & 1:
            result = conv(result, base)
        n >>= 1
        if n:
            base = conv(base, base)
    return result


def poisson_binomial(ps: Sequence[float]) -> Pmf:
    """Law of a sum of independent Bernoulli(``p_i``); Dirac at 0 if empty."""
    probs = np.ones(1)
    for p in ps:
        p = float(p)
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"Bernoulli parameter {p!r} outside [0, 1]")
        nxt = np.empty(probs.size + 1)
        nxt[:-1] = probs * (1.0 - p)
        nxt[-1] = 0.0
        nxt[1:] += probs * p
        probs = nxt
    return Pmf.from_weights(probs)


def weighted_bernoulli_sum(v: WeightVector | Sequence, ps: Sequence[float]) -> Pmf:
    """Law of ``sum v_i B_i`` on the integer lattice after clearing denominators.

    The weights are multiplied by the lcm of their denominators, so the
    atoms of the result are ``L * (sum of a subset of v)``.  Point
    probabilities and Rényi entropies do not change under this scaling.
    """
    if not isinstance(v, WeightVector):
        v = WeightVector(tuple(v))
    if len(v) != len(ps):
        raise ValueError("weights and probabilities differ in length")
    ms = v.integer_weights()
    lo = sum(m for m in ms if m < 0)
    hi = sum(m for m in ms if m > 0)
    probs = np.zeros(hi - lo + 1)
    probs[-lo] = 1.0
    for m, p in zip(ms, ps):
        p = float(p)
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"Bernoulli parameter {p!r} outside [0, 1]")
        moved = np.roll(probs, m) * p
        probs = probs * (1.0 - p) + moved
    return Pmf.from_weights(probs, offset=lo)


# -- descriptive --------------------------------------------------------------


def mean_var(f: Pmf) -> tuple[float, float]:
    """Mean and variance by compensated direct summation."""
    k = f.support.astype(float)
    mean = _fsum(k * f.probs)
    var = _fsum((k - mean) ** 2 * f.probs)
    return mean, var


def variance(f: Pmf) -> float:
    return mean_var(f)[1]


def is_log_concave(f: Pmf, tol: float = 1e-14) -> bool:
    """``f(n)^2 >= f(n-1) f(n+1)`` everywhere and no interior zeros."""
    p = f.probs
    if np.any(p == 0):
        return False
    if p.size < 3:
        return True
    return bool(np.all(p[1:-1] ** 2 >= p[2:] * p[:-2] - tol))


def is_symmetric(f: Pmf, tol: float = 1e-12) -> Fraction | None:
    """Center of mirror symmetry (in half-integers) or ``None``."""
    if np.max(np.abs(f.probs - f.probs[::-1])) > tol:
        return None
    return Fraction(f.first + f.last, 2)
