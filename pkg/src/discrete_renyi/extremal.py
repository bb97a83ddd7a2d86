"""Extreme points of density-bounded simplices, rearrangement and majorization.

``P_C(m)`` is the set of mass functions on ``{0, ..., m}`` bounded by
``1/C``.  Its extreme points put mass ``1/C`` on a set ``A`` of ``floor(C)``
points and the remainder ``1 - floor(C)/C`` on one further point ``x``
(absent when ``C`` is an integer).
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .pmf import Pmf
from .renyi import OrderLike, as_order, renyi_entropy_rows

MAX_POINTS_PER_FACTOR = 10**6
MAX_TUPLES = 10**7
MAX_FACTORS = 4
MAX_M = 8
FLOOR_NUDGE = 1e-12
MAJORIZATION_TOL = 1e-12


class GuardError(ValueError):
    """A brute-force enumeration would exceed its size guard."""


def as_bound(C) -> Fraction | float:
    """Accept ``Fraction``, ``int``, rational strings (``"3/2"``) or floats."""
    if isinstance(C, (Fraction, int)):
        return Fraction(C)
    if isinstance(C, str):
        return Fraction(C)
    return float(C)


def floor_bound(C) -> int:
    """``floor(C)``; floats are nudged up by 1e-12 so ``3.0 - eps`` counts as 3."""
    if isinstance(C, Fraction):
        return math.floor(C)
    return math.floor(float(C) + FLOOR_NUDGE)


def is_integral(C) -> bool:
    if isinstance(C, Fraction):
        return C.denominator == 1
    return abs(float(C) - round(float(C))) <= FLOOR_NUDGE


@dataclass(frozen=True)
class ExtremePointSpec:
    """``1_A / C + (1 - floor(C)/C) 1_{x}`` on ``{0, ..., m}``."""

    A: tuple[int, ...]
    x: int | None
    C: Fraction | float
    m: int

    def sort_key(self) -> tuple:
        return (self.A, -1 if self.x is None else self.x)

    def masses(self) -> np.ndarray:
        out = np.zeros(self.m + 1)
        inv = float(1 / self.C) if isinstance(self.C, Fraction) else 1.0 / self.C
        out[list(self.A)] = inv
        if self.x is not None:
            out[self.x] = 1.0 - len(self.A) * inv
        return out

    def to_pmf(self) -> Pmf:
        return Pmf.from_weights(self.masses())

    def to_dict(self) -> dict:
        c = self.C if isinstance(self.C, Fraction) else Fraction(self.C).limit_denominator(10**9)
        return {"C": str(c), "m": self.m, "A": list(self.A), "x": self.x}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "ExtremePointSpec":
        C = Fraction(data["C"])
        spec = cls(tuple(int(a) for a in data["A"]), data["x"], C, int(data["m"]))
        spec.validate()
        return spec

    def validate(self) -> None:
        fl = floor_bound(self.C)
        if len(self.A) != fl or len(set(self.A)) != fl:
            raise ValueError("A must hold floor(C) distinct points")
        if any(not 0 <= a <= self.m for a in self.A):
            raise ValueError("A must lie in {0, ..., m}")
        if is_integral(self.C) != (self.x is None):
            raise ValueError("x must be present exactly when C is not an integer")
        if self.x is not None and (self.x in self.A or not 0 <= self.x <= self.m):
            raise ValueError("x must be a point of {0, ..., m} outside A")


def extreme_point_count(C, m: int) -> int:
    C = as_bound(C)
    fl = floor_bound(C)
    if is_integral(C):
        return math.comb(m + 1, fl)
    return math.comb(m + 1, fl) * (m + 1 - fl)


def _check_domain(C, m: int) -> None:
    if m < 0:
        raise ValueError("m must be non-negative")
    if not C > 1:
        raise ValueError(f"C must exceed 1, got {C!r}")
    if C > m + 1 + FLOOR_NUDGE:
        raise ValueError(f"C = {C} exceeds m + 1 = {m + 1}: the constrained set is empty")


def extreme_point_specs(C, m: int, guard: int = MAX_POINTS_PER_FACTOR) -> list[ExtremePointSpec]:
    """All extreme points of ``P_C(m)`` in lexicographic ``(A, x)`` order."""
    C = as_bound(C)
    _check_domain(C, m)
    count = extreme_point_count(C, m)
    if count > guard:
        raise GuardError(f"{count} extreme points exceed the guard of {guard}")
    fl = floor_bound(C)
    integral = is_integral(C)
    if integral and not isinstance(C, Fraction):
        C = Fraction(round(C))
    points = range(m + 1)
    specs = []
    for A in itertools.combinations(points, fl):
        if integral:
            specs.append(ExtremePointSpec(A, None, C, m))
        else:
            specs.extend(ExtremePointSpec(A, x, C, m) for x in points if x not in A)
    return specs


def enumerate_extreme_points(C, m: int, guard: int = MAX_POINTS_PER_FACTOR) -> list[Pmf]:
    return [s.to_pmf() for s in extreme_point_specs(C, m, guard)]


def rearrange(f: Pmf) -> Pmf:
    """Masses of ``f`` in support order, re-placed on ``0, 1, 2, ...``."""
    p = f.probs[f.probs > 0]
    return Pmf(0, p)


def _sorted_partial_sums(p: np.ndarray, n: int) -> np.ndarray:
    q = np.zeros(n)
    s = np.sort(p)[::-1]
    q[: s.size] = s
    return np.cumsum(q)


def majorizes(f: Pmf | np.ndarray, g: Pmf | np.ndarray, tol: float = MAJORIZATION_TOL) -> bool:
    """``f`` majorizes ``g``: descending partial sums of ``f`` dominate ``g``'s."""
    p = f.probs if isinstance(f, Pmf) else np.asarray(f, dtype=float)
    q = g.probs if isinstance(g, Pmf) else np.asarray(g, dtype=float)
    n = max(p.size, q.size)
    return bool(np.all(_sorted_partial_sums(p, n) >= _sorted_partial_sums(q, n) - tol))


def _batch_convolve(P: np.ndarray, Q: np.ndarray) -> np.ndarray:
    """All pairwise convolutions: row ``i*len(Q)+j`` is ``P[i] * Q[j]``."""
    lp, lq = P.shape[1], Q.shape[1]
    out = np.zeros((P.shape[0], Q.shape[0], lp + lq - 1))
    for s in range(lq):
        out[:, :, s : s + lp] += P[:, None, :] * Q[None, :, s, None]
    return out.reshape(-1, lp + lq - 1)


def _distinct_up_to_translation(specs: list[ExtremePointSpec]) -> list[ExtremePointSpec]:
    # translating a factor translates the sum and leaves H_alpha unchanged;
    # the first spec in lexicographic order represents its class
    seen = {}
    for s in specs:
        pmf = s.to_pmf()
        seen.setdefault(pmf.probs.tobytes(), s)
    return list(seen.values())


def min_entropy_over_extremes(
    Cs: Sequence,
    m: int,
    a: OrderLike,
    guard: int = MAX_TUPLES,
    tie_tol: float = 1e-12,
) -> tuple[float, list[ExtremePointSpec]]:
    """Minimum of ``H_alpha(Z_1 + ... + Z_n)`` over extreme points ``Z_i``.

    Exhaustive over tuples of extreme points of ``P_{C_i}(m)``, counted up
    to translation of each factor.  Among tuples within ``tie_tol`` of the
    minimum, the lexicographically smallest tuple of specs is returned.
    """
    a = as_order(a)
    Cs = [as_bound(C) for C in Cs]
    if not 1 <= len(Cs) <= MAX_FACTORS:
        raise GuardError(f"between 1 and {MAX_FACTORS} factors supported, got {len(Cs)}")
    if m > MAX_M:
        raise GuardError(f"m = {m} exceeds the brute-force limit {MAX_M}")
    factors = [_distinct_up_to_translation(extreme_point_specs(C, m)) for C in Cs]
    total = math.prod(len(f) for f in factors)
    if total > guard:
        raise GuardError(f"{total} tuples exceed the guard of {guard}")
    mats = [np.array([s.masses() for s in f]) for f in factors]
    partial = mats[0]
    for M in mats[1:-1]:
        partial = _batch_convolve(partial, M)
    if len(mats) > 1:
        last = mats[-1]
        values = np.empty((partial.shape[0], last.shape[0]))
        for j in range(last.shape[0]):
            values[:, j] = renyi_entropy_rows(_batch_convolve(partial, last[j : j + 1]), a)
        values = values.ravel()
    else:
        values = renyi_entropy_rows(partial, a)
    best = float(values.min())
    shape = [len(f) for f in factors]
    candidates = []
    for flat in np.nonzero(values <= best + tie_tol)[0]:
        idx = np.unravel_index(int(flat), shape)
        candidates.append([factors[i][k] for i, k in enumerate(idx)])
    chosen = min(candidates, key=lambda tup: [s.sort_key() for s in tup])
    return best, chosen


def clip_to_density_bound(weights, C) -> np.ndarray:
    """Project positive ``weights`` into ``P_C``: cap at ``1/C`` and refill.

    Excess mass above the cap is redistributed proportionally over the
    uncapped entries until no entry exceeds ``1/C``.
    """
    w = np.asarray(weights, dtype=float)
    w = w / w.sum()
    cap = 1.0 / float(C)
    if w.size * cap < 1.0 - 1e-12:
        raise ValueError("not enough points to satisfy the density bound")
    capped = np.zeros(w.size, dtype=bool)
    for _ in range(w.size):
        over = (w > cap) & ~capped
        if not over.any():
            break
        capped |= over
        free = 1.0 - cap * capped.sum()
        rest = w[~capped]
        w = np.where(capped, cap, 0.0)
        if rest.size:
            w[~capped] = rest / rest.sum() * free
    return np.minimum(w, cap)
