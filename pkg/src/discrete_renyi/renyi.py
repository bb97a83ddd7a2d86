"""Rényi entropies (in nats) and the entropy power functional ``Delta_alpha``."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from .pmf import Pmf, TRIM_EPS


class OrderKind(enum.Enum):
    ZERO = "0"
    ONE = "1"
    INFINITY = "inf"
    FINITE = "finite"


@dataclass(frozen=True, order=False)
class RenyiOrder:
    """Order ``alpha`` in ``[0, inf]``.

    ``0``, ``1`` and ``inf`` are the limit cases; every other positive value
    is a finite order.  Values near 1 are *not* snapped to the Shannon case.
    """

    value: float

    def __post_init__(self):
        v = float(self.value)
        if math.isnan(v) or v < 0:
            raise ValueError(f"Rényi order must lie in [0, inf], got {self.value!r}")
        object.__setattr__(self, "value", v)

    @classmethod
    def parse(cls, text: str) -> "RenyiOrder":
        t = text.strip().lower()
        if t in ("inf", "infinity", "+inf"):
            return cls(math.inf)
        try:
            v = float(t)
        except ValueError:
            raise ValueError(f"cannot parse Rényi order {text!r}") from None
        if not math.isfinite(v):
            raise ValueError(f"cannot parse Rényi order {text!r}")
        return cls(v)

    @property
    def kind(self) -> OrderKind:
        if self.value == 0:
            return OrderKind.ZERO
        if self.value == 1:
            return OrderKind.ONE
        if math.isinf(self.value):
            return OrderKind.INFINITY
        return OrderKind.FINITE

    @property
    def conjugate(self) -> float:
        """``alpha' = alpha / (alpha - 1)``; equal to 1 at infinity."""
        kind = self.kind
        if kind is OrderKind.INFINITY:
            return 1.0
        if kind is not OrderKind.FINITE:
            raise ValueError(f"conjugate exponent undefined for alpha = {self}")
        return self.value / (self.value - 1.0)

    def __str__(self) -> str:
        if math.isinf(self.value):
            return "inf"
        return repr(self.value) if self.value != int(self.value) else str(int(self.value))

    def __lt__(self, other: "RenyiOrder") -> bool:
        return self.value < other.value


ZERO = RenyiOrder(0.0)
ONE = RenyiOrder(1.0)
INF = RenyiOrder(math.inf)

OrderLike = Union[RenyiOrder, float, int, str]
MassLike = Union[Pmf, Sequence[float], np.ndarray]


def as_order(a: OrderLike) -> RenyiOrder:
    if isinstance(a, RenyiOrder):
        return a
    if isinstance(a, str):
        return RenyiOrder.parse(a)
    return RenyiOrder(a)


def _masses(f: MassLike) -> np.ndarray:
    p = f.probs if isinstance(f, Pmf) else np.asarray(f, dtype=float).ravel()
    if p.size == 0 or np.any(p < 0):
        raise ValueError("masses must be a non-empty non-negative vector")
    return p


NEAR_ONE = 0.5


def log_power_sum(p: np.ndarray, alpha: float) -> float:
    """``log sum p_k**alpha`` without overflow, underflow or cancellation.

    Away from ``alpha = 1`` the largest mass ``M`` is factored out:
    ``alpha*log(M) + log1p(sum_{k != argmax} (p_k/M)**alpha)``.  Within
    ``NEAR_ONE`` of 1 the sum is written as
    ``log(S) + log1p(sum p_k expm1((alpha-1) log p_k) / S)`` with
    ``S = sum p_k``, which keeps full relative accuracy as ``alpha -> 1``.
    """
    p = p[p > 0]
    eps = alpha - 1.0
    if abs(eps) < NEAR_ONE:
        total = math.fsum(p.tolist())
        s = math.fsum((p * np.expm1(eps * np.log(p))).tolist())
        return math.log(total) + math.log1p(s / total)
    i = int(np.argmax(p))
    m = float(p[i])
    rest = np.delete(p, i) / m
    s = math.fsum((rest**alpha).tolist()) if rest.size else 0.0
    return alpha * math.log(m) + math.log1p(s)


def _support_size(p: np.ndarray) -> int:
    return int(np.count_nonzero(p > TRIM_EPS))


def shannon_entropy(f: MassLike) -> float:
    p = _masses(f)
    p = p[p > 0]
    return -math.fsum((p * np.log(p)).tolist())


def renyi_entropy(f: MassLike, a: OrderLike) -> float:
    """``H_alpha`` in nats for any order in ``[0, inf]``."""
    a = as_order(a)
    p = _masses(f)
    kind = a.kind
    if kind is OrderKind.ZERO:
        return math.log(_support_size(p))
    if kind is OrderKind.ONE:
        return shannon_entropy(p)
    if kind is OrderKind.INFINITY:
        return -math.log(float(p.max()))
    return log_power_sum(p, a.value) / (1.0 - a.value)


def delta(f: MassLike, a: OrderLike) -> float:
    """``Delta_alpha = (sum p**alpha)**(2/(1-alpha)) - 1``, base free.

    The limits are ``|supp|**2 - 1``, ``exp(2 H_1) - 1`` and
    ``max(p)**-2 - 1``.
    """
    a = as_order(a)
    p = _masses(f)
    kind = a.kind
    if kind is OrderKind.ZERO:
        n = _support_size(p)
        return float(n * n - 1)
    if kind is OrderKind.ONE:
        return math.expm1(2.0 * shannon_entropy(p))
    if kind is OrderKind.INFINITY:
        m = float(p.max())
        return (1.0 - m) * (1.0 + m) / (m * m)
    return math.expm1(2.0 * log_power_sum(p, a.value) / (1.0 - a.value))


def renyi_entropy_rows(P: np.ndarray, a: OrderLike) -> np.ndarray:
    """Row-wise ``H_alpha`` of a 2-D array of mass vectors (zeros allowed)."""
    a = as_order(a)
    P = np.asarray(P, dtype=float)
    kind = a.kind
    if kind is OrderKind.ZERO:
        return np.log(np.count_nonzero(P > TRIM_EPS, axis=1).astype(float))
    m = P.max(axis=1)
    if kind is OrderKind.INFINITY:
        return -np.log(m)
    Q = P / m[:, None]
    if kind is OrderKind.ONE:
        with np.errstate(divide="ignore", invalid="ignore"):
            terms = np.where(P > 0, P * np.log(np.where(P > 0, P, 1.0)), 0.0)
        return -terms.sum(axis=1)
    eps = a.value - 1.0
    if abs(eps) < NEAR_ONE:
        total = P.sum(axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            terms = np.where(P > 0, P * np.expm1(eps * np.log(np.where(P > 0, P, 1.0))), 0.0)
        return (np.log(total) + np.log1p(terms.sum(axis=1) / total)) / -eps
    with np.errstate(divide="ignore"):
        s = np.where(P > 0, Q ** a.value, 0.0).sum(axis=1)
    return (a.value * np.log(m) + np.log(s)) / (1.0 - a.value)


def renyi_monotone_check(f: MassLike, grid: Iterable[OrderLike], slack: float = 1e-12) -> bool:
    """True iff ``H_alpha`` does not increase along the ascending ``grid``."""
    orders = [as_order(a) for a in grid]
    if any(b.value < a.value for a, b in zip(orders, orders[1:])):
        raise ValueError("grid must be sorted by ascending order")
    values = [renyi_entropy(f, a) for a in orders]
    return all(b <= a + slack for a, b in zip(values, values[1:]))
