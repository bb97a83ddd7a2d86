"""Seeded random instances for the randomized suites."""

from __future__ import annotations

import numpy as np

from ..pmf import Pmf, bernoulli, uniform

DEFAULT_SEED = 20240101


def rng(seed: int | None = None) -> np.random.Generator:
    return np.random.default_rng(DEFAULT_SEED if seed is None else seed)


def random_pmf(gen: np.random.Generator, max_support: int = 50) -> Pmf:
    """Dirichlet masses on a random support, sometimes with interior zeros."""
    k = int(gen.integers(1, max_support + 1))
    w = gen.dirichlet(np.full(k, float(gen.choice([0.3, 1.0, 3.0]))))
    if k > 2 and gen.random() < 0.2:
        w[gen.integers(1, k - 1)] = 0.0
    if w[0] <= 0 or w[-1] <= 0:
        w[0] += 1e-3
        w[-1] += 1e-3
    return Pmf.from_weights(w, offset=int(gen.integers(-5, 6)))


def random_mixed_pmf(gen: np.random.Generator, max_support: int = 50) -> Pmf:
    """Bernoulli, uniform or general law with equal probability."""
    kind = int(gen.integers(3))
    if kind == 0:
        return bernoulli(float(gen.random()))
    if kind == 1:
        a = int(gen.integers(-3, 4))
        return uniform(a, a + int(gen.integers(0, max_support)))
    return random_pmf(gen, max_support)


def random_ps(gen: np.random.Generator, n_max: int) -> list[float]:
    n = int(gen.integers(1, n_max + 1))
    return gen.random(n).tolist()


def random_ps_list(gen: np.random.Generator, factors_max: int, n_max: int) -> list[list[float]]:
    return [random_ps(gen, n_max) for _ in range(int(gen.integers(1, factors_max + 1)))]


def random_rational_weights(gen: np.random.Generator, n: int, max_num: int = 6, max_den: int = 4) -> list[str]:
    """Nonzero rational weights as ``"a/b"`` strings."""
    out = []
    for _ in range(n):
        num = int(gen.integers(1, max_num + 1)) * (1 if gen.random() < 0.5 else -1)
        out.append(f"{num}/{int(gen.integers(1, max_den + 1))}")
    return out


def random_rational_ps(gen: np.random.Generator, n: int, den: int = 8) -> list[str]:
    """Probabilities ``k/den`` in the open unit interval, as strings."""
    return [f"{int(gen.integers(1, den))}/{den}" for _ in range(n)]
