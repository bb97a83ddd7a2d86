"""Acceptance criteria, one test per criterion, each with its runtime budget."""

import itertools
import math
import time
from fractions import Fraction

import numpy as np
import pytest

from discrete_renyi.bounds import (
    MIN_EPI_IMPROVED_CONSTANT,
    bernoulli_charfn_bound,
    bernoulli_exp_charfn_bound,
    entropy_variance_lower_bound,
    np_phi_monotone,
    np_single_crossing,
    v_lambda,
    w_lambda,
)
from discrete_renyi.extremal import (
    clip_to_density_bound,
    extreme_point_count,
    extreme_point_specs,
    floor_bound,
    min_entropy_over_extremes,
)
from discrete_renyi.pmf import Pmf, bernoulli, convolve, convolve_all, convolve_fft, mean_var, poisson_truncated, uniform
from discrete_renyi.renyi import delta, renyi_entropy
from discrete_renyi.spectral import char_lq_norm
from discrete_renyi.verify import check_entropy_variance_bound, check_min_epi, shannon_counterexample_scan
from discrete_renyi.verify.instances import random_pmf, random_rational_ps, random_rational_weights
from discrete_renyi.verify.littlewood_offord import erdos_value, exact_max_point_probability, lo_erdos_comparison
from discrete_renyi.verify.suites import run_suite


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.seconds, f"took {self.elapsed:.2f}s, budget {self.seconds}s"


def test_criterion_01_equality_cases():
    with Budget(1):
        for a in ("2", "5", "inf"):
            assert abs(delta(bernoulli(0.5), a) - 3.0) <= 1e-12
            assert abs(12 * mean_var(bernoulli(0.5))[1] - 3.0) <= 1e-12
        for m in range(1, 101):
            u = uniform(0, m - 1)
            d = delta(u, "inf")
            assert abs(d - (m * m - 1)) <= 1e-9
            assert abs(12 * mean_var(u)[1] - (m * m - 1)) <= 1e-9


def test_criterion_02_min_epi_ratio():
    with Budget(60):
        assert check_min_epi([bernoulli(0.5), bernoulli(0.5)]).params["ratio"] == 0.5
        reports = run_suite("min-epi", "random", count=10_000, n=8)
        ratios = [r.params["ratio"] for r in reports if r.params["ratio"] is not None]
        assert len(ratios) > 9_000
        worst = min(ratios)
        assert worst >= MIN_EPI_IMPROVED_CONSTANT, worst
        assert all(r.passed for r in reports)


def test_criterion_03_bernoulli_lq_bound():
    with Budget(30):
        for k in range(1, 51):
            p = k / 51
            for q in (1, 1.5, 2, 4, 10, 100):
                norm = char_lq_norm(bernoulli(p), q, tol=1e-10)
                assert bernoulli_charfn_bound(p * (1 - p), q) - norm >= 0.0, (p, q)


def test_criterion_04_entropy_variance():
    with Budget(30):
        gen = np.random.default_rng(2024)
        for _ in range(1000):
            ps = gen.random(int(gen.integers(1, 16))).tolist()
            for a in ("2", "4", "inf"):
                rep = check_entropy_variance_bound(ps, a)
                assert rep.passed and rep.params["pass_max_form"], rep.to_dict()
        for a in ("2", "inf"):
            rep = check_entropy_variance_bound([1e-4], a)
            assert rep.slack / rep.lhs < 1e-3
            f = poisson_truncated(1e-4)
            h = renyi_entropy(f, a)
            bound = entropy_variance_lower_bound(1e-4, a)
            assert 0 <= (h - bound.integral) / h < 1e-3
            assert 0 <= (h - bound.max_form) / h < 1e-3


def test_criterion_05_littlewood_offord():
    with Budget(60):
        gen = np.random.default_rng(5)
        for _ in range(40):
            n = int(gen.integers(1, 13))
            v, ps = random_rational_weights(gen, n), random_rational_ps(gen, n)
            law = {}
            for bits in itertools.product((0, 1), repeat=n):
                x = sum(Fraction(w) * b for w, b in zip(v, bits))
                pr = math.prod(Fraction(p) if b else 1 - Fraction(p) for p, b in zip(ps, bits))
                law[x] = law.get(x, 0) + pr
            assert exact_max_point_probability(v, ps) == max(law.values())
        table = lo_erdos_comparison(60)
        for n, q in zip(table.column("n"), table.column("q_exact")):
            assert q == Fraction(math.comb(n, n // 2), 2**n) == erdos_value(n)
        ratio = table.column("ratio")[-1]
        assert 1.2 <= ratio <= 1.35
        assert abs(ratio / (math.pi / math.sqrt(6)) - 1) < 0.05


def test_criterion_06_single_crossing():
    with Budget(30):
        for k in range(1, 101):
            lam = k / 200
            w, v = w_lambda(lam), v_lambda(lam)
            t0 = np_single_crossing(w, v, resolution=4096)
            rep = np_phi_monotone(w, v, t0, [1, 2, 4, 8, 16], rel_tol=1e-9)
            assert rep.passed, rep.to_dict()


def test_criterion_07_exponential_charfn_bound():
    with Budget(10):
        t = np.linspace(-math.pi, math.pi, 1000)
        for k in range(1, 96):
            rep = bernoulli_exp_charfn_bound(bernoulli(k / 96), t, tol=1e-14)
            assert rep.slack >= -1e-14, rep.to_dict()


def test_criterion_08_shannon_failure():
    with Budget(10):
        rows = {(r["theta"], r["n"]): r["ratio"] for r in shannon_counterexample_scan([1e-3, 1e-1], 50).to_records()}
        assert rows[(1e-3, 50)] < rows[(1e-1, 50)]


def test_criterion_09_oracle_equivalences():
    with Budget(30):
        gen = np.random.default_rng(9)
        for _ in range(1000):
            f, g = random_pmf(gen, 300), random_pmf(gen, 300)
            assert convolve_fft(f, g).allclose(convolve(f, g), 1e-12)
        tol = 1e-10
        for _ in range(100):
            f = random_pmf(gen, 50)
            assert abs(char_lq_norm(f, 2, tol=tol) - float(np.sum(f.probs**2))) <= 2 * tol


def _exact_masses(spec):
    inv = 1 / Fraction(spec.C)
    out = [Fraction(0)] * (spec.m + 1)
    for a in spec.A:
        out[a] = inv
    if spec.x is not None:
        out[spec.x] = 1 - len(spec.A) * inv
    return out


def test_criterion_10_extreme_points():
    with Budget(120):
        for m in range(0, 9):
            bounds = [Fraction(c) for c in range(2, m + 2)]
            bounds += [Fraction(k, d) for d in (2, 3, 7) for k in range(d + 1, d * (m + 1)) if k % d]
            for C in bounds:
                specs = extreme_point_specs(C, m)
                fl = math.floor(C)
                expect = math.comb(m + 1, fl) if C.denominator == 1 else math.comb(m + 1, fl) * (m + 1 - fl)
                assert len(specs) == expect == extreme_point_count(C, m)
                assert len({(s.A, s.x) for s in specs}) == len(specs)
                residual = 1 - fl / C
                for s in specs:
                    masses = _exact_masses(s)
                    assert sum(masses) == 1
                    assert masses.count(1 / C) == fl
                    assert all(x in (0, 1 / C, residual) for x in masses)
                    assert sum(1 for x in masses if x > 0) == fl + (C.denominator != 1)
                    assert max(masses) <= 1 / C
        gen = np.random.default_rng(10)
        cache = {}
        for _ in range(100):
            n, m = int(gen.integers(1, 4)), int(gen.integers(1, 7))
            Cs = tuple(sorted(Fraction(int(gen.integers(3, 2 * m + 3)), 2) for _ in range(n)))
            a = str(gen.choice(["0.5", "1", "2", "inf"]))
            if (Cs, m, a) not in cache:
                cache[Cs, m, a] = min_entropy_over_extremes(list(Cs), m, a)[0]
            fs = [Pmf.from_weights(clip_to_density_bound(gen.random(m + 1) + 1e-3, C)) for C in Cs]
            assert all(f.max_mass() <= float(1 / C) + 1e-15 for f, C in zip(fs, Cs))
            assert renyi_entropy(convolve_all(fs), a) >= cache[Cs, m, a] - 1e-12
