import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from discrete_renyi.bounds import harmonic_combination
from discrete_renyi.extremal import majorizes, rearrange
from discrete_renyi.pmf import (
    Pmf,
    bernoulli,
    convolve,
    convolve_all,
    convolve_fft,
    is_log_concave,
    mean_var,
    poisson_binomial,
)
from discrete_renyi.renyi import delta, renyi_entropy
from discrete_renyi.verify import (
    check_bc_upper,
    check_bernoulli_repi,
    check_entropy_variance_bound,
    check_min_epi,
    check_min_epi_reversal,
    check_small_value_min_epi,
)

ORDERS = [0, 0.25, 0.5, 0.75, 0.9, 1, 1.1, 1.5, 2, 2.5, 3, 4, 5, 7, 10, 15, 20, 50, 100, "inf"]
PROPERTY = settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])

weights = st.lists(st.floats(min_value=1e-6, max_value=1.0), min_size=1, max_size=40)
probs = st.floats(min_value=0.0, max_value=1.0)


# interior masses at or below the support threshold of H_0 would make H_0 < H_alpha
# for small alpha, so weights are either exactly zero or clearly positive
mass = st.one_of(st.just(0.0), st.floats(min_value=1e-9, max_value=1.0))


@st.composite
def pmfs(draw, max_size=40):
    w = draw(st.lists(mass, min_size=1, max_size=max_size))
    w[0] = max(w[0], 1e-3)
    w[-1] = max(w[-1], 1e-3)
    return Pmf.from_weights(w, offset=draw(st.integers(-20, 20)))


@st.composite
def log_concave_masses(draw):
    n = draw(st.integers(1, 12))
    slopes = sorted(draw(st.lists(st.floats(-3, 3), min_size=n - 1, max_size=n - 1)), reverse=True)
    logs = np.concatenate([[0.0], np.cumsum(slopes)])
    return np.exp(logs - logs.max())


@PROPERTY
@given(pmfs(), st.integers(-1000, 1000))
def test_translation_invariance(f, k):
    for a in ORDERS:
        assert renyi_entropy(f.shift(k), a) == renyi_entropy(f, a)


@PROPERTY
@given(pmfs(), st.randoms(use_true_random=False))
def test_permutation_invariance(f, rnd):
    p = list(f.probs)
    rnd.shuffle(p)
    for a in ORDERS:
        assert renyi_entropy(np.array(p), a) == pytest.approx(renyi_entropy(f, a), abs=1e-12)
        assert renyi_entropy(rearrange(f), a) == pytest.approx(renyi_entropy(f, a), abs=1e-12)


@PROPERTY
@given(pmfs())
def test_monotone_in_order(f):
    hs = [renyi_entropy(f, a) for a in ORDERS]
    assert all(b <= a + 1e-12 for a, b in zip(hs, hs[1:]))


@PROPERTY
@given(pmfs())
def test_delta_matches_entropy(f):
    for a in ORDERS:
        d = delta(f, a)
        assert d == pytest.approx(math.expm1(2 * renyi_entropy(f, a)), rel=1e-10, abs=1e-300)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 50), st.floats(min_value=1e-300, max_value=1e-200))
def test_tiny_masses_extended_precision(k, tiny):
    p = np.array([tiny] * k + [1.0 - k * tiny])
    mp.mp.dps = 50
    expect = -mp.log(mp.fsum(mp.mpf(float(x)) ** 2 for x in p))
    assert math.isfinite(renyi_entropy(p, 2))
    assert renyi_entropy(p, 2) == pytest.approx(float(expect), rel=1e-9, abs=1e-300)


@PROPERTY
@given(pmfs(30), pmfs(30))
def test_convolution_laws(f, g):
    h = convolve(f, g)
    assert h.allclose(convolve(g, f), 1e-15)
    assert h.allclose(convolve_fft(f, g), 1e-12)
    assert math.fsum(h.probs) == pytest.approx(1.0, abs=1e-12)
    (mf, vf), (mg, vg), (mh, vh) = mean_var(f), mean_var(g), mean_var(h)
    assert mh == pytest.approx(mf + mg, abs=1e-9)
    assert vh == pytest.approx(vf + vg, rel=1e-9, abs=1e-12)


@PROPERTY
@given(pmfs(20), st.data())
def test_schur_concavity(f, data):
    # an averaging (T-)transform yields a majorized vector of no smaller entropy
    p = f.probs.copy()
    i = data.draw(st.integers(0, p.size - 1))
    j = data.draw(st.integers(0, p.size - 1))
    lam = data.draw(st.floats(0, 1))
    q = p.copy()
    q[i], q[j] = lam * p[i] + (1 - lam) * p[j], lam * p[j] + (1 - lam) * p[i]
    assert majorizes(p, q)
    for a in ORDERS:
        assert renyi_entropy(q, a) >= renyi_entropy(p, a) - 1e-12


@PROPERTY
@given(st.lists(st.tuples(log_concave_masses(), st.lists(st.integers(0, 3), min_size=12, max_size=12)), min_size=1, max_size=3))
def test_rearrangement_lowers_entropy_of_sums(parts):
    fs, rs = [], []
    for masses, gaps in parts:
        spread = []
        for m, g in zip(masses, gaps):
            spread.extend([m] + [0.0] * g)
        f = Pmf.from_weights(spread)
        fs.append(f)
        rs.append(rearrange(f))
        assert is_log_concave(rs[-1])
    s, r = convolve_all(fs), convolve_all(rs)
    for a in (0, 0.5, 1, 2, "inf"):
        assert renyi_entropy(s, a) >= renyi_entropy(r, a) - 1e-10


@PROPERTY
@given(st.floats(0.01, 100), st.floats(0.01, 100), st.floats(0, 1e6), st.floats(0, 1e6))
def test_harmonic_combination(alpha, beta, a, b):
    big, small = harmonic_combination(alpha, beta, a, b)
    assert big >= small * (1 - 1e-12)


@PROPERTY
@given(st.lists(st.lists(probs, min_size=1, max_size=12), min_size=1, max_size=4), st.sampled_from(["2", "3", "inf"]))
def test_repi_and_reversal(ps_list, a):
    assert check_bernoulli_repi(ps_list, a).passed
    assert check_min_epi_reversal(ps_list).passed


@PROPERTY
@given(st.lists(pmfs(20), min_size=1, max_size=6))
def test_min_epi_and_bc(fs):
    assert check_min_epi(fs).passed
    for f in fs:
        assert check_bc_upper(f).passed


@PROPERTY
@given(st.lists(probs, min_size=1, max_size=10))
def test_small_value(ps):
    assert check_small_value_min_epi(ps).passed


@PROPERTY
@given(st.lists(probs, min_size=1, max_size=15), st.sampled_from(["2", "4", "inf"]))
def test_entropy_variance(ps, a):
    rep = check_entropy_variance_bound(ps, a)
    assert rep.passed and rep.params["pass_max_form"]


@PROPERTY
@given(st.lists(probs, min_size=1, max_size=12))
def test_poisson_binomial_matches_product(ps):
    assert poisson_binomial(ps).allclose(convolve_all([bernoulli(p) for p in ps]), 1e-14)
