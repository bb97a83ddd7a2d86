import math

import numpy as np
import pytest

from discrete_renyi.pmf import Pmf, bernoulli, convolve_power, dirac, poisson_binomial, symmetric_geometric_half, uniform
from discrete_renyi.renyi import delta
from discrete_renyi.verify import (
    check_bc_upper,
    check_bernoulli_repi,
    check_bmm_lower,
    check_delta_le_12var_bernoulli,
    check_entropy_variance_bound,
    check_min_epi,
    check_min_epi_reversal,
    check_small_value_min_epi,
    shannon_counterexample_scan,
    tightness_scan,
)
from discrete_renyi.verify.suites import SUITES, crossing_report, run_suite


@pytest.mark.parametrize("a", ["2", "5", "inf"])
def test_delta_12var_equality_at_half(a):
    rep = check_delta_le_12var_bernoulli(0.5, a)
    assert rep.lhs == pytest.approx(3.0, abs=1e-12) and rep.rhs == 3.0
    assert rep.passed and rep.params["equality_case"]
    assert check_delta_le_12var_bernoulli(0.0, a).slack == 0.0


def test_delta_12var_rejects_small_order():
    with pytest.raises(ValueError):
        check_delta_le_12var_bernoulli(0.3, 1.5)


def test_repi_fair_pair():
    rep = check_bernoulli_repi([[0.5], [0.5]], "inf")
    assert rep.lhs == pytest.approx(3.0) and rep.rhs == pytest.approx(1.0)


def test_min_epi_fair_pair_ratio_half():
    rep = check_min_epi([bernoulli(0.5), bernoulli(0.5)])
    assert rep.params["ratio"] == 0.5
    assert rep.params["pass_1_22"] and rep.passed


def test_min_epi_diracs():
    rep = check_min_epi([dirac(2), dirac(-1)])
    assert rep.params["ratio"] is None and rep.passed
    assert check_min_epi([dirac(0), bernoulli(0.5)]).params["ratio"] == pytest.approx(1.0)


def test_reversal_examples():
    assert check_min_epi_reversal([[0.5]]).rhs == pytest.approx(18.0)
    rep = check_min_epi_reversal([[0.5], [0.5]])
    assert rep.lhs == pytest.approx(3.0) and rep.rhs == pytest.approx(36.0)


def test_small_value():
    rep = check_small_value_min_epi([0.5, 0.5])
    assert rep.rhs == pytest.approx(math.pi**2 / 6)
    with pytest.raises(ValueError):
        check_small_value_min_epi([uniform(0, 2)])


def test_bc_upper_sharp_for_uniform():
    for m in (1, 2, 7, 100):
        rep = check_bc_upper(uniform(0, m - 1))
        assert rep.lhs == pytest.approx(m * m - 1, rel=1e-12)
        assert abs(rep.slack) <= 1e-9 * m * m


def test_bmm_lower():
    for k in range(1, 11):
        assert check_bmm_lower(convolve_power(bernoulli(0.5), 2 * k)).passed
    with pytest.raises(ValueError):
        check_bmm_lower(bernoulli(0.3))
    with pytest.raises(ValueError):
        check_bmm_lower(Pmf.from_weights([0.3, 0.0, 0.4, 0.0, 0.3]))


@pytest.mark.parametrize("p", [0.05, 0.3, 0.6, 0.95])
def test_bmm_symmetric_geometric_closed_form(p):
    f = symmetric_geometric_half(p)
    m = (1 - p) / 2
    assert delta(f, "inf") == pytest.approx(1 / m**2 - 1, rel=1e-12)
    var = float(np.sum(f.probs * (np.arange(f.offset, f.offset + len(f)) + 0.5) ** 2))
    # the truncated tail carries k^2 weight, so the variance is looser than the masses
    assert var == pytest.approx(2 * p / (1 - p) ** 2 + 0.25, rel=1e-9)
    holds = check_bmm_lower(f).passed
    assert holds == (8 - 2 * (1 - p) ** 2 >= p * p + 6 * p + 1)


def test_entropy_variance():
    rep = check_entropy_variance_bound([0.5] * 20, "inf")
    assert rep.params["rhs_max_form"] == pytest.approx(0.5 * max(math.log(11), math.log(60 / math.pi)))
    assert rep.passed and rep.params["pass_max_form"] and rep.slack > 0
    with pytest.raises(ValueError):
        check_entropy_variance_bound([0.5], 1)


def test_entropy_variance_sharp_for_rare_coin():
    rep = check_entropy_variance_bound([1e-4], "inf")
    assert rep.passed and rep.slack / rep.lhs < 1e-3


def test_shannon_scan():
    t = shannon_counterexample_scan([1e-3, 0.1, 0.5], 50)
    rows = {(r["theta"], r["n"]): r["ratio"] for r in t.to_records()}
    assert rows[(0.5, 1)] == pytest.approx(1.0)
    assert rows[(1e-3, 50)] < rows[(0.1, 50)]
    with pytest.raises(ValueError):
        shannon_counterexample_scan([0.7], 3)


def test_tightness_scan():
    t = tightness_scan("bernoulli_p", [1e-4, 0.1, 0.5])
    assert t.columns == ("family", "param", "alpha", "lhs", "rhs", "slack")
    r = t.to_records()
    assert r[0]["slack"] / r[0]["rhs"] < 1e-3
    assert all(x["slack"] >= 0 for x in r)
    p = tightness_scan("poisson_lambda", [1e-4]).to_records()[0]
    assert p["slack"] / p["rhs"] < 1e-3
    b = tightness_scan("iid_binomial", [1, 4, 16]).column("slack")
    assert b[0] < b[1] < b[2]
    with pytest.raises(ValueError):
        tightness_scan("gaussian", [1])
    assert t.to_csv().splitlines()[0] == "family,param,alpha,lhs,rhs,slack"


def test_crossing_report_records_lambda():
    rep = crossing_report(0.05)
    assert rep.passed and rep.params["lambda"] == 0.05 and rep.params["mode"] == "crossing"


@pytest.mark.parametrize("name", SUITES)
def test_suites_pass(name):
    assert all(r.passed for r in run_suite(name, "fixed"))
    reports = run_suite(name, "random", count=40, n=5, seed=3)
    bad = [r.to_dict() for r in reports if not r.passed]
    assert not bad, bad


def test_suite_replay_single_instance():
    a = run_suite("min-epi", count=5, seed=9)
    b = run_suite("min-epi", count=5, seed=9)
    assert [r.to_dict() for r in a] == [r.to_dict() for r in b]
    assert [r.params["instance"] for r in a] == list(range(5))
    assert all(r.seed == 9 for r in a)
    with pytest.raises(ValueError):
        run_suite("nope")
