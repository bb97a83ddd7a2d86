import itertools
import math
from fractions import Fraction

import numpy as np
import pytest

from discrete_renyi.extremal import (
    ExtremePointSpec,
    GuardError,
    clip_to_density_bound,
    enumerate_extreme_points,
    extreme_point_count,
    extreme_point_specs,
    majorizes,
    min_entropy_over_extremes,
    rearrange,
)
from discrete_renyi.pmf import Pmf, convolve_all, uniform
from discrete_renyi.renyi import renyi_entropy


def test_counts_small():
    assert extreme_point_count(Fraction(3, 2), 2) == 6
    assert extreme_point_count(2, 3) == 6
    assert len(extreme_point_specs("3/2", 2)) == 6
    assert len(extreme_point_specs(2.0, 3)) == 6


def test_structure():
    for s in extreme_point_specs(Fraction(5, 2), 4):
        p = s.masses()
        assert np.count_nonzero(p == 0.4) == 2
        assert np.count_nonzero(np.abs(p - 0.2) < 1e-15) == 1
        assert p.sum() == pytest.approx(1.0)


def test_spec_roundtrip_and_validation():
    s = extreme_point_specs(Fraction(7, 3), 4)[5]
    assert ExtremePointSpec.from_dict(s.to_dict()) == s
    with pytest.raises(ValueError):
        ExtremePointSpec.from_dict({"C": "2", "m": 3, "A": [0, 1], "x": 2})
    with pytest.raises(ValueError):
        ExtremePointSpec.from_dict({"C": "5/2", "m": 3, "A": [0, 1], "x": 1})


def test_domain_and_guards():
    with pytest.raises(ValueError):
        extreme_point_specs(1, 3)
    with pytest.raises(ValueError):
        extreme_point_specs(5, 3)
    with pytest.raises(GuardError):
        extreme_point_specs(Fraction(3, 2), 8, guard=10)
    with pytest.raises(GuardError):
        min_entropy_over_extremes([2] * 5, 3, 2)
    with pytest.raises(GuardError):
        min_entropy_over_extremes([2], 9, 2)


def test_uniform_is_extreme_for_integer_C():
    pts = enumerate_extreme_points(3, 2)
    assert len(pts) == 1 and pts[0] == uniform(0, 2)


def test_min_entropy_brute_force_oracle():
    Cs, m, a = [Fraction(3, 2), 2], 3, 2
    best, specs = min_entropy_over_extremes(Cs, m, a)
    brute = min(
        renyi_entropy(convolve_all([s.to_pmf() for s in tup]), a)
        for tup in itertools.product(*(extreme_point_specs(C, m) for C in Cs))
    )
    assert best == pytest.approx(brute, abs=1e-13)
    assert renyi_entropy(convolve_all([s.to_pmf() for s in specs]), a) == pytest.approx(best, abs=1e-13)


def test_min_entropy_single_factor():
    best, specs = min_entropy_over_extremes([Fraction(5, 2)], 4, "inf")
    assert best == pytest.approx(math.log(2.5))
    assert specs[0].A == (0, 1) and specs[0].x == 2


def test_rearrange_and_majorize():
    f = Pmf.from_weights([0.2, 0.0, 0.0, 0.5, 0.3], offset=-4)
    r = rearrange(f)
    assert r.offset == 0 and r.probs.tolist() == [0.2, 0.5, 0.3]
    assert majorizes([1.0], [0.5, 0.5])
    assert not majorizes([0.5, 0.5], [0.9, 0.1])
    assert majorizes(f, r) and majorizes(r, f)


def test_clip_to_density_bound():
    w = clip_to_density_bound([10, 1, 1, 1], 2.5)
    assert w.sum() == pytest.approx(1.0)
    assert w.max() <= 0.4 + 1e-15
    with pytest.raises(ValueError):
        clip_to_density_bound([1, 1], 3)
