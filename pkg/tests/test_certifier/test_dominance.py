from fractions import Fraction

import pytest

from chebkit.certifier import D, exponent_dominates, exponent_strictly_dominated
from chebkit.dataclasses import ExponentTerm, ScaledWeight


@pytest.mark.parametrize(
    "t1, t2, dominates, strictly",
    [
        ((3, -18.75), (0, -18), True, True),
        ((0, -18), (0, -18), True, False),
        ((1, -18), (0, -18), False, False),
        ((-201, 0), (-200, 0), True, True),
        ((2, -0.01), (-1000, 0), True, True),
        ((0, 0), (100, -0.001), False, False),
    ],
)
def test_exponent_order(t1, t2, dominates, strictly):
    t1, t2 = ExponentTerm(*t1), ExponentTerm(*t2)
    assert exponent_dominates(t1, t2) is dominates
    assert exponent_strictly_dominated(t1, t2) is strictly


def test_exact_decimals():
    assert D(7.41) == Fraction(741, 100)
    assert D("1e-6") == Fraction(1, 10**6)
    assert D(Fraction(1, 404)) == Fraction(1, 404)


def test_scaled_weight_threshold():
    weight = ScaledWeight(D("1.1"), D("0.9"), D("39.5"))
    assert weight.decay_limit == D("37.52")
    assert weight.threshold(D("37.5")) == 91
    assert weight.decay_floor(91) > D("37.5")
    assert weight.decay_floor(90) == D("37.5")
    assert weight.threshold(D("37.52")) is None
    assert weight.threshold(40) is None


def test_scaled_weight_power_coefficient():
    weight = ScaledWeight(D("0.05"), D("3.53"), D("36.4"))
    assert weight.power_coefficient(1.0) == pytest.approx(0.1)
    assert weight.threshold(D("36")) == 151
