import math

import hypothesis.strategies as st
import numpy as np
import pytest
from hypothesis import given, settings

from chebkit.exceptions import DomainError
from chebkit.specfun import EULER_GAMMA, LOG_PI, delta, g1, g2, w1, w2

PSI_HALF_INTEGER = 2 - EULER_GAMMA - 2 * math.log(2)


def test_g1_at_zero_height():
    assert g1(1, 0) == pytest.approx(-EULER_GAMMA - LOG_PI, abs=1e-12)
    assert g1(4.5, 0) == pytest.approx(delta(5.5, 0) - LOG_PI, abs=1e-12)


def test_g2_at_zero_height():
    expected = (-EULER_GAMMA + PSI_HALF_INTEGER) / 2 - LOG_PI
    assert g2(1, 0) == pytest.approx(expected, abs=1e-12)
    collapsed = (delta(6.8, 0) + delta(7.8, 0)) / 2 - LOG_PI
    assert g2(5.8, 0) == pytest.approx(collapsed, abs=1e-12)


@pytest.mark.parametrize(
    "function, alpha, t, expected",
    [
        (g1, 3.07, 1, -0.676416),
        (g2, 3.07, 1, -0.5435277),
        (g2, 5.8, 0, 0.0037179),
    ],
)
def test_frozen_values(function, alpha, t, expected):
    assert function(alpha, t) == pytest.approx(expected, abs=1e-6)


def test_series_closed_forms():
    assert w2(1) == pytest.approx(math.pi**2 / 6 - 1, abs=1e-12)
    assert w1(1) == pytest.approx(math.pi**2 / 24, abs=1e-12)
    assert w2(3.07) == pytest.approx(0.27832799, abs=1e-8)


@pytest.mark.parametrize("alpha", [1, 2.5, 3.07, 5.8, 15.7])
def test_series_against_partial_sums(alpha):
    k = np.arange(10**6, dtype=float)
    N = float(10**6)
    # tail by the integral of the decreasing summand plus half its first term
    first = alpha + 1 + 2 * N
    direct_w1 = np.sum((alpha + 1 + 2 * k) ** -2.0) + 1 / (2 * first) + first**-2 / 2
    second = alpha + 1 + N
    direct_w2 = np.sum((alpha + 1 + k) ** -2.0) + 1 / second + second**-2 / 2
    assert w1(alpha) == pytest.approx(direct_w1, abs=1e-8)
    assert w2(alpha) == pytest.approx(direct_w2, abs=1e-8)


@given(st.floats(1, 1000))
@settings(max_examples=300, derandomize=True)
def test_w2_recurrence(alpha):
    assert w2(alpha) - w2(alpha + 1) == pytest.approx(1 / (alpha + 1) ** 2, rel=1e-9)


def test_w_recurrences_sweep(rng):
    alpha = rng.uniform(1, 1000, 10**4)
    first_term = (alpha + 1) ** -2.0
    np.testing.assert_allclose(w2(alpha) - w2(alpha + 1), first_term, rtol=1e-9)
    np.testing.assert_allclose(w1(alpha) - w1(alpha + 2), first_term, rtol=1e-9)


@pytest.mark.parametrize("alpha", np.arange(1, 16.5, 0.5))
def test_increasing_in_height(alpha):
    t = np.linspace(0, 12646, 4001)
    assert np.all(np.diff(g1(alpha, t)) >= -1e-13)
    assert np.all(np.diff(g2(alpha, t)) >= -1e-13)


@pytest.mark.parametrize(
    "call",
    [
        lambda: g1(0.5, 0),
        lambda: g2(0.99, 3),
        lambda: g1(1, -1),
        lambda: w1(0.5),
        lambda: w2(0),
    ],
)
def test_out_of_range(call):
    with pytest.raises(DomainError):
        call()
