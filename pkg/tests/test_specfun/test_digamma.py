import math

import hypothesis.strategies as st
import numpy as np
import pytest
from hypothesis import example, given, settings
from scipy import special

from chebkit.exceptions import DomainError
from chebkit.specfun import (
    EULER_GAMMA,
    STIRLING_REMAINDER,
    delta,
    digamma,
    stirling_remainder,
    trigamma,
)


def test_stirling_remainder_below_tolerance():
    assert STIRLING_REMAINDER < 1e-12
    assert stirling_remainder(20.0) < STIRLING_REMAINDER


def test_digamma_matches_scipy_on_real_axis():
    x = np.linspace(0.01, 100, 997)
    np.testing.assert_allclose(digamma(x), special.digamma(x), rtol=1e-11, atol=1e-11)


def test_digamma_matches_scipy_off_real_axis(rng):
    z = rng.uniform(0.5, 20, 10**4) + 1j * rng.uniform(-13000, 13000, 10**4)
    np.testing.assert_allclose(digamma(z), special.digamma(z), rtol=1e-10, atol=1e-10)


def test_trigamma_matches_scipy():
    x = np.linspace(0.05, 60, 600)
    np.testing.assert_allclose(trigamma(x), special.polygamma(1, x), rtol=1e-11)


def test_scalars_and_shapes():
    assert np.ndim(digamma(2.0)) == 0
    assert np.ndim(trigamma(2.0)) == 0
    assert digamma(np.ones((3, 4))).shape == (3, 4)
    assert isinstance(float(delta(2, 0)), float)


@pytest.mark.parametrize(
    "x, expected",
    [
        (2, -EULER_GAMMA),
        (4, 1 - EULER_GAMMA),
        (3, 2 - EULER_GAMMA - 2 * math.log(2)),
    ],
)
def test_delta_on_real_axis(x, expected):
    assert delta(x, 0) == pytest.approx(expected, abs=1e-12)


def test_digamma_against_series_oracle():
    k = np.arange(10**6, dtype=float)
    for z in (0.3, 1.7, 5.25):
        partial = np.sum(1 / (k + 1) - 1 / (k + z))
        # the remaining terms sum to (z - 1) / N up to O(N**-2)
        tail = (z - 1) / 10**6
        assert digamma(z) == pytest.approx(-EULER_GAMMA + partial + tail, abs=1e-10)


@given(st.floats(0.01, 200), st.floats(-15000, 15000))
@settings(max_examples=500, derandomize=True)
@example(2.0, 0.0)
def test_delta_conjugate_symmetry(x, y):
    assert delta(x, y) == pytest.approx(delta(x, -y), abs=1e-12)


@given(st.floats(0.01, 200), st.floats(-15000, 15000))
@settings(max_examples=500, derandomize=True)
def test_delta_recurrence(x, y):
    # Re psi(z + 1) - Re psi(z) = Re(1 / z) at z = (x + iy) / 2
    step = 2 * x / (x * x + y * y)
    assert delta(x + 2, y) - delta(x, y) == pytest.approx(step, rel=1e-9, abs=1e-10)


@given(st.floats(0.01, 1000))
@settings(max_examples=500, derandomize=True)
def test_trigamma_recurrence(x):
    assert trigamma(x) - trigamma(x + 1) == pytest.approx(1 / x**2, rel=1e-9)


def test_delta_identities_sweep(rng):
    x = rng.uniform(0.01, 200, 10**4)
    y = rng.uniform(-15000, 15000, 10**4)
    np.testing.assert_allclose(delta(x, y), delta(x, -y), rtol=0, atol=1e-12)
    step = 2 * x / (x * x + y * y)
    np.testing.assert_allclose(
        delta(x + 2, y) - delta(x, y), step, rtol=1e-9, atol=1e-10
    )


def test_trigamma_recurrence_sweep(rng):
    x = rng.uniform(0.01, 1000, 10**4)
    np.testing.assert_allclose(trigamma(x) - trigamma(x + 1), x**-2.0, rtol=1e-9)


def test_monotone_on_real_axis():
    x = np.linspace(0.05, 50, 2000)
    assert np.all(np.diff(digamma(x)) > 0)
    assert np.all(np.diff(trigamma(x)) < 0)


@pytest.mark.parametrize(
    "call",
    [
        lambda: digamma(0.0),
        lambda: digamma(-1.5),
        lambda: digamma(np.array([1.0, -0.5])),
        lambda: trigamma(0),
        lambda: delta(0, 1),
    ],
)
def test_pole_region_rejected(call):
    with pytest.raises(DomainError):
        call()
