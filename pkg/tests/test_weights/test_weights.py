import math

import numpy as np
import pytest
from scipy.interpolate import BSpline

from chebkit.dataclasses import WeightSpec
from chebkit.exceptions import DomainError
from chebkit.weights import (
    box_transform,
    calcbound_check,
    cardinal_bspline,
    laplace_bound,
    laplace_by_quadrature,
    laplace_f,
    weight_checks,
    weight_eval,
    weight_mass,
)

SPECS = [(1, 0.5, 2), (2, 1.5, 7.41), (2, 0.1, 2.63), (4, 0.3, 5), (8, 0.2, 4)]


@pytest.mark.parametrize("n, atol", [(2, 1e-14), (4, 1e-13), (8, 1e-12), (16, 1e-9)])
def test_cardinal_bspline_matches_scipy(n, atol):
    u = np.linspace(-1, n + 1, 1201)
    oracle = BSpline.basis_element(np.arange(n + 1), extrapolate=False)(u)
    oracle = np.nan_to_num(oracle, nan=0.0)
    np.testing.assert_allclose(cardinal_bspline(u, n), oracle, atol=atol)


@pytest.mark.parametrize("spec", SPECS, indirect=True)
def test_support_and_height(spec):
    lo, hi = spec.support
    assert weight_eval(spec, hi + 1) == 0
    assert weight_eval(spec, lo - 1e-9) == 0
    t = np.linspace(lo, hi, 5001)
    values = weight_eval(spec, t)
    assert values.min() >= 0
    assert values.max() <= 1 / spec.A


@pytest.mark.parametrize("spec", SPECS, indirect=True)
def test_weight_is_symmetric(spec):
    s = np.linspace(0, 2 * spec.ell * spec.A, 101)
    np.testing.assert_allclose(
        weight_eval(spec, spec.decay + s), weight_eval(spec, spec.B - s), atol=1e-9
    )


@pytest.mark.parametrize("spec", SPECS, indirect=True)
def test_unit_mass(spec):
    assert weight_mass(spec) == pytest.approx(1, abs=1e-8)
    assert laplace_f(spec, 0) == 1


@pytest.mark.parametrize("spec", SPECS, indirect=True)
def test_laplace_against_quadrature(spec, rng):
    for _ in range(20):
        z = complex(rng.uniform(0, 30), rng.uniform(-40, 40))
        closed = laplace_f(spec, z)
        assert abs(closed - laplace_by_quadrature(spec, z)) <= 1e-8 * max(
            1, abs(closed)
        )


def _laplace_by_gauss(spec, z, nodes=96):
    # f is a polynomial between consecutive knots, so Gauss-Legendre per piece
    x, w = np.polynomial.legendre.leggauss(nodes)
    total = np.zeros_like(z)
    for j in range(spec.order):
        lo = spec.decay + j * spec.A
        t = lo + spec.A * (x + 1) / 2
        f = weight_eval(spec, t) * w * spec.A / 2
        total += np.exp(-np.outer(z, t)) @ f
    return total


@pytest.mark.parametrize("spec", SPECS, indirect=True)
def test_laplace_against_piecewise_gauss(spec, rng):
    z = rng.uniform(0, 30, 10**4) + 1j * rng.uniform(-40, 40, 10**4)
    closed = laplace_f(spec, z)
    error = np.abs(closed - _laplace_by_gauss(spec, z))
    assert np.all(error <= 1e-8 * np.maximum(1, np.abs(closed)))


@pytest.mark.parametrize("spec", SPECS, indirect=True)
def test_laplace_conjugate_symmetry(spec, rng):
    z = rng.uniform(-5, 50, 10**4) + 1j * rng.uniform(-1e3, 1e3, 10**4)
    np.testing.assert_allclose(
        laplace_f(spec, np.conj(z)), np.conj(laplace_f(spec, z)), rtol=1e-12
    )
    assert laplace_f(spec, 3.5).imag == 0


def test_laplace_large_order_has_no_overflow():
    L = 100
    spec = WeightSpec(math.ceil(1.1 * L), 0.9 / L, 39.5)
    for z in (5.0, 5 + 300j, 1e-9 + 1e4j):
        value = laplace_f(spec, z)
        assert np.isfinite(value)
        assert abs(value) <= math.exp(-spec.decay * z.real) * (1 + 1e-12)


@pytest.mark.parametrize("spec", SPECS, indirect=True)
def test_decay_bound(spec, rng):
    sigma = rng.uniform(-3, 1 - 1e-3, 10**4)
    L = rng.uniform(1, 200, 10**4)
    s = sigma + 1j * rng.uniform(-1e3, 1e3, 10**4)
    z = (1 - s) * L
    transform = np.abs(laplace_f(spec, z))
    for alpha in (0, 1, spec.order):
        assert np.all(transform <= laplace_bound(spec, z, alpha) * (1 + 1e-12))


def test_box_transform_series_branch():
    assert box_transform(0) == 1
    w = np.array([1e-6, -3e-5, 5e-5, 2e-4])
    np.testing.assert_allclose(box_transform(w).real, -np.expm1(-w) / w, rtol=1e-15)
    assert np.all(box_transform(w).imag == 0)


def test_calcbound_examples():
    assert calcbound_check(0.7, 0)
    assert calcbound_check(0.5, 100)


def test_calcbound_sweep(rng):
    x = rng.uniform(1e-9, 50, 10**5)
    y = rng.uniform(-1e4, 1e4, 10**5)
    assert calcbound_check(x, y).all()


def test_calcbound_rejects_left_half_plane():
    with pytest.raises(DomainError):
        calcbound_check(0, 1)


@pytest.mark.parametrize("spec", SPECS[:4], indirect=True)
def test_weight_checks_pass(spec):
    checks = weight_checks(spec)
    assert [check.description for check in checks if not check.passed] == []


def test_weight_checks_are_seeded():
    spec = WeightSpec(2, 1.5, 7.41)
    assert weight_checks(spec, seed=3) == weight_checks(spec, seed=3)


@pytest.mark.parametrize(
    "ell, A, B",
    [(0, 1, 5), (1.5, 1, 5), (1, 0, 5), (1, -1, 5), (2, 1, 4), (2, 1.5, 6)],
)
def test_invalid_spec(ell, A, B):
    with pytest.raises(DomainError):
        WeightSpec(ell, A, B)
