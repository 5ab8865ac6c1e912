"""
The compactly supported weight f and its Laplace transform.

f is the 2*ell fold convolution of the box of height 1/A on [-A/2, A/2], moved so
that its support is [B - 2*ell*A, B]. Up to scaling this is the cardinal B-spline
M_n of order n = 2*ell, which is evaluated with the truncated power formula

    M_n(u) = 1/(n-1)! * sum_k (-1)**k * C(n, k) * (u - k)_+ ** (n-1)

after folding u onto [0, n/2] (M_n is symmetric about n/2). The alternating sum
cancels badly for large n, values are only trusted for ell <= 16.
"""

import math

import numpy as np
from scipy.integrate import quad

from chebkit import conf
from chebkit.dataclasses import Check, WeightSpec
from chebkit.exceptions import DomainError
from chebkit.private import errors
from chebkit.private.loggers import logger


def cardinal_bspline(u, n):
    u = np.asarray(u, dtype=float)
    folded = np.where(u > n / 2, n - u, u)
    k = np.arange(n + 1)
    signs = np.array([(-1) ** i * math.comb(n, i) for i in k], dtype=float)
    powers = np.maximum(folded[..., None] - k, 0.0) ** (n - 1)
    values = (signs * powers).sum(axis=-1) / math.factorial(n - 1)
    values = np.where((u > 0) & (u < n), values, 0.0)
    return values[()] if values.ndim == 0 else values


def weight_eval(spec: WeightSpec, t):
    u = (np.asarray(t, dtype=float) - spec.decay) / spec.A
    return cardinal_bspline(u, spec.order) / spec.A


def box_transform(w, small=conf.SMALL_ARGUMENT):
    """(1 - e**-w) / w, with the removable singularity at 0 summed as a series."""
    w = np.asarray(w, dtype=complex)
    near = np.abs(w) < small
    safe = np.where(near, 1.0, w)
    exact = -np.expm1(-safe) / safe
    series = 1 - w / 2 + w**2 / 6 - w**3 / 24 + w**4 / 120
    values = np.where(near, series, exact)
    return values[()] if values.ndim == 0 else values


def laplace_f(spec: WeightSpec, z):
    """F(z) = e**(-(B - 2 ell A) z) * ((1 - e**(-A z)) / (A z)) ** (2 ell).

    Evaluated as exp(2 ell * log q - (B - 2 ell A) z), exact for the integer power
    and free of intermediate overflow for large ell.
    """
    z = np.asarray(z, dtype=complex)
    q = box_transform(spec.A * z)
    with np.errstate(divide="ignore"):
        values = np.exp(spec.order * np.log(q) - spec.decay * z)
    return values[()] if np.ndim(values) == 0 else values


def laplace_bound(spec: WeightSpec, z, alpha):
    """e**(-(B - 2 ell A) Re z) * (2 / (A |z|)) ** alpha.

    Valid for Re z > 0 and 0 <= alpha <= 2 ell.
    """
    z = np.asarray(z, dtype=complex)
    return np.exp(-spec.decay * z.real) * (2 / (spec.A * np.abs(z))) ** alpha


def calcbound_check(x, y):
    """|(1 - e**-z) / z|**2 <= ((1 - e**-x) / x)**2 at z = x + iy.

    |1 - e**-z|**2 is written as (1 - e**-x)**2 + 4 e**-x sin(y/2)**2 so that
    nothing cancels for small x or y.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if np.any(x <= 0):
        raise DomainError(errors.must_be_positive("x", np.min(x)))

    numerator = np.expm1(-x) ** 2 + 4 * np.exp(-x) * np.sin(y / 2) ** 2
    lhs = numerator / (x * x + y * y)
    rhs = (np.expm1(-x) / x) ** 2
    holds = lhs <= rhs * (1 + 1e-12)
    return bool(holds) if holds.ndim == 0 else holds


def _knots(spec):
    return spec.decay + spec.A * np.arange(1, spec.order)


def weight_mass(spec: WeightSpec):
    lo, hi = spec.support
    value, _ = quad(
        lambda t: weight_eval(spec, t), lo, hi, points=_knots(spec), limit=200
    )
    return value


def laplace_by_quadrature(spec: WeightSpec, z):
    """integral of f(t) e**(-z t) dt, real and imaginary parts separately."""
    z = complex(z)
    lo, hi = spec.support
    options = dict(points=_knots(spec), limit=400, epsabs=1e-13, epsrel=1e-12)

    def real_part(t):
        return weight_eval(spec, t) * math.exp(-z.real * t) * math.cos(z.imag * t)

    def imag_part(t):
        return -weight_eval(spec, t) * math.exp(-z.real * t) * math.sin(z.imag * t)

    real = quad(real_part, lo, hi, **options)[0]
    imag = quad(imag_part, lo, hi, **options)[0]
    return complex(real, imag)


def weight_checks(spec: WeightSpec, seed=conf.DEFAULT_SEED, samples=20):
    """Numerical checks of the weight properties for one spec, returned as Checks."""
    rng = np.random.default_rng(seed)
    lo, hi = spec.support
    grid = np.linspace(lo - spec.A, hi + spec.A, 4001)
    values = weight_eval(spec, grid)
    outside = values[(grid < lo) | (grid > hi)]
    mass = weight_mass(spec)
    at_zero = laplace_f(spec, 0)

    checks = [
        Check.less("max f <= 1/A", values.max(), 1 / spec.A, strict=False),
        Check.greater("min f >= 0", values.min(), 0.0),
        Check.less("f vanishes off the support", abs(outside).max(), 0, strict=False),
        Check.less("|integral f - 1| <= 1e-8", abs(mass - 1), 1e-8, strict=False),
        Check.less("|F(0) - 1| <= 1e-15", abs(at_zero - 1), 1e-15, strict=False),
    ]

    worst_quadrature = 0.0
    worst_conjugate = 0.0
    worst_decay = -np.inf
    for _ in range(samples):
        radius = rng.uniform(0, 50)
        angle = rng.uniform(-math.pi / 2, math.pi / 2)
        z = radius * complex(math.cos(angle), math.sin(angle))
        closed = laplace_f(spec, z)
        scale = max(1.0, abs(closed))
        quadrature = laplace_by_quadrature(spec, z)
        conjugate = laplace_f(spec, z.conjugate())
        worst_quadrature = max(worst_quadrature, abs(closed - quadrature) / scale)
        mirror = abs(conjugate - closed.conjugate()) / scale
        worst_conjugate = max(worst_conjugate, mirror)

        w = complex(rng.uniform(1e-3, 20), rng.uniform(-200, 200))
        for alpha in (0, 1, spec.order):
            ratio = abs(laplace_f(spec, w)) / laplace_bound(spec, w, alpha)
            worst_decay = max(worst_decay, float(ratio))

    checks += [
        Check.less(
            "Laplace closed form vs quadrature <= 1e-8",
            worst_quadrature,
            1e-8,
            strict=False,
        ),
        Check.less("F(conj z) = conj F(z)", worst_conjugate, 1e-12, strict=False),
        Check.less("|F(w)| / decay bound <= 1", worst_decay, 1 + 1e-12, strict=False),
    ]

    failing = sum(not check.passed for check in checks)
    logger.info("weight checks for %s: %s failing", spec, failing)
    return checks
