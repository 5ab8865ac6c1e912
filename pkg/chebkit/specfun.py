"""
Digamma based quantities of the gamma factor of a Dedekind zeta function.

psi and psi' are evaluated by lifting the argument with the recurrences

    psi(z) = psi(z + 1) - 1/z,        psi'(z) = psi'(z + 1) + 1/z**2

until Re(z) >= RECURRENCE_FLOOR and then summing the Stirling series with the
Bernoulli numbers B_2 .. B_14. For |arg z| < pi/2 the truncation error is at most
sec(arg z / 2)**18 <= 2**9 times the first omitted term, see STIRLING_REMAINDER.

Everything accepts numpy arrays and broadcasts, scalars come back as numpy scalars.
"""

import math

import numpy as np

from chebkit import conf
from chebkit.exceptions import DomainError
from chebkit.private import errors

LOG_PI = math.log(math.pi)
EULER_GAMMA = 0.57721566490153286061

# B_2, B_4, ..., B_14
BERNOULLI = (1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6)
B_16 = -3617 / 510


def stirling_remainder(floor=conf.RECURRENCE_FLOOR):
    """Bound on the truncation error of both series once Re(z) >= floor."""
    sector = 2.0**9
    digamma_tail = abs(B_16) / (16 * floor**16)
    trigamma_tail = abs(B_16) / floor**17
    return sector * max(digamma_tail, trigamma_tail)


STIRLING_REMAINDER = stirling_remainder()


def _lift(z, floor, power):
    """Shift z to Re(z) >= floor, also returning the sum of z**-power over the steps."""
    z = np.array(z, copy=True, ndmin=1)
    acc = np.zeros_like(z)

    while True:
        low = z.real < floor
        if not low.any():
            return z, acc

        acc[low] += z[low] ** -power
        z[low] += 1


def _as_result(values, like):
    values = values.reshape(np.shape(like))
    return values[()] if values.ndim == 0 else values


def digamma(z, floor=conf.RECURRENCE_FLOOR):
    z = np.asarray(z)
    dtype = complex if np.iscomplexobj(z) else float
    z = z.astype(dtype)

    if np.any(z.real <= 0):
        raise DomainError(errors.pole_region_not_supported(np.min(z.real)))

    lifted, acc = _lift(z, floor, 1)
    w2 = lifted**-2
    series = np.zeros_like(lifted)
    for k in range(len(BERNOULLI), 0, -1):
        series = (series + BERNOULLI[k - 1] / (2 * k)) * w2

    return _as_result(np.log(lifted) - 0.5 / lifted - series - acc, z)


def trigamma(x, floor=conf.RECURRENCE_FLOOR):
    x = np.asarray(x, dtype=float)

    if np.any(x <= 0):
        raise DomainError(errors.pole_region_not_supported(np.min(x)))

    lifted, acc = _lift(x, floor, 2)
    inv = 1 / lifted
    w2 = inv * inv
    series = np.zeros_like(lifted)
    for k in range(len(BERNOULLI), 0, -1):
        series = (series + BERNOULLI[k - 1]) * w2

    return _as_result(inv + 0.5 * w2 + inv * series + acc, x)


def delta(x, y):
    """Re psi((x + iy) / 2) for x > 0."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise DomainError(errors.pole_region_not_supported(np.min(x)))

    z = (x + 1j * np.asarray(y, dtype=float)) / 2
    return digamma(z).real


def _check_alpha(alpha):
    alpha = np.asarray(alpha, dtype=float)
    if np.any(alpha < conf.ALPHA_FLOOR):
        raise DomainError(errors.alpha_below_floor(np.min(alpha), conf.ALPHA_FLOOR))
    return alpha


def _check_height(t):
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        raise DomainError(errors.negative_height(np.min(t)))
    return t


def g1(alpha, t):
    alpha, t = _check_alpha(alpha), _check_height(t)
    return (delta(alpha + 1, 0) + delta(alpha + 1, t)) / 2 - LOG_PI


def g2(alpha, t):
    alpha, t = _check_alpha(alpha), _check_height(t)
    total = (
        delta(alpha + 1, 0)
        + delta(alpha + 2, 0)
        + delta(alpha + 1, t)
        + delta(alpha + 2, t)
    )
    return total / 4 - LOG_PI


def w1(alpha):
    """sum over k >= 0 of (alpha + 1 + 2k)**-2."""
    return trigamma((_check_alpha(alpha) + 1) / 2) / 4


def w2(alpha):
    """sum over k >= 0 of (alpha + 1 + k)**-2."""
    return trigamma(_check_alpha(alpha) + 1)
