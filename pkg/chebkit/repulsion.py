"""
Deuring-Heilbronn repulsion constants.

If zeta_L has an exceptional zero beta_1 = 1 - lambda_1 / log d_L, every other zero
rho' = beta' + i gamma' with |gamma'| <= T satisfies

    1 - beta' >> log(c / lambda_1) / (C log d_L).

The power sum argument gives C = 24 K where K log d_L bounds M / alpha; K comes
from the gamma factor and depends on alpha, which is optimised per height T.
"""

import math
from typing import NamedTuple

import numpy as np

from chebkit import conf
from chebkit.dataclasses import FieldSignature, RepulsionBound, TableRow, Variant
from chebkit.dataclasses.fields import LOG_22, LOG_60
from chebkit.exceptions import DomainError
from chebkit.private import errors
from chebkit.private.loggers import logger
from chebkit.private.utils import round_up
from chebkit.specfun import g1, g2, w1, w2

PHI = (1 - 1 / math.sqrt(5)) / 2
POWER_SUM_FACTOR = 24

# (T, alpha, C)
DH_TABLE = (
    (1, 3.07, 35.8),
    (3.5, 4.06, 37.0),
    (8.7, 5.68, 39.3),
    (22, 7.73, 42.5),
    (54, 9.43, 46.1),
    (134, 10.7, 50.0),
    (332, 11.7, 53.8),
    (825, 12.7, 57.6),
    (2048, 13.7, 61.4),
    (5089, 14.7, 65.2),
    (12646, 15.7, 69.0),
)

# (T, C) used by the tower ladder, alpha is whatever minimises K
TOWER_ROWS = ((12.2, 40.3), (149, 50.4))

REAL_ZEROS_ROW = (5.8, 16.6)

# variant -> (C, decimals of C)
NO_ARCH_ROWS = {
    Variant.NO_ARCH: (24.01, 2),
    Variant.NO_ARCH_REAL: (12.01, 2),
}


class Coefficient(NamedTuple):
    K: float
    correction: float


def _finite_part(alpha):
    return 2 / alpha**2 + 2 / (alpha + alpha**2)


def _all_zeros(alpha, T):
    lead = (alpha + 0.5) ** 2 / alpha
    first = (g1(alpha, T) + 2 * alpha * w1(alpha)) / (alpha * LOG_60)
    second = (g2(alpha, T) + alpha * w2(alpha)) / (alpha * LOG_22)
    archimedean = np.maximum(np.maximum(first, second), 0)
    return lead * (1 / alpha + archimedean), lead * _finite_part(alpha)


def _real_zeros(alpha, T=None):
    lead = (alpha + 1) ** 2 / (2 * alpha)
    first = g1(alpha, 0) / (alpha * LOG_60)
    second = g2(alpha, 0) / (alpha * LOG_22)
    archimedean = np.maximum(np.maximum(first, second), 0)
    return lead * (1 / alpha + archimedean), lead * _finite_part(alpha)


def _no_arch(alpha, T=None):
    lead = (alpha + 0.5) ** 2 / alpha
    return lead / alpha, lead * _finite_part(alpha)


def _no_arch_real(alpha, T=None):
    lead = (alpha + 1) ** 2 / (2 * alpha)
    return lead / alpha, lead * _finite_part(alpha)


_COEFFICIENTS = {
    Variant.ALL_ZEROS: _all_zeros,
    Variant.REAL_ZEROS: _real_zeros,
    Variant.NO_ARCH: _no_arch,
    Variant.NO_ARCH_REAL: _no_arch_real,
}


def _check_alpha(alpha):
    if not alpha >= conf.ALPHA_FLOOR:
        raise DomainError(errors.alpha_below_floor(alpha, conf.ALPHA_FLOOR))


def _check_height(T):
    if not T >= 1:
        raise DomainError(errors.height_below_floor(T, 1))


def _coefficient(variant, alpha, T):
    K, correction = _COEFFICIENTS[variant](np.float64(alpha), T)
    return Coefficient(float(K), float(correction))


def coeff_all_zeros(alpha, T):
    _check_alpha(alpha)
    _check_height(T)
    return _coefficient(Variant.ALL_ZEROS, alpha, T)


def coeff_real_zeros(alpha):
    _check_alpha(alpha)
    return _coefficient(Variant.REAL_ZEROS, alpha, None)


def coeff_no_archimedean(alpha, variant=Variant.NO_ARCH):
    """The coefficient once the r1, r2 terms are negligible, n_L = o(log d_L).

    ``variant`` may be given as all-zeros / real-zeros as well.
    """
    _check_alpha(alpha)
    variant = Variant.parse(variant)
    if variant.real_zeros:
        return _coefficient(Variant.NO_ARCH_REAL, alpha, None).K
    return _coefficient(Variant.NO_ARCH, alpha, None).K


def no_archimedean_alpha(target, variant=Variant.NO_ARCH):
    """Least alpha with coeff_no_archimedean(alpha, variant) <= target.

    ``target`` must lie above the limit as alpha grows, 1 or 1/2.
    """
    variant = Variant.parse(variant)
    if variant.real_zeros:
        # (1 + 1/alpha)**2 / 2 <= target
        return 1 / (math.sqrt(2 * target) - 1)
    # (1 + 1/(2 alpha))**2 <= target
    return 1 / (2 * (math.sqrt(target) - 1))


def certified_constant(K, decimals=conf.C_DECIMALS):
    """Smallest C on the decimal grid with 24 K < C."""
    C = round_up(POWER_SUM_FACTOR * K, decimals)
    if C <= POWER_SUM_FACTOR * K:
        C = round(C + 10.0**-decimals, decimals)
    return C


def golden_section(f, a, b, tol=conf.ALPHA_REFINE_TOL):
    """Bracket [c, d] of width <= tol around the minimum of a unimodal f on [a, b]."""
    inv_phi = (math.sqrt(5) - 1) / 2
    inv_phi_square = (3 - math.sqrt(5)) / 2

    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= tol:
        return a, b

    steps = int(math.ceil(math.log(tol / h) / math.log(inv_phi)))
    c, d = a + inv_phi_square * h, a + inv_phi * h
    yc, yd = f(c), f(d)

    for _ in range(steps - 1):
        h = inv_phi * h
        if yc < yd:
            b, d, yd = d, c, yc
            c = a + inv_phi_square * h
            yc = f(c)
        else:
            a, c, yc = c, d, yd
            d = a + inv_phi * h
            yd = f(d)

    return (a, d) if yc < yd else (c, b)


def optimize_alpha(
    T,
    variant=Variant.ALL_ZEROS,
    step=conf.ALPHA_GRID_STEP,
    ceiling=conf.ALPHA_CEILING,
    tol=conf.ALPHA_REFINE_TOL,
    decimals=None,
):
    """Minimise K over alpha in [1, ceiling] and certify C from the minimum.

    A grid of spacing ``step`` locates the minimum (first one on ties), golden
    section search refines it inside the neighbouring grid cells. The refined
    alpha is only kept when it does not increase K. ``decimals`` defaults to the
    precision the tables quote for ``variant``.
    """
    variant = Variant.parse(variant)
    if variant is Variant.ALL_ZEROS:
        _check_height(T)
    if not step > 0:
        raise DomainError(errors.must_be_positive("step", step))
    if not ceiling > conf.ALPHA_FLOOR:
        raise DomainError(errors.alpha_below_floor(ceiling, conf.ALPHA_FLOOR))
    if decimals is None:
        decimals = NO_ARCH_ROWS.get(variant, (None, conf.C_DECIMALS))[1]
    coefficient = _COEFFICIENTS[variant]

    count = int(round((ceiling - conf.ALPHA_FLOOR) / step)) + 1
    grid = conf.ALPHA_FLOOR + step * np.arange(count)
    values, _ = coefficient(grid, T)
    best = int(np.argmin(values))
    logger.debug(
        "alpha grid of %s points, best %s at %s", count, values[best], grid[best]
    )

    lo, hi = grid[max(best - 1, 0)], grid[min(best + 1, count - 1)]
    c, d = golden_section(
        lambda a: float(coefficient(np.float64(a), T)[0]), lo, hi, tol
    )
    alpha = (c + d) / 2
    K, correction = coefficient(np.float64(alpha), T)
    if K > values[best]:
        alpha = float(grid[best])
        K, correction = coefficient(np.float64(alpha), T)

    return RepulsionBound(
        T=None if variant.real_zeros else float(T),
        alpha=float(alpha),
        K=float(K),
        C=certified_constant(float(K), decimals),
        variant=variant,
        correction=float(correction),
    )


def _log_row(row):
    if row.passed:
        logger.info(
            "T=%s alpha=%s: 24K=%.6f < C=%s",
            row.bound.T,
            row.bound.alpha,
            POWER_SUM_FACTOR * row.bound.K,
            row.bound.C,
        )
    else:
        logger.warning(
            "repulsion row fails: T=%s alpha=%s 24K=%.6f C=%s",
            row.bound.T,
            row.bound.alpha,
            POWER_SUM_FACTOR * row.bound.K,
            row.bound.C,
        )
    return row


def verify_dh_table(variant=Variant.ALL_ZEROS, **options):
    """Check every tabled constant of ``variant``, 24 K < C for each row.

    all-zeros also covers the tower heights 12.2 and 149, no-arch covers both of
    its flavours. ``options`` are passed through to :func:`optimize_alpha`.
    """
    variant = Variant.parse(variant)
    rows = []

    if variant is Variant.ALL_ZEROS:
        for T, alpha, C in DH_TABLE:
            K, correction = coeff_all_zeros(alpha, T)
            bound = RepulsionBound(float(T), alpha, K, C, variant, correction)
            rows.append(TableRow(bound, optimize_alpha(T, variant, **options)))

        for T, C in TOWER_ROWS:
            optimum = optimize_alpha(T, variant, **options)
            bound = RepulsionBound(
                float(T), optimum.alpha, optimum.K, C, variant, optimum.correction
            )
            rows.append(TableRow(bound, optimum, tabled=False))

    elif variant is Variant.REAL_ZEROS:
        alpha, C = REAL_ZEROS_ROW
        K, correction = coeff_real_zeros(alpha)
        bound = RepulsionBound(None, alpha, K, C, variant, correction)
        rows.append(TableRow(bound, optimize_alpha(1, variant, **options)))

    else:
        for flavour, (C, _) in NO_ARCH_ROWS.items():
            optimum = optimize_alpha(1, flavour, **options)
            bound = RepulsionBound(
                None, optimum.alpha, optimum.K, C, flavour, optimum.correction
            )
            rows.append(TableRow(bound, optimum, tabled=False))

    return [_log_row(row) for row in rows]


def negligible_from(bound: RepulsionBound, rel=1e-3):
    """log d_L beyond which the correction is below rel * K * log d_L."""
    return bound.correction / (rel * bound.K)


def m_over_alpha_bound(alpha, t, signature: FieldSignature, gap=0.5):
    """The zero-sum bound for M / alpha of one field, before Odlyzko's inequality.

    :param t: |gamma'|, the height of the repelled zero
    :param gap: 1 - beta', at most 1/2
    """
    _check_alpha(alpha)
    lead = (alpha + gap) ** 2 / alpha
    real_part = (g1(alpha, t) / alpha + 2 * w1(alpha)) * signature.r1
    complex_part = (g2(alpha, t) / alpha + w2(alpha)) * 2 * signature.r2
    inner = signature.logd / alpha + real_part + complex_part + _finite_part(alpha)
    return float(lead * inner)


def m_over_alpha_bound_real(alpha, signature: FieldSignature, gap=1.0):
    """Real-zeros analogue of :func:`m_over_alpha_bound`, gap = 1 - beta' < 1."""
    _check_alpha(alpha)
    lead = (alpha + gap) ** 2 / (2 * alpha)
    real_part = g1(alpha, 0) / alpha * signature.r1
    complex_part = g2(alpha, 0) / alpha * 2 * signature.r2
    inner = signature.logd / alpha + real_part + complex_part + _finite_part(alpha)
    return float(lead * inner)


def _box_ratio(v):
    """(1 - e**-v) / v for v >= 0."""
    if v < conf.SMALL_ARGUMENT:
        return 1 - v / 2 + v * v / 6 - v**3 / 24
    return -math.expm1(-v) / v


def _second_order_ratio(u):
    """(u - 1 + e**-u) / (u**2 / 2) for u >= 0."""
    if u < conf.SMALL_ARGUMENT:
        return 1 - u / 3 + u * u / 12 - u**3 / 60
    return (u + math.expm1(-u)) / (u * u / 2)


def low_lying_bound(lam, A, ell, eta=0.0):
    """Bound for the weighted count of zeros with real part within lam / log d_L of 1.

    ((1 - e**(-A lam)) / (A lam))**(2 (ell - 1)) * {phi (1 - e**(-2 A lam)) / (A**2 lam)
    + (2 A lam - 1 + e**(-2 A lam)) / (2 A**2 lam**2) + eta}, which tends to
    2 phi / A + 1 + eta as lam -> 0.
    """
    if not 0 <= lam <= conf.LAMBDA_MAX:
        raise DomainError(errors.lambda_out_of_range(lam, conf.LAMBDA_MAX))
    if not A > 0:
        raise DomainError(errors.must_be_positive("A", A))
    if not isinstance(ell, int) or ell < 1:
        raise DomainError(errors.must_be_positive_integer("ell", ell))
    if eta < 0:
        raise DomainError(errors.must_be_non_negative("eta", eta))

    if lam < conf.LIMIT_LAMBDA:
        return 2 * PHI / A + 1 + eta

    v = A * lam
    u = 2 * v
    prefactor = _box_ratio(v) ** (2 * (ell - 1))
    first = PHI * (2 / A) * _box_ratio(u)
    second = _second_order_ratio(u)
    return prefactor * (first + second + eta)
