import math

import numpy as np

from chebkit import conf
from chebkit.dataclasses import PowerSumInstance
from chebkit.exceptions import DomainError, TheoremViolation
from chebkit.private import errors
from chebkit.private.loggers import logger


def kernel_p(r, theta, J):
    """P(r, theta) = sum_{j=1..J} (1 - j/(J+1)) r**j cos(j theta).

    :param r: radius, or array of radii, in [0, 1]
    :param theta: angle or array of angles, broadcast against ``r``
    :param J: number of harmonics
    """
    if not isinstance(J, (int, np.integer)) or J < 1:
        raise DomainError(errors.must_be_positive_integer("J", J))

    r, theta = np.broadcast_arrays(
        np.asarray(r, dtype=float), np.asarray(theta, dtype=float)
    )
    if np.any((r < 0) | (r > 1)):
        worst = r.min() if r.min() < 0 else r.max()
        raise DomainError(errors.radius_out_of_range(worst))

    j = np.arange(1, J + 1)
    terms = (1 - j / (J + 1)) * r[..., None] ** j * np.cos(j * theta[..., None])
    total = terms.sum(axis=-1)
    return total[()] if total.ndim == 0 else total


def power_sum_witness(inst: PowerSumInstance):
    """Least m0 <= (12 + eps) M with Re sum z_n**m0 >= eps / (48 + 5 eps) |z_1|**m0.

    Powers are taken of z_n / |z_1| so that nothing underflows, the returned
    value is rescaled back to Re sum z_n**m0.
    """
    scaled = np.asarray(inst.zs, dtype=complex) / inst.leader
    powers = scaled.copy()

    for m in range(1, inst.limit + 1):
        value = powers.sum().real
        if value >= inst.ratio:
            return m, float(value) * inst.leader**m

        powers *= scaled

    logger.warning("power sum witness not found within m <= %s", inst.limit)
    raise TheoremViolation(errors.power_sum_violation(inst, inst.limit), instance=inst)


def random_instance(rng, epsilon, max_terms=50):
    """|z_1| = 1, the other moduli uniform in [0, 1], phases uniform in [0, 2 pi)."""
    n = int(rng.integers(1, max_terms + 1))
    moduli = np.concatenate(([1.0], rng.uniform(0, 1, n - 1)))
    phases = rng.uniform(0, 2 * math.pi, n)
    return PowerSumInstance(tuple(moduli * np.exp(1j * phases)), epsilon)


def run_trials(trials, seed=conf.DEFAULT_SEED, epsilon=1.0, max_terms=50):
    """Search a witness for ``trials`` random instances.

    Violations are collected rather than raised so a sweep always finishes.
    """
    if not isinstance(trials, int) or trials < 1:
        raise DomainError(errors.must_be_positive_integer("trials", trials))
    if not isinstance(max_terms, int) or max_terms < 1:
        raise DomainError(errors.must_be_positive_integer("max_terms", max_terms))

    rng = np.random.default_rng(seed)
    largest_m0 = 0
    violations = []

    for _ in range(trials):
        inst = random_instance(rng, epsilon, max_terms)
        try:
            m0, _ = power_sum_witness(inst)
        except TheoremViolation as exc:
            violations.append(exc.instance)
            continue
        largest_m0 = max(largest_m0, m0)

    logger.info("power sum sweep: %s trials, largest m0 %s", trials, largest_m0)
    return {
        "trials": trials,
        "seed": seed,
        "epsilon": epsilon,
        "largest_m0": largest_m0,
        "violations": len(violations),
        "passed": not violations,
    }
