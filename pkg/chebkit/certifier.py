"""
Certificates for the case analysis that turns the zero bounds into d_L ** 40.

Every case fixes a weight (ell, A, B) and shows that the weighted prime sum S is
positive for d_L large. The error terms all have the shape L**k * exp(c L) with
L = log d_L, so "o(lambda_1)" and "O(exp(-18 L))" are decided by comparing
(c, k) pairs, see :func:`exponent_dominates`. Absolute constants of the form
c, c_1, c_j are never numeric, checks are arranged so that they cancel.

Weight parameters are exact decimals (:class:`fractions.Fraction`), so
B - 2 ell A and the thresholds in L are exact.
"""

import math
from fractions import Fraction

import numpy as np

from chebkit import conf
from chebkit.dataclasses import (
    CaseCertificate,
    Check,
    ExponentTerm,
    ScaledWeight,
    Variant,
    WeightSpec,
)
from chebkit.exceptions import DomainError
from chebkit.private import errors
from chebkit.private.loggers import logger
from chebkit.private.utils import round_up
from chebkit.repulsion import (
    DH_TABLE,
    POWER_SUM_FACTOR,
    REAL_ZEROS_ROW,
    coeff_all_zeros,
    coeff_real_zeros,
    low_lying_bound,
    optimize_alpha,
    verify_dh_table,
)


def D(value):
    """Exact decimal, D(7.41) == Fraction(741, 100)."""
    if isinstance(value, Fraction):
        return value
    return Fraction(str(value))


# zero-free region: beta <= 1 - 0.0784 / L unless zeta_L has an exceptional zero
ZERO_FREE = 0.0784
# an exceptional zero pushes the others to lambda' >= 0.6546 log(1 / lambda_1)
REPULSION_NG = 0.6546
SMALL_LAMBDA_CONSTANT = 6.5279
SMALL_LAMBDA_POWER = 0.4597
QUADRATIC_CONSTANT = 2.4865
SMALL_LAMBDA_TARGET = 0.0097

STANDING_B = (2, 100)

NONEXCEPTIONAL = dict(ell=2, A=D("1.5"), B=D("7.41"))
SMALL = dict(ell=2, A=D("0.1"), B=D("2.63"))
VERY_SMALL = dict(ell=101, A=Fraction(1, 404), B=D("36.5"))
EXTREMELY_SMALL = ScaledWeight(D("1.1"), D("0.9"), D("39.5"))
TOWER = ScaledWeight(D("0.05"), D("3.53"), D("36.4"))
SMALL_DEGREE_VERY_SMALL = dict(ell=1000, A=D("1e-6"), B=D("24.1"))
SMALL_DEGREE_EXTREMELY_SMALL = ScaledWeight(D("0.1"), D("0.2"), D("24.1"))

# (T_j, C_j) of each exceptional ladder
EXTREMELY_SMALL_LADDER = tuple((T, C) for T, _, C in DH_TABLE[1:])
TOWER_LADDER = ((1, 35.8), (12.2, 40.3), (149, 50.4))
SMALL_DEGREE_LOG_T = 64.0
SMALL_DEGREE_C = 24.01

# regime -> (claimed exponent, cases whose B it takes the max of)
REGIMES = {
    "general": (40, ("nonexceptional", "small", "very-small", "extremely-small")),
    "tower": (D("36.5"), ("nonexceptional", "small", "very-small", "tower")),
    "small-degree": (D("24.1"), ("nonexceptional", "small", "small-degree")),
    "non-siegel": (D("7.5"), ("nonexceptional",)),
}

CASES = (
    "nonexceptional",
    "small",
    "very-small",
    "extremely-small",
    "tower",
    "small-degree",
    "non-siegel",
    "exponents",
    "all",
)


def exponent_dominates(t1: ExponentTerm, t2: ExponentTerm):
    """True when L**k1 exp(c1 L) = O(L**k2 exp(c2 L)) as L grows."""
    return t1.c < t2.c or (t1.c == t2.c and t1.k <= t2.k)


def exponent_strictly_dominated(t1: ExponentTerm, t2: ExponentTerm):
    """True when L**k1 exp(c1 L) = o(L**k2 exp(c2 L))."""
    return t1.c < t2.c or (t1.c == t2.c and t1.k < t2.k)


def _dominance(description, term, bound, strict=False):
    compare = exponent_strictly_dominated if strict else exponent_dominates
    if term.c != bound.c:
        margin = bound.c - term.c
    else:
        margin = bound.k - term.k
    return Check(
        description,
        float(term.c),
        float(bound.c),
        float(margin),
        compare(term, bound),
        "<<" if strict else "<=",
    )


def _standing(B):
    lo, hi = STANDING_B
    return [
        Check.greater("B >= {}".format(lo), B, lo),
        Check.less("B <= {}".format(hi), B, hi, strict=False),
    ]


def _first_range_check(floor: ExponentTerm, C1):
    """exp(R_1) = (c_1 / lambda_1)**(1 / C_1) must be o(exp(L / 4)).

    With lambda_1 >> L**k exp(c L) this is L**(-k / C_1) exp(-c L / C_1).
    """
    C1 = float(C1)
    term = ExponentTerm(-floor.k / C1, -floor.c / C1, "exp(R_1)")
    bound = ExponentTerm(0, 0.25, "exp(L / 4)")
    return _dominance("exp(R_1) = o(exp(L / 4))", term, bound, strict=True)


def _certificate(case_name, params, checks):
    certificate = CaseCertificate(case_name, params, tuple(checks))
    for check in certificate.failures:
        logger.warning(
            "%s: check failed: %s (%s %s %s)",
            case_name,
            check.description,
            check.lhs,
            check.relation,
            check.rhs,
        )
    if certificate.overall:
        logger.info(
            "%s certified, least margin %.3g", case_name, certificate.min_margin
        )
    return certificate


def _spec(ell, A, B):
    return WeightSpec(ell, float(A), float(B))


def certify_nonexceptional(
    ell=NONEXCEPTIONAL["ell"], A=NONEXCEPTIONAL["A"], B=NONEXCEPTIONAL["B"]
):
    """No exceptional zero: every zero has 1 - beta >= 0.0784 / L.

    S is positive as soon as e**(-(B - 2 ell A) 0.0784) times the low-lying zero
    bound stays below 1. The bound enters in its reported form, rounded up.
    """
    A, B = D(A), D(B)
    spec = _spec(ell, A, B)
    decay = float(B - 2 * ell * A)

    bound = low_lying_bound(ZERO_FREE, float(A), ell)
    reported = round_up(bound)
    value = math.exp(-decay * ZERO_FREE) * reported
    unrounded = math.exp(-decay * ZERO_FREE) * bound
    worst = max(
        math.exp(-decay * lam) * low_lying_bound(lam, float(A), ell)
        for lam in np.linspace(ZERO_FREE, 1, 200)
    )

    checks = [
        *_standing(B),
        Check.equal("B - 2 ell A = 1.41", B - 2 * ell * A, D("1.41")),
        Check.less(
            "low-lying bound at 0.0784 <= reported", bound, reported, strict=False
        ),
        Check.less("exp(-1.41 * 0.0784) * reported low-lying bound < 1", value, 1),
        Check.less("same chain with the unrounded bound < 1", unrounded, 1),
        Check.less("chain < 1 for every lambda in [0.0784, 1]", worst, 1),
    ]
    params = {
        "ell": ell,
        "A": float(A),
        "B": float(B),
        "decay": decay,
        "lambda": ZERO_FREE,
        "low_lying_bound": reported,
        "value": value,
    }
    logger.debug("nonexceptional %s: value %.6f", spec, value)
    return _certificate("nonexceptional", params, checks)


def small_lambda_bracket(lam, constant=SMALL_LAMBDA_CONSTANT, decay=2.23):
    """decay - constant * lam**0.4597 - 2.4865 lam, the coefficient of lambda_1 in S."""
    lam = np.asarray(lam, dtype=float)
    values = decay - constant * lam**SMALL_LAMBDA_POWER - QUADRATIC_CONSTANT * lam
    return values[()] if values.ndim == 0 else values


def admissible_eta(min_margin=conf.ETA_MARGIN, ell=SMALL["ell"], A=SMALL["A"]):
    """Largest eta on a 1e-6 grid keeping the inflated bracket at 0.0784 >= min_margin.

    The low-lying constant is taken unrounded, 2 phi / A + 1, plus eta.
    """
    base = low_lying_bound(0.0, float(A), ell)
    slack = float(small_lambda_bracket(ZERO_FREE, base)) - min_margin
    if slack <= 0:
        raise DomainError(errors.eta_out_of_range(0.0, ZERO_FREE))

    eta = min(slack / ZERO_FREE**SMALL_LAMBDA_POWER, ZERO_FREE - 1e-6)
    return math.floor(eta * 10**6) / 10**6


def certify_small_lambda(eta=None, ell=SMALL["ell"], A=SMALL["A"], B=SMALL["B"]):
    """Exceptional zero with eta <= lambda_1 < 0.0784.

    The other zeros are repelled to lambda' >= 0.6546 log(1 / lambda_1), which
    turns their contribution into 6.5279 lambda_1**1.4597 and leaves the bracket
    of :func:`small_lambda_bracket` times lambda_1.
    """
    if eta is None:
        eta = admissible_eta(ell=ell, A=A)
    if not 0 < eta < ZERO_FREE:
        raise DomainError(errors.eta_out_of_range(eta, ZERO_FREE))

    A, B = D(A), D(B)
    _spec(ell, A, B)
    decay = float(B - 2 * ell * A)

    limit = low_lying_bound(0.0, float(A), ell)
    bracket = small_lambda_bracket(ZERO_FREE, SMALL_LAMBDA_CONSTANT, decay)
    inflated = small_lambda_bracket(ZERO_FREE, limit + eta, decay)
    grid = small_lambda_bracket(
        np.linspace(1e-8, ZERO_FREE, 2000), SMALL_LAMBDA_CONSTANT, decay
    )

    checks = [
        *_standing(B),
        Check.equal("B - 2 ell A = 2.23", B - 2 * ell * A, D("2.23")),
        Check.less(
            "low-lying bound as lambda -> 0 <= 6.5279",
            limit,
            SMALL_LAMBDA_CONSTANT,
            strict=False,
        ),
        Check.greater(
            "(B - 2 ell A) * 0.6546 >= 1.4597",
            decay * REPULSION_NG,
            1 + SMALL_LAMBDA_POWER,
        ),
        Check.greater("bracket at 0.0784 >= 0.0097", bracket, SMALL_LAMBDA_TARGET),
        Check.greater(
            "bracket with eta-inflated constant >= {}".format(conf.ETA_MARGIN),
            inflated,
            conf.ETA_MARGIN,
        ),
        Check.less("bracket decreasing on (0, 0.0784]", np.diff(grid).max(), 0),
    ]
    params = {
        "ell": ell,
        "A": float(A),
        "B": float(B),
        "decay": decay,
        "eta": eta,
        "epsilon": 1e-6 * eta,
        "bracket": float(bracket),
    }
    return _certificate("small", params, checks)


def _fixed_error_terms(ell, decay):
    """Error terms of the low-lying zero lemma for constant ell and A.

    (2 / (A T* L))**(2 ell) is a constant times L**(-2 ell), T* drops out.
    """
    order = 2 * ell
    decay = float(decay)
    return [
        ExponentTerm(1 - order, 0.0, "L (2 / (A T* L))**(2 ell)"),
        ExponentTerm(2, -decay / 2, "(L**2 / A) exp(-(B - 2 ell A) L / 2)"),
        ExponentTerm(
            1 - order, -decay, "L (1 / (A L))**(2 ell) exp(-(B - 2 ell A) L)"
        ),
        ExponentTerm(
            1 - order,
            -1.5 * decay,
            "L (2 / (A L))**(2 ell) exp(-3 (B - 2 ell A) L / 2)",
        ),
    ]


def _scaled_error_terms(weight: ScaledWeight, target, log_t_star):
    """The same four terms with A = a / L, so A L = a and 2 ell ~ 2 r L."""
    log_a = math.log(float(weight.scale))
    target = float(target)
    return [
        ExponentTerm(
            1,
            weight.power_coefficient(math.log(2) - log_a - log_t_star),
            "L (2 / (A T* L))**(2 ell)",
        ),
        ExponentTerm(3, -target / 2, "(L**2 / A) exp(-(B - 2 ell A) L / 2)"),
        ExponentTerm(
            1,
            -target + weight.power_coefficient(-log_a),
            "L (1 / (A L))**(2 ell) exp(-(B - 2 ell A) L)",
        ),
        ExponentTerm(
            1,
            -1.5 * target + weight.power_coefficient(math.log(2) - log_a),
            "L (2 / (A L))**(2 ell) exp(-3 (B - 2 ell A) L / 2)",
        ),
    ]


def _threshold_checks(weight: ScaledWeight, target):
    L0 = weight.threshold(target)
    if L0 is None:
        check = Check.greater(
            "lim B - 2 ell A > {}".format(target),
            weight.decay_limit,
            target,
            strict=True,
        )
        return None, [check]

    previous = weight.decay_floor(L0 - 1) if L0 > 1 else target
    return L0, [
        Check.greater(
            "B - 2 ell A > {} for L >= {}".format(target, L0),
            weight.decay_floor(L0),
            target,
            strict=True,
        ),
        Check.less(
            "L0 = {} is the least such L".format(L0), previous, target, strict=False
        ),
    ]


def _ladder_checks(weight: ScaledWeight, target, ladder, floor, ladder_target):
    """Partial summation terms for j >= 2, relative to lambda_1.

    L (2 / (A T_{j-1} L))**(2 ell) lambda_1**(X / C_j) <= lambda_1 L**2 exp(c_j L)
    once lambda_1 >> L exp(floor.c L), where
    c_j = 2 r log(2 / (a T_{j-1})) - floor.c (1 - X / C_j).
    """
    a = float(weight.scale)
    checks = []
    for j in range(1, len(ladder)):
        T_prev = ladder[j - 1][0]
        C = ladder[j][1]
        c = weight.power_coefficient(math.log(2 / (a * T_prev)))
        c -= floor.c * (1 - float(target) / C)
        description = "ladder j={} (T={}, C={}) <= lambda_1 exp({} L)".format(
            j + 1, T_prev, C, ladder_target.c
        )
        term = ExponentTerm(2, c, "ladder j={}".format(j + 1))
        checks.append(_dominance(description, term, ladder_target))
    return checks


def _first_rung(target, C1, low_power):
    """L lambda_1**(X / C_1) = o(lambda_1) when lambda_1 < L**(-low_power)."""
    return Check.greater(
        "X / C_1 - 1/{} > 1".format(low_power),
        float(target) / C1 - 1 / low_power,
        1,
        strict=True,
    )


def _dh_row_check(T, alpha, C):
    K = coeff_all_zeros(alpha, T).K
    return Check.less(
        "24 K(alpha={}, T={}) < {}".format(alpha, T, C), POWER_SUM_FACTOR * K, C
    )


def _dh_optimum_check(T, C):
    bound = optimize_alpha(T)
    return Check.less(
        "24 K(alpha={:.4f}, T={}) < {}".format(bound.alpha, T, C),
        POWER_SUM_FACTOR * bound.K,
        C,
    )


def _real_zeros_check():
    alpha, C = REAL_ZEROS_ROW
    K = coeff_real_zeros(alpha).K
    return Check.less(
        "24 K_real(alpha={}) < {}".format(alpha, C), POWER_SUM_FACTOR * K, C
    )


def _scaled_params(weight: ScaledWeight, target, L0, log_t_star, ladder, floor):
    return {
        "ell": "ceil({} L)".format(weight.rate),
        "A": "{} / L".format(weight.scale),
        "B": float(weight.B),
        "decay_target": float(target),
        "L0": L0,
        "log_T_star": log_t_star,
        "T_j": [T for T, _ in ladder],
        "C_j": [C for _, C in ladder],
        "R_j": "log(c_j / lambda_1) / C_j",
        "lambda_floor": "L exp({} L)".format(floor.c),
    }


def certify_very_small_lambda():
    """Exceptional zero with L**-200 <= lambda_1 < eta.

    One rung of partial summation at T_1 = 1, C_1 = 35.8. The term
    min((2/A)**(2 ell), L) exp(-36 R_1) is a constant times lambda_1**(36/35.8).
    """
    ell, A, B = VERY_SMALL["ell"], VERY_SMALL["A"], VERY_SMALL["B"]
    _spec(ell, A, B)
    decay = B - 2 * ell * A
    T1, alpha, C1 = DH_TABLE[0]
    floor = ExponentTerm(-200, 0.0, "lambda_1 >= L**-200")

    checks = [
        *_standing(B),
        Check.equal("B - 2 ell A = 36", decay, 36),
        _dh_row_check(T1, alpha, C1),
        Check.greater("36 / 35.8 > 1", float(decay) / C1, 1, strict=True),
    ]
    for term in _fixed_error_terms(ell, decay):
        checks.append(
            _dominance("{} = o(lambda_1)".format(term.label), term, floor, strict=True)
        )
    checks.append(_first_range_check(floor, C1))

    params = {
        "ell": ell,
        "A": "1/404",
        "B": float(B),
        "decay": float(decay),
        "T_star": T1,
        "T_j": [T1],
        "C_j": [C1],
        "R_j": "log(c_1 / lambda_1) / 35.8",
        "lambda_floor": "L**-200",
    }
    return _certificate("very-small", params, checks)


def certify_extremely_small_lambda():
    """Exceptional zero with lambda_1 < L**-200.

    ell = ceil(1.1 L), A = 0.9 / L, B = 39.5, T* = 12646 and the ten-rung ladder
    from T_1 = 3.5. The real-zeros repulsion gives lambda_1 >> L exp(-16.6 L).
    """
    weight = EXTREMELY_SMALL
    target = D("37.5")
    ladder = EXTREMELY_SMALL_LADDER
    log_t_star = math.log(ladder[-1][0])
    floor = ExponentTerm(1, -REAL_ZEROS_ROW[1], "lambda_1 >> L exp(-16.6 L)")
    error_bound = ExponentTerm(0, -18.0, "exp(-18 L)")
    ladder_target = ExponentTerm(0, -0.2, "exp(-0.2 L)")
    C1 = ladder[0][1]

    L0, checks = _threshold_checks(weight, target)
    checks[:0] = _standing(weight.B)

    for term in _scaled_error_terms(weight, target, log_t_star):
        checks.append(
            _dominance("{} = O(exp(-18 L))".format(term.label), term, error_bound)
        )
    checks += [
        _dominance(
            "exp(-(B - 2 ell A)(L - lambda_1)) = O(exp(-18 L))",
            ExponentTerm(0, -float(target)),
            error_bound,
        ),
        _dominance("exp(-18 L) = o(lambda_1)", error_bound, floor, strict=True),
    ]
    checks += _ladder_checks(weight, target, ladder, floor, ladder_target)
    checks += [
        Check.greater("37.5 / 37.0 > 1.01", float(target) / C1, 1.01, strict=True),
        Check.greater(
            "(37.5 / 37.0 - 1.005) * 200 >= 1", (float(target) / C1 - 1.005) * 200, 1
        ),
        _first_rung(target, C1, 200),
    ]
    checks += [_dh_row_check(T, alpha, C) for T, alpha, C in DH_TABLE[1:]]
    checks.append(_real_zeros_check())

    params = _scaled_params(weight, target, L0, log_t_star, ladder, floor)
    return _certificate("extremely-small", params, checks)


def certify_tower():
    """Remark case: the exponent 36.5 for fields that are towers of small degree.

    ell = ceil(0.05 L), A = 3.53 / L, B = 36.4, T* = 149, three rungs.
    """
    weight = TOWER
    target = D("36.0")
    ladder = TOWER_LADDER
    log_t_star = math.log(ladder[-1][0])
    floor = ExponentTerm(1, -0.5, "lambda_1 >> L exp(-0.5 L)")
    ladder_target = ExponentTerm(0, 0.0, "lambda_1")

    L0, checks = _threshold_checks(weight, target)
    checks[:0] = _standing(weight.B)

    for term in _scaled_error_terms(weight, target, log_t_star):
        checks.append(
            _dominance("{} = o(lambda_1)".format(term.label), term, floor, strict=True)
        )
    checks += _ladder_checks(weight, target, ladder, floor, ladder_target)
    checks.append(_first_rung(target, ladder[0][1], 200))
    checks.append(_dh_row_check(*DH_TABLE[0]))
    checks += [_dh_optimum_check(T, C) for T, C in ladder[1:]]
    checks.append(
        Check.less("B <= 36.5", weight.B, REGIMES["tower"][0], strict=False)
    )

    params = _scaled_params(weight, target, L0, log_t_star, ladder, floor)
    return _certificate("tower", params, checks)


def certify_small_degree():
    """Remark case n_L = o(log d_L), where the gamma factor is negligible.

    C = 24.01 and 12.01 come from the no-archimedean coefficients. Both
    exceptional ranges use a single rung with T_1 = T* = e**64.
    """
    rows = verify_dh_table(Variant.NO_ARCH)
    checks = [
        Check.less(
            "24 K_{}(alpha={:.2f}) < {}".format(
                row.bound.variant.value, row.bound.alpha, row.bound.C
            ),
            POWER_SUM_FACTOR * row.bound.K,
            row.bound.C,
        )
        for row in rows
    ]

    # L**-1000 <= lambda_1 < eta
    ell, A, B = (SMALL_DEGREE_VERY_SMALL[key] for key in ("ell", "A", "B"))
    _spec(ell, A, B)
    decay = B - 2 * ell * A
    very_small_floor = ExponentTerm(-1000, 0.0, "lambda_1 >= L**-1000")
    checks += [
        *_standing(B),
        Check.equal("B - 2 ell A = 24.098", decay, D("24.098")),
        Check.greater(
            "(B - 2 ell A) / 24.01 > 1", float(decay) / SMALL_DEGREE_C, 1, strict=True
        ),
        _first_range_check(very_small_floor, SMALL_DEGREE_C),
    ]
    for term in _fixed_error_terms(ell, decay):
        description = "{} = o(lambda_1)".format(term.label)
        checks.append(_dominance(description, term, very_small_floor, strict=True))

    # lambda_1 < L**-1000
    weight = SMALL_DEGREE_EXTREMELY_SMALL
    target = D("24.05")
    floor = ExponentTerm(1, -12.01, "lambda_1 >> L exp(-12.01 L)")
    L0, threshold_checks = _threshold_checks(weight, target)
    checks += [*_standing(weight.B), *threshold_checks]
    for term in _scaled_error_terms(weight, target, SMALL_DEGREE_LOG_T):
        description = "{} = o(lambda_1)".format(term.label)
        checks.append(_dominance(description, term, floor, strict=True))
    checks.append(_first_rung(target, SMALL_DEGREE_C, 1000))
    checks.append(
        Check.less("B <= 24.1", weight.B, REGIMES["small-degree"][0], strict=False)
    )

    ladder = [(math.exp(SMALL_DEGREE_LOG_T), SMALL_DEGREE_C)]
    params = {
        "very_small": {
            "ell": ell,
            "A": float(A),
            "B": float(B),
            "decay": float(decay),
            "lambda_floor": "L**-1000",
        },
        "extremely_small": _scaled_params(
            weight, target, L0, SMALL_DEGREE_LOG_T, ladder, floor
        ),
        "alpha": [row.bound.alpha for row in rows],
    }
    return _certificate("small-degree", params, checks)


def certify_non_siegel():
    """Without a real zero only the non-exceptional case is left, giving d_L ** 7.5."""
    nonexceptional = certify_nonexceptional()
    exponent = REGIMES["non-siegel"][0]
    checks = [
        Check.less("B = 7.41 < 7.5", NONEXCEPTIONAL["B"], exponent),
        Check.equal(
            "non-exceptional certificate holds", nonexceptional.overall, True
        ),
    ]
    return _certificate("non-siegel", {"B": float(NONEXCEPTIONAL["B"])}, checks)


def certify_variants():
    return [certify_tower(), certify_small_degree(), certify_non_siegel()]


_CASE_B = {
    "nonexceptional": NONEXCEPTIONAL["B"],
    "small": SMALL["B"],
    "very-small": VERY_SMALL["B"],
    "extremely-small": EXTREMELY_SMALL.B,
    "tower": TOWER.B,
    "small-degree": max(SMALL_DEGREE_VERY_SMALL["B"], SMALL_DEGREE_EXTREMELY_SMALL.B),
}


def certify_exponents():
    """The exponent of a regime is the largest B among the cases it runs through."""
    checks = []
    params = {}
    for regime, (claimed, cases) in REGIMES.items():
        exponent = max(_CASE_B[case] for case in cases)
        params[regime] = float(exponent)
        description = "{}: max B <= {}".format(regime, claimed)
        checks.append(Check.less(description, exponent, claimed, strict=False))
    return _certificate("exponents", params, checks)


def certify_all():
    return [
        certify_nonexceptional(),
        certify_small_lambda(),
        certify_very_small_lambda(),
        certify_extremely_small_lambda(),
        *certify_variants(),
        certify_exponents(),
    ]


_RUNNERS = {
    "nonexceptional": certify_nonexceptional,
    "small": certify_small_lambda,
    "very-small": certify_very_small_lambda,
    "extremely-small": certify_extremely_small_lambda,
    "tower": certify_tower,
    "small-degree": certify_small_degree,
    "non-siegel": certify_non_siegel,
    "exponents": certify_exponents,
}


def certify(case):
    """Certificates of one named case as a list, ``all`` runs every case."""
    if case == "all":
        return certify_all()
    if case not in _RUNNERS:
        raise DomainError(errors.unknown_case(case, CASES))
    return [_RUNNERS[case]()]
