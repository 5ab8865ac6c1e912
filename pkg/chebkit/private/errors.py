"""
all error messages are implemented as functions returning strings, raising code
picks the exception class. private files are subject to interface change
"""


def must_be_positive(name, got):
    return "{} must be positive, got {}".format(name, got)


def must_be_non_negative(name, got):
    return "{} must be >= 0, got {}".format(name, got)


def must_be_positive_integer(name, got):
    return "{} must be a positive integer, got {}".format(name, got)


def pole_region_not_supported(got):
    return "digamma is only evaluated for Re(z) > 0, got x = {}".format(got)


def alpha_below_floor(got, floor):
    return "alpha must be >= {}, got {}".format(floor, got)


def height_below_floor(got, floor):
    return "T must be >= {}, got {}".format(floor, got)


def negative_height(got):
    return "t must be >= 0, got {}".format(got)


def lambda_out_of_range(got, upper):
    return "lambda must lie in [0, {}], got {}".format(upper, got)


def eta_out_of_range(got, upper):
    return "eta must lie in (0, {}), got {}".format(upper, got)


def weight_support_empty(ell, a, b):
    return "weight needs B > 2*ell*A, got ell={}, A={}, B={}".format(ell, a, b)


def radius_out_of_range(got):
    return "kernel radius must lie in [0, 1], got {}".format(got)


def empty_power_sum():
    return "a power sum needs at least one term"


def zero_leading_term():
    return "the largest term of a power sum must be nonzero"


def power_sum_violation(instance, limit):
    return "no witness m0 <= {} for {!r}, the power sum inequality is violated".format(
        limit,
        instance,
    )


def signature_degree_mismatch(r1, r2, n):
    return "degree {} does not equal r1 + 2*r2 = {} + 2*{}".format(n, r1, r2)


def not_squarefree(got):
    return "d must be a squarefree integer other than 0 and 1, got {}".format(got)


def bad_quadratic_class(got):
    return "quadratic classes are +1 (split) and -1 (inert), got {}".format(got)


def not_odd_prime(got):
    return "conductor must be an odd prime, got {}".format(got)


def residue_not_coprime(a, q):
    return "residue must satisfy 1 <= a < q and gcd(a, q) = 1, got a={}, q={}".format(
        a,
        q,
    )


def zero_modulus():
    return "the Kronecker symbol (a|0) is not used, n must be nonzero"


def scan_limit_exceeded(field, label, cap):
    return "no prime <= {} realizes class {} of {}".format(cap, label, field)


def max_disc_too_small(got):
    return "survey needs max_disc >= 5, got {}".format(got)


def unknown_variant(got, choices):
    return "unknown variant {}, choose one of {}".format(got, ", ".join(choices))


def unknown_case(got, choices):
    return "unknown case {}, choose one of {}".format(got, ", ".join(choices))


def polars_missing():
    return "CSV export needs polars, install chebkit[csv]"
