import math
from decimal import ROUND_CEILING, Decimal

from chebkit import conf


def round_up(x, decimals=conf.REPORT_DECIMALS):
    """Smallest multiple of 10**-decimals that is >= x.

    Goes through the shortest repr of ``x`` so that 1.48825 reports as 1.4883
    and 35.8 stays 35.8.
    """
    quantum = Decimal(1).scaleb(-decimals)
    return float(Decimal(repr(float(x))).quantize(quantum, rounding=ROUND_CEILING))


def significant(x, digits=conf.SIGNIFICANT_DIGITS):
    if not math.isfinite(x):
        return x
    return float("{:.{}g}".format(x, digits))
