import math
from dataclasses import dataclass
from dataclasses import field as dataclass_field
from fractions import Fraction
from typing import Union


@dataclass(frozen=True)
class ExponentTerm:
    """The size L**k * exp(c * L) of an error term, L = log d_L."""

    k: Union[int, Fraction]
    c: float
    label: str = ""

    @property
    def key(self):
        return self.c, self.k


@dataclass(frozen=True)
class Check:
    """A single certified inequality.

    ``margin`` is oriented so that a passing check has a positive margin
    (zero is allowed only for non-strict relations).
    """

    description: str
    lhs: float
    rhs: float
    margin: float
    passed: bool
    relation: str = "<"

    @classmethod
    def less(cls, description, lhs, rhs, strict=True):
        lhs, rhs = float(lhs), float(rhs)
        passed = lhs < rhs if strict else lhs <= rhs
        return cls(description, lhs, rhs, rhs - lhs, passed, "<" if strict else "<=")

    @classmethod
    def greater(cls, description, lhs, rhs, strict=False):
        lhs, rhs = float(lhs), float(rhs)
        passed = lhs > rhs if strict else lhs >= rhs
        return cls(description, lhs, rhs, lhs - rhs, passed, ">" if strict else ">=")

    @classmethod
    def equal(cls, description, lhs, rhs):
        passed = lhs == rhs
        return cls(description, float(lhs), float(rhs), 0.0, passed, "==")


@dataclass(frozen=True)
class CaseCertificate:
    case_name: str
    params: dict = dataclass_field(default_factory=dict)
    checks: tuple = ()

    @property
    def overall(self):
        return bool(self.checks) and all(check.passed for check in self.checks)

    @property
    def failures(self):
        return [check for check in self.checks if not check.passed]

    @property
    def min_margin(self):
        return min(check.margin for check in self.checks)


@dataclass(frozen=True)
class ScaledWeight:
    """Weight parameters growing with L = log d_L: ell = ceil(rate L), A = scale / L.

    Parameters are exact decimals so thresholds in L come out exact.
    """

    rate: Fraction
    scale: Fraction
    B: Fraction

    @property
    def decay_limit(self):
        """Limit of B - 2 ell A as L grows."""
        return self.B - 2 * self.rate * self.scale

    def decay_floor(self, L):
        """Lower bound for B - 2 ell A at L, from ell <= rate * L + 1."""
        return self.B - 2 * (self.rate * L + 1) * self.scale / L

    def threshold(self, target):
        """Least integer L0 with decay_floor(L) > target for all L >= L0, else None."""
        slack = self.decay_limit - target
        if slack <= 0:
            return None
        return math.floor(2 * self.scale / slack) + 1

    def power_coefficient(self, log_base):
        """Coefficient of L in the exponent of base ** (2 ell)."""
        return float(2 * self.rate) * log_base
