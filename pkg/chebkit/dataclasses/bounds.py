from dataclasses import dataclass
from enum import Enum
from typing import Optional

from chebkit.exceptions import DomainError
from chebkit.private import errors
from chebkit.private.utils import round_up


class Variant(str, Enum):
    ALL_ZEROS = "all-zeros"
    REAL_ZEROS = "real-zeros"
    NO_ARCH = "no-arch"
    NO_ARCH_REAL = "no-arch-real"

    @property
    def archimedean(self):
        return self in (Variant.ALL_ZEROS, Variant.REAL_ZEROS)

    @property
    def real_zeros(self):
        return self in (Variant.REAL_ZEROS, Variant.NO_ARCH_REAL)

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(value)
        except ValueError:
            raise DomainError(
                errors.unknown_variant(value, [variant.value for variant in cls])
            ) from None


@dataclass(frozen=True)
class WeightSpec:
    """The weight f = 2*ell fold box convolution supported in [B - 2*ell*A, B].

    :param ell: half the number of convolved boxes
    :param A: box width, each box has height 1 / A
    :param B: right end of the support
    """

    ell: int
    A: float
    B: float

    def __post_init__(self):
        if not isinstance(self.ell, int) or self.ell < 1:
            raise DomainError(errors.must_be_positive_integer("ell", self.ell))

        if not self.A > 0:
            raise DomainError(errors.must_be_positive("A", self.A))

        if not self.B > 2 * self.ell * self.A:
            raise DomainError(errors.weight_support_empty(self.ell, self.A, self.B))

    @property
    def order(self):
        return 2 * self.ell

    @property
    def decay(self):
        """B - 2*ell*A, left end of the support and decay rate of F."""
        return self.B - 2 * self.ell * self.A

    @property
    def support(self):
        return self.decay, self.B


@dataclass(frozen=True)
class RepulsionBound:
    """One row of a Deuring-Heilbronn table.

    ``K`` is the coefficient of log d_L in the bound for M / alpha, ``correction``
    the part that does not grow with log d_L. The row certifies ``C`` when
    24 * K < C. ``T`` is None for the real-zeros variants.
    """

    T: Optional[float]
    alpha: float
    K: float
    C: float
    variant: Variant
    correction: float

    @property
    def reported_K(self):
        """K rounded up at the reported decimal, the form the tables quote."""
        return round_up(self.K)

    @property
    def margin(self):
        return self.C - 24 * self.K

    @property
    def passed(self):
        return 24 * self.K < self.C


@dataclass(frozen=True)
class TableRow:
    """A tabled repulsion constant next to the best alpha found for the same height.

    ``bound`` holds the alpha the table prescribes (or the optimum when the table
    only gives T and C, in which case ``tabled`` is False).
    """

    bound: RepulsionBound
    optimum: RepulsionBound
    tabled: bool = True

    @property
    def passed(self):
        return self.bound.passed

    @property
    def margin(self):
        return self.bound.margin

    @property
    def gap(self):
        return self.bound.K - self.optimum.K

    @property
    def alpha_shift(self):
        return self.optimum.alpha - self.bound.alpha
