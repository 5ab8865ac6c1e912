import math
from dataclasses import dataclass
from dataclasses import field as dataclass_field
from enum import Enum
from typing import Optional

from chebkit.exceptions import DomainError
from chebkit.private import errors

LOG_60 = math.log(60)
LOG_22 = math.log(22)


@dataclass(frozen=True)
class FieldSignature:
    """Archimedean data of a number field as it enters the zero-sum bounds.

    :param r1: number of real embeddings
    :param r2: number of pairs of complex embeddings
    :param n: degree, always r1 + 2 * r2
    :param logd: log of the absolute discriminant
    """

    r1: int
    r2: int
    n: int
    logd: float

    def __post_init__(self):
        if self.r1 < 0 or self.r2 < 0 or self.n != self.r1 + 2 * self.r2:
            message = errors.signature_degree_mismatch(self.r1, self.r2, self.n)
            raise DomainError(message)

        if not self.logd > 0:
            raise DomainError(errors.must_be_positive("logd", self.logd))

    @classmethod
    def from_embeddings(cls, r1, r2, logd):
        return cls(r1=r1, r2=r2, n=r1 + 2 * r2, logd=logd)

    def odlyzko_slack(self):
        return self.logd - (LOG_60 * self.r1 + LOG_22 * 2 * self.r2)

    def odlyzko_admissible(self):
        return self.odlyzko_slack() >= 0


class FieldKind(str, Enum):
    QUADRATIC = "quadratic"
    CYCLOTOMIC = "cyclotomic"


@dataclass(frozen=True)
class AbelianField:
    """An abelian extension of Q whose Artin symbol is a residue computation.

    ``param`` is d for Q(sqrt(d)) and q for Q(zeta_q). ``disc`` is the signed
    discriminant, ``dL`` its absolute value. Build instances through
    :func:`chebkit.chebsearch.quadratic_field` and
    :func:`chebkit.chebsearch.cyclotomic_field`, which validate ``param``.
    """

    kind: FieldKind
    param: int
    disc: int
    classes: tuple

    @property
    def dL(self):
        return abs(self.disc)

    @property
    def degree(self):
        if self.kind is FieldKind.QUADRATIC:
            return 2
        return self.param - 1

    @property
    def signature(self):
        if self.kind is FieldKind.QUADRATIC and self.param > 0:
            return FieldSignature.from_embeddings(2, 0, math.log(self.dL))
        return FieldSignature.from_embeddings(0, self.degree // 2, math.log(self.dL))

    def __str__(self):
        if self.kind is FieldKind.QUADRATIC:
            return "Q(sqrt({}))".format(self.param)
        return "Q(zeta_{})".format(self.param)


@dataclass(frozen=True)
class SearchRecord:
    field: AbelianField
    class_label: int
    least_prime: int
    exponent_realized: float
    bound_pass: bool


@dataclass
class Survey:
    records: list
    failures: list = dataclass_field(default_factory=list)

    @property
    def max_exponent(self) -> Optional[float]:
        if not self.records:
            return None
        return max(record.exponent_realized for record in self.records)

    @property
    def overall_pass(self):
        return not self.failures and all(record.bound_pass for record in self.records)
