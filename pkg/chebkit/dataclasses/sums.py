import math
from dataclasses import dataclass

from chebkit.exceptions import DomainError
from chebkit.private import errors


@dataclass(frozen=True)
class PowerSumInstance:
    """Finitely many complex numbers, stored with the largest modulus first."""

    zs: tuple
    epsilon: float

    def __post_init__(self):
        if not self.zs:
            raise DomainError(errors.empty_power_sum())

        if not self.epsilon > 0:
            raise DomainError(errors.must_be_positive("epsilon", self.epsilon))

        ordered = tuple(sorted((complex(z) for z in self.zs), key=abs, reverse=True))
        if ordered[0] == 0:
            raise DomainError(errors.zero_leading_term())

        object.__setattr__(self, "zs", ordered)

    @property
    def leader(self):
        return abs(self.zs[0])

    @property
    def M(self):
        return sum(abs(z) for z in self.zs) / self.leader

    @property
    def ratio(self):
        return self.epsilon / (48 + 5 * self.epsilon)

    @property
    def limit(self):
        """Largest m0 allowed, the floor of (12 + epsilon) * M."""
        return math.floor((12 + self.epsilon) * self.M)
