from enum import Enum
from typing import List, Optional, Tuple

from pydantic.v1 import validator

from .model import BaseModel


class LocalRingFamily(str, Enum):
    """How a descriptor is realized (and rendered). Closed forms never look at it."""

    INTEGERS = "integers"  # Z/p^k
    GALOIS = "galois"  # GF(q)
    TRUNCATED = "truncated"  # GF(q)[x]/x^t
    ABSTRACT = "abstract"  # local(order, m), only reachable in lax mode


_FAMILY_RANK = {family: rank for rank, family in enumerate(LocalRingFamily)}


class LocalRingSpec(BaseModel):
    """A finite local ring, reduced to what every closed form depends on:
    its order |R_i| and the order m_i of its maximal ideal.

    Build instances through ``uc_spectra.rings.validation.validate_local``; the
    derived fields (residue, prime, length) are filled in there.
    """

    order: int
    ideal_order: int
    residue: int
    prime: int
    length: Optional[int] = None
    family: LocalRingFamily = LocalRingFamily.ABSTRACT

    @property
    def descriptor(self) -> Tuple[int, int]:
        return (self.order, self.ideal_order)

    @property
    def unit_count(self) -> int:
        return self.order - self.ideal_order

    @property
    def unit_ratio(self) -> int:
        """|R_i^x| / m_i, which is always residue - 1."""
        return self.residue - 1

    @property
    def is_field(self) -> bool:
        return self.ideal_order == 1

    @property
    def is_realizable(self) -> bool:
        return self.length is not None

    def sort_key(self) -> Tuple[int, int, int]:
        return (self.residue, self.order, _FAMILY_RANK[self.family])

    def render(self) -> str:
        if self.family == LocalRingFamily.INTEGERS:
            return f"Z/{self.order}"
        if self.family == LocalRingFamily.GALOIS:
            return f"GF({self.order})"
        if self.family == LocalRingFamily.TRUNCATED:
            return f"GF({self.residue})[x]/x^{self.length}"
        return f"local({self.order},{self.ideal_order})"


class RingSpec(BaseModel):
    """A finite commutative ring R = R_1 x ... x R_s as a canonically ordered product
    of local descriptors: residues non-decreasing, ties broken by ring order."""

    factors: Tuple[LocalRingSpec, ...]

    @validator("factors")
    def factors_must_be_canonical(cls, factors):
        if len(factors) == 0:
            raise ValueError("a ring needs at least one local factor")
        keys = [factor.sort_key() for factor in factors]
        if keys != sorted(keys):
            raise ValueError("factors must be sorted by residue, then by order")
        return factors

    @property
    def s(self) -> int:
        return len(self.factors)

    @property
    def order(self) -> int:
        order = 1
        for factor in self.factors:
            order *= factor.order
        return order

    @property
    def unit_count(self) -> int:
        units = 1
        for factor in self.factors:
            units *= factor.unit_count
        return units

    @property
    def ideal_product(self) -> int:
        product = 1
        for factor in self.factors:
            product *= factor.ideal_order
        return product

    @property
    def residues(self) -> List[int]:
        return [factor.residue for factor in self.factors]

    @property
    def descriptors(self) -> List[Tuple[int, int]]:
        return [factor.descriptor for factor in self.factors]

    @property
    def residue_two_count(self) -> int:
        return sum(1 for factor in self.factors if factor.residue == 2)

    @property
    def is_local(self) -> bool:
        return self.s == 1

    @property
    def is_realizable(self) -> bool:
        return all(factor.is_realizable for factor in self.factors)

    def render(self) -> str:
        return " × ".join(factor.render() for factor in self.factors)
