from math import prod
from typing import List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from uc_spectra import UcSpectraError
from uc_spectra.models.ring import RingSpec
from uc_spectra.oracle.abstract_factory import AbstractLocalRingFactory
from uc_spectra.oracle.default_factory import DefaultLocalRingFactory
from uc_spectra.oracle.local_rings import BaseLocalRing
from uc_spectra.rings.validation import NotRealizable
from uc_spectra.settings import get_settings


class GraphTooLarge(UcSpectraError, ValueError):
    pass


class ConcreteRing:
    """A product of concrete local rings. Element x is the mixed-radix integer whose
    digits (last factor fastest) are the coordinates of x in each factor."""

    def __init__(self, spec: RingSpec, factors: Sequence[BaseLocalRing]):
        self.spec = spec
        self.factors = list(factors)
        self.sizes = tuple(factor.size for factor in self.factors)
        self.size = prod(self.sizes)

    def __repr__(self) -> str:
        return f"ConcreteRing({self.describe()})"

    def describe(self) -> str:
        return " × ".join(factor.describe() for factor in self.factors)

    def encode(self, coordinates: Sequence[int]) -> int:
        return int(np.ravel_multi_index(tuple(coordinates), self.sizes))

    def decode(self, element: int) -> Tuple[int, ...]:
        return tuple(int(c) for c in np.unravel_index(element, self.sizes))

    def coordinates(self) -> List[np.ndarray]:
        """Per-factor coordinate arrays of every element 0..size-1."""
        return list(np.unravel_index(np.arange(self.size), self.sizes))

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return self.encode([1] * len(self.factors))

    def _componentwise(self, operation: str, a: int, b: int) -> int:
        return self.encode(
            [
                getattr(factor, operation)(x, y)
                for factor, x, y in zip(self.factors, self.decode(a), self.decode(b))
            ]
        )

    def add(self, a: int, b: int) -> int:
        return self._componentwise("add", a, b)

    def sub(self, a: int, b: int) -> int:
        return self._componentwise("sub", a, b)

    def mul(self, a: int, b: int) -> int:
        return self._componentwise("mul", a, b)

    def is_unit(self, element: int) -> bool:
        return all(
            factor.is_unit(x) for factor, x in zip(self.factors, self.decode(element))
        )

    def unit_mask(self) -> np.ndarray:
        mask = np.ones(self.size, dtype=bool)
        for factor, coordinate in zip(self.factors, self.coordinates()):
            mask &= factor.unit_mask()[coordinate]
        return mask

    def unit_count(self) -> int:
        return int(self.unit_mask().sum())


def realize_ring(
    spec: RingSpec,
    factory: Optional[AbstractLocalRingFactory] = None,
    max_order: Optional[int] = None,
) -> ConcreteRing:
    if not spec.is_realizable:
        raise NotRealizable(f"{spec.render()} has a factor no finite local ring realizes")
    max_order = max_order if max_order is not None else get_settings().max_ring_order
    if spec.order > max_order:
        raise GraphTooLarge(
            f"{spec.render()} has {spec.order} elements, over the limit of {max_order}"
        )
    factory = factory or DefaultLocalRingFactory()
    ring = ConcreteRing(spec, [factory.create_local_ring(factor) for factor in spec.factors])
    logger.debug("realized {} as {}", spec.render(), ring.describe())
    return ring
