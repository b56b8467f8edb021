"""Concrete finite local rings. Elements are the integers 0..order-1; every ring
exposes scalar arithmetic plus whole-ring subtraction and unit tables for numpy."""

from abc import ABC, abstractmethod
from typing import List, Optional, Sequence

import numpy as np

from uc_spectra.models.ring import LocalRingFamily, LocalRingSpec
from uc_spectra.oracle.fields import Poly, irreducible_polynomial, poly_mod, poly_mul
from uc_spectra.rings.numbers import integer_log
from uc_spectra.rings.validation import validate_local


def _digits(size: int, base: int, width: int) -> np.ndarray:
    """Base-``base`` digits of 0..size-1, least significant first, shape (size, width)."""
    return (np.arange(size)[:, None] // base ** np.arange(width)[None, :]) % base


class BaseLocalRing(ABC):
    def __init__(self, spec: LocalRingSpec):
        self.spec = spec
        self.size = spec.order

    @abstractmethod
    def add(self, a: int, b: int) -> int:
        pass

    @abstractmethod
    def neg(self, a: int) -> int:
        pass

    @abstractmethod
    def mul(self, a: int, b: int) -> int:
        pass

    @abstractmethod
    def is_unit(self, a: int) -> bool:
        pass

    @abstractmethod
    def sub_table(self) -> np.ndarray:
        """(size, size) array whose [a, b] entry is a - b."""
        pass

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def unit_mask(self) -> np.ndarray:
        return np.array([self.is_unit(a) for a in range(self.size)], dtype=bool)

    def units(self) -> List[int]:
        return [int(a) for a in np.flatnonzero(self.unit_mask())]

    def describe(self) -> str:
        return self.spec.render()


class IntegersModPrimePower(BaseLocalRing):
    def __init__(self, spec: LocalRingSpec):
        super().__init__(spec)
        self.prime = spec.prime

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.size

    def neg(self, a: int) -> int:
        return (-a) % self.size

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.size

    def is_unit(self, a: int) -> bool:
        return a % self.prime != 0

    def sub_table(self) -> np.ndarray:
        elements = np.arange(self.size)
        return (elements[:, None] - elements[None, :]) % self.size

    def unit_mask(self) -> np.ndarray:
        return np.arange(self.size) % self.prime != 0


class GaloisField(BaseLocalRing):
    """GF(p^e) as GF(p)[X] modulo the smallest monic irreducible of degree e; the element
    with index x has the base-p digits of x as its coefficients."""

    def __init__(self, spec: LocalRingSpec):
        super().__init__(spec)
        self.prime = spec.prime
        degree = integer_log(spec.order, spec.prime)
        assert degree is not None
        self.degree = degree
        self.modulus: Optional[Poly] = (
            irreducible_polynomial(self.prime, degree) if degree > 1 else None
        )
        self._digits = _digits(self.size, self.prime, degree)
        self._weights = self.prime ** np.arange(degree)

    def coefficients(self, a: int) -> Poly:
        return tuple(int(c) for c in self._digits[a])

    def _encode(self, coefficients: Sequence[int]) -> int:
        return sum(int(c) * self.prime**i for i, c in enumerate(coefficients))

    def add(self, a: int, b: int) -> int:
        return int(((self._digits[a] + self._digits[b]) % self.prime) @ self._weights)

    def neg(self, a: int) -> int:
        return int(((-self._digits[a]) % self.prime) @ self._weights)

    def mul(self, a: int, b: int) -> int:
        if self.modulus is None:
            return (a * b) % self.prime
        product = poly_mul(self.coefficients(a), self.coefficients(b), self.prime)
        return self._encode(poly_mod(product, self.modulus, self.prime))

    def is_unit(self, a: int) -> bool:
        return a != 0

    def sub_table(self) -> np.ndarray:
        table = np.zeros((self.size, self.size), dtype=np.int64)
        for i in range(self.degree):
            column = self._digits[:, i]
            table += ((column[:, None] - column[None, :]) % self.prime) * self.prime**i
        return table

    def unit_mask(self) -> np.ndarray:
        return np.arange(self.size) != 0


class TruncatedPolynomialRing(BaseLocalRing):
    """GF(q)[X]/(X^t); the element with index x has the base-q digits of x as its
    coefficients, each one an element index of GF(q)."""

    def __init__(self, spec: LocalRingSpec):
        super().__init__(spec)
        assert spec.length is not None
        self.length = spec.length
        self.residue = spec.residue
        self.field = GaloisField(
            validate_local(spec.residue, 1, family=LocalRingFamily.GALOIS)
        )
        self._digits = _digits(self.size, self.residue, self.length)

    def coefficients(self, a: int) -> List[int]:
        return [int(c) for c in self._digits[a]]

    def _encode(self, coefficients: Sequence[int]) -> int:
        return sum(c * self.residue**i for i, c in enumerate(coefficients))

    def add(self, a: int, b: int) -> int:
        return self._encode(
            [self.field.add(x, y) for x, y in zip(self.coefficients(a), self.coefficients(b))]
        )

    def neg(self, a: int) -> int:
        return self._encode([self.field.neg(x) for x in self.coefficients(a)])

    def mul(self, a: int, b: int) -> int:
        left, right = self.coefficients(a), self.coefficients(b)
        product = [0] * self.length
        for i, x in enumerate(left):
            for j in range(self.length - i):
                product[i + j] = self.field.add(product[i + j], self.field.mul(x, right[j]))
        return self._encode(product)

    def is_unit(self, a: int) -> bool:
        return a % self.residue != 0

    def sub_table(self) -> np.ndarray:
        field_table = self.field.sub_table()
        table = np.zeros((self.size, self.size), dtype=np.int64)
        for i in range(self.length):
            column = self._digits[:, i]
            table += field_table[column[:, None], column[None, :]] * self.residue**i
        return table

    def unit_mask(self) -> np.ndarray:
        return np.arange(self.size) % self.residue != 0
