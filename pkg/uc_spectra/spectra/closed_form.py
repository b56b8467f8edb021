"""Exact spectra of unitary Cayley graphs, their complements and their line graphs,
computed from the ring descriptor alone."""

from itertools import combinations
from math import prod
from typing import AbstractSet, FrozenSet, Iterator, Tuple

from uc_spectra import UcSpectraError, exact_div
from uc_spectra.models.ring import RingSpec
from uc_spectra.models.spectrum import Spectrum


class IndexOutOfRange(UcSpectraError, ValueError):
    pass


def _subsets(size: int) -> Iterator[Tuple[int, ...]]:
    for count in range(size + 1):
        yield from combinations(range(1, size + 1), count)


def _block_size(spec: RingSpec, subset: AbstractSet[int]) -> int:
    return prod(spec.factors[index - 1].unit_ratio for index in subset)


def lambda_c(spec: RingSpec, subset: AbstractSet[int]) -> int:
    """The eigenvalue attached to a set of factor positions (1-based, canonical order):
    (-1)^|C| |R^x| divided by the product of |R_j^x| / m_j over j in C."""
    subset = frozenset(subset)
    for index in subset:
        if not 1 <= index <= spec.s:
            raise IndexOutOfRange(f"factor index {index} is outside 1..{spec.s}")
    sign = -1 if len(subset) % 2 else 1
    return sign * exact_div(spec.unit_count, _block_size(spec, subset), "lambda_C")


def zero_multiplicity(spec: RingSpec) -> int:
    return spec.order - prod(factor.residue for factor in spec.factors)


def _eigenvalue_blocks(spec: RingSpec) -> Iterator[Tuple[FrozenSet[int], int, int]]:
    """(C, lambda_C, multiplicity) for every subset C, the empty one first."""
    for subset in _subsets(spec.s):
        positions = frozenset(subset)
        yield positions, lambda_c(spec, positions), _block_size(spec, positions)


def spectrum_unitary(spec: RingSpec) -> Spectrum:
    pairs = [(value, multiplicity) for _, value, multiplicity in _eigenvalue_blocks(spec)]
    pairs.append((0, zero_multiplicity(spec)))
    return Spectrum.from_multiset(pairs)


def spectrum_complement(spec: RingSpec) -> Spectrum:
    # complement of an r-regular graph: the trivial r goes to n-1-r, every other
    # eigenvalue lambda to -1-lambda
    pairs = [(spec.order - 1 - spec.unit_count, 1)]
    for positions, value, multiplicity in _eigenvalue_blocks(spec):
        if not positions:
            multiplicity -= 1
        pairs.append((-1 - value, multiplicity))
    pairs.append((-1, zero_multiplicity(spec)))
    return Spectrum.from_multiset(pairs)


def spectrum_line(spec: RingSpec) -> Spectrum:
    degree = spec.unit_count
    if degree == 1:
        # G_R is a perfect matching, so its line graph is edgeless
        return Spectrum.from_multiset([(0, exact_div(spec.order, 2, "line graph order"))])
    pairs = [
        (value + degree - 2, multiplicity)
        for value, multiplicity in spectrum_unitary(spec).entries
    ]
    pairs.append((-2, exact_div(spec.order * (degree - 2), 2, "line graph -2 multiplicity")))
    return Spectrum.from_multiset(pairs)


def component_count(spec: RingSpec) -> int:
    """Connected components of G_R: 2^(k-1) for k >= 1 factors with residue field F_2."""
    residue_two = spec.residue_two_count
    return 2 ** (residue_two - 1) if residue_two else 1


def is_connected(spec: RingSpec) -> bool:
    return component_count(spec) == 1
