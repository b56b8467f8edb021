from typing import Iterable, Iterator, List

from uc_spectra.models.ring import LocalRingFamily, LocalRingSpec, RingSpec
from uc_spectra.rings.numbers import prime_factors, prime_power
from uc_spectra.rings.validation import EmptyProduct, RingValidationError, validate_local


def canonicalize(factors: Iterable[LocalRingSpec]) -> RingSpec:
    """Sorts local factors into the canonical order (residue ascending, then order)."""
    ordered = sorted(factors, key=lambda factor: factor.sort_key())
    if not ordered:
        raise EmptyProduct("a ring needs at least one local factor")
    return RingSpec(factors=tuple(ordered))


def from_modulus(n: int) -> RingSpec:
    """Z/nZ as the product of its Z/p^k components."""
    if n < 2:
        raise ValueError(f"modulus must be at least 2, got {n}")
    return canonicalize(
        validate_local(
            prime**exponent,
            prime ** (exponent - 1),
            family=LocalRingFamily.INTEGERS,
        )
        for prime, exponent in prime_factors(n)
    )


def unit_count(spec: RingSpec) -> int:
    return spec.unit_count


def local_descriptors(max_order: int, strict: bool = True) -> List[LocalRingSpec]:
    """Every local descriptor with order <= max_order, smallest rings first.

    Strict descriptors are (q^t, q^(t-1)) for prime powers q; lax mode adds every
    (p^a, p^b) with a > b >= 0.
    """
    descriptors: List[LocalRingSpec] = []
    for order in range(2, max_order + 1):
        power = prime_power(order)
        if power is None:
            continue
        prime, exponent = power
        for ideal_exponent in range(exponent):
            try:
                descriptors.append(validate_local(order, prime**ideal_exponent, strict=strict))
            except RingValidationError:
                continue
    return sorted(descriptors, key=lambda factor: (factor.order, factor.sort_key()))


def enumerate_specs(max_order: int, strict: bool = True) -> Iterator[RingSpec]:
    """Yields every canonical product of local descriptors with total order <= max_order,
    once per multiset of factors, ordered by ring order and then by the factor list."""
    if max_order < 2:
        raise ValueError(f"max_order must be at least 2, got {max_order}")
    locals_ = local_descriptors(max_order, strict=strict)
    found: List[RingSpec] = []

    def extend(start: int, chosen: List[LocalRingSpec], order: int) -> None:
        for index in range(start, len(locals_)):
            factor = locals_[index]
            if order * factor.order > max_order:
                break
            chosen.append(factor)
            found.append(canonicalize(chosen))
            extend(index, chosen, order * factor.order)
            chosen.pop()

    extend(0, [], 1)
    found.sort(key=lambda spec: (spec.order, spec.descriptors))
    yield from found
