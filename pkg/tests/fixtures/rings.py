from uc_spectra.models.ring import LocalRingSpec, RingSpec
from uc_spectra.rings.spec import canonicalize, from_modulus
from uc_spectra.rings.validation import validate_local


def local(order: int, ideal_order: int, strict: bool = True) -> LocalRingSpec:
    return validate_local(order, ideal_order, strict=strict)


def ring(*descriptors: tuple[int, int], strict: bool = True) -> RingSpec:
    """A canonical product of local descriptors, e.g. ring((3, 1), (13, 1))."""
    return canonicalize(local(order, ideal_order, strict=strict) for order, ideal_order in descriptors)


def field(q: int) -> RingSpec:
    return ring((q, 1))


def zn(n: int) -> RingSpec:
    return from_modulus(n)
