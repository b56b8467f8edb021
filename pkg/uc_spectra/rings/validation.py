from typing import Optional

from uc_spectra import UcSpectraError
from uc_spectra.models.ring import LocalRingFamily, LocalRingSpec
from uc_spectra.rings.numbers import integer_log, prime_power


class RingValidationError(UcSpectraError, ValueError):
    pass


class NotPrimePower(RingValidationError):
    pass


class NotRealizable(RingValidationError):
    pass


class EmptyProduct(RingValidationError):
    pass


def validate_local(
    order: int,
    ideal_order: int,
    strict: bool = True,
    family: Optional[LocalRingFamily] = None,
) -> LocalRingSpec:
    """Checks that (order, ideal_order) can describe a finite local ring.

    Order, maximal-ideal order and residue size are all powers of one prime p. In strict
    mode the order must also be a power of the residue size q (|R| = q^t), which every
    finite local ring satisfies; lax mode keeps the p-power conditions only and admits
    descriptors no ring has, for exploratory closed-form computation.

    ``family`` pins the realization (e.g. Z/p^k for factors coming from a modulus); by
    default fields are GF(q), other realizable descriptors GF(q)[x]/x^t.
    """
    if order < 2:
        raise RingValidationError(f"local ring order must be at least 2, got {order}")
    if ideal_order < 1:
        raise RingValidationError(f"maximal ideal order must be at least 1, got {ideal_order}")
    if order % ideal_order != 0:
        raise RingValidationError(
            f"maximal ideal order {ideal_order} does not divide ring order {order}"
        )
    residue = order // ideal_order
    if residue < 2:
        raise RingValidationError(
            f"residue field of local({order},{ideal_order}) would have {residue} element(s)"
        )

    order_power = prime_power(order)
    residue_power = prime_power(residue)
    ideal_power = prime_power(ideal_order) if ideal_order > 1 else None
    if (
        order_power is None
        or residue_power is None
        or residue_power[0] != order_power[0]
        or (ideal_order > 1 and (ideal_power is None or ideal_power[0] != order_power[0]))
    ):
        raise NotPrimePower(
            f"local({order},{ideal_order}): order, maximal ideal and residue field "
            "must all be powers of the same prime"
        )
    prime = order_power[0]

    length = integer_log(order, residue)
    if length is None and strict:
        raise NotRealizable(
            f"no finite local ring has order {order} and residue field of size {residue} "
            f"({order} is not a power of {residue})"
        )

    if family is None:
        if length is None:
            family = LocalRingFamily.ABSTRACT
        elif length == 1:
            family = LocalRingFamily.GALOIS
        else:
            family = LocalRingFamily.TRUNCATED
    elif family == LocalRingFamily.INTEGERS and residue != order_power[0]:
        raise NotRealizable(f"Z/{order} has a maximal ideal of order {order // prime}")

    return LocalRingSpec(
        order=order,
        ideal_order=ideal_order,
        residue=residue,
        prime=prime,
        length=length,
        family=family,
    )
