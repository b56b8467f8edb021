import pytest

from uc_spectra.models.ring import LocalRingFamily
from uc_spectra.rings.validation import (
    NotPrimePower,
    NotRealizable,
    RingValidationError,
    validate_local,
)


def test_validate_local_chain_ring():
    factor = validate_local(4, 2)
    assert (factor.order, factor.ideal_order, factor.residue, factor.prime) == (4, 2, 2, 2)
    assert factor.length == 2
    assert factor.unit_count == 2
    assert factor.family == LocalRingFamily.TRUNCATED


def test_validate_local_nine_three():
    factor = validate_local(9, 3)
    assert factor.residue == 3
    assert factor.unit_count == 6
    assert factor.render() == "GF(3)[x]/x^2"


def test_validate_local_field():
    factor = validate_local(8, 1)
    assert factor.is_field
    assert factor.family == LocalRingFamily.GALOIS
    assert factor.render() == "GF(8)"


def test_validate_local_not_realizable():
    with pytest.raises(NotRealizable):
        validate_local(16, 2)


def test_validate_local_lax_keeps_phantom_descriptor():
    factor = validate_local(16, 2, strict=False)
    assert factor.residue == 8
    assert factor.length is None
    assert not factor.is_realizable
    assert factor.render() == "local(16,2)"


@pytest.mark.parametrize("order,ideal_order", [(6, 2), (12, 3), (18, 2)])
def test_validate_local_not_prime_power(order, ideal_order):
    with pytest.raises(NotPrimePower):
        validate_local(order, ideal_order)


@pytest.mark.parametrize("order,ideal_order", [(1, 1), (4, 0), (9, 2), (5, 5)])
def test_validate_local_rejects_malformed(order, ideal_order):
    with pytest.raises(RingValidationError):
        validate_local(order, ideal_order)


def test_validation_errors_are_value_errors():
    with pytest.raises(ValueError):
        validate_local(6, 2)


def test_integers_family_needs_prime_residue():
    assert validate_local(8, 4, family=LocalRingFamily.INTEGERS).render() == "Z/8"
    with pytest.raises(NotRealizable):
        validate_local(9, 1, family=LocalRingFamily.INTEGERS)
