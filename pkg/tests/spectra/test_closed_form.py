import pytest
from pytest_mock import MockerFixture

from tests.fixtures.rings import field, local, ring, zn
from uc_spectra.models.spectrum import Spectrum
from uc_spectra.rings.spec import canonicalize, enumerate_specs
from uc_spectra.spectra.closed_form import (
    IndexOutOfRange,
    component_count,
    is_connected,
    lambda_c,
    spectrum_complement,
    spectrum_line,
    spectrum_unitary,
)


def spectrum(pairs: dict[int, int]) -> Spectrum:
    return Spectrum.from_multiset(pairs.items())


@pytest.mark.parametrize(
    "spec,subset,expected",
    [
        (zn(12), set(), 4),
        (zn(12), {2}, -2),
        (zn(12), {1}, -4),
        (zn(12), {1, 2}, 2),
        (canonicalize([local(9, 3)]), {1}, -3),
    ],
)
def test_lambda_c(spec, subset, expected):
    assert lambda_c(spec, subset) == expected


@pytest.mark.parametrize("subset", [{0}, {3}, {1, 5}])
def test_lambda_c_index_out_of_range(subset):
    with pytest.raises(IndexOutOfRange):
        lambda_c(zn(12), subset)


@pytest.mark.parametrize(
    "spec,expected",
    [
        (zn(4), {2: 1, 0: 2, -2: 1}),
        (zn(6), {2: 1, 1: 2, -1: 2, -2: 1}),
        (ring((4, 2), (2, 1)), {2: 2, 0: 4, -2: 2}),
        (field(5), {4: 1, -1: 4}),
        (ring((2, 1), (2, 1)), {1: 2, -1: 2}),
    ],
)
def test_spectrum_unitary(spec, expected):
    assert spectrum_unitary(spec) == spectrum(expected)


@pytest.mark.parametrize(
    "spec,expected",
    [
        (field(5), {0: 5}),
        (zn(4), {1: 2, -1: 2}),
        (zn(6), {3: 1, 1: 1, 0: 2, -2: 2}),
    ],
)
def test_spectrum_complement(spec, expected):
    assert spectrum_complement(spec) == spectrum(expected)


@pytest.mark.parametrize(
    "spec,expected",
    [
        (field(3), {2: 1, -1: 2}),
        (zn(6), {2: 1, 1: 2, -1: 2, -2: 1}),
        (field(2), {0: 1}),
        (ring((2, 1), (2, 1)), {0: 2}),
        (field(4), {4: 1, 0: 3, -2: 2}),
    ],
)
def test_spectrum_line(spec, expected):
    assert spectrum_line(spec) == spectrum(expected)


def test_unitary_trace_identities():
    for spec in enumerate_specs(200):
        closed = spectrum_unitary(spec)
        assert closed.order == spec.order
        assert closed.moment(1) == 0
        assert closed.moment(2) == spec.order * spec.unit_count


def test_line_spectrum_order():
    for spec in enumerate_specs(200):
        assert spectrum_line(spec).order == spec.order * spec.unit_count // 2


def test_degree_multiplicity_counts_components():
    for spec in enumerate_specs(200):
        residue_two = spec.residue_two_count
        expected = 2 ** (residue_two - 1) if residue_two else 1
        assert spectrum_unitary(spec).multiplicity(spec.unit_count) == expected
        assert component_count(spec) == expected


def test_complement_is_image_of_unitary():
    for spec in enumerate_specs(200):
        degree = spec.unit_count
        unitary = spectrum_unitary(spec).as_dict()
        unitary[degree] -= 1
        pairs = [(-1 - value, mult) for value, mult in unitary.items()]
        pairs.append((spec.order - 1 - degree, 1))
        assert spectrum_complement(spec) == Spectrum.from_multiset(pairs)


@pytest.mark.parametrize("spec", [zn(12), ring((2, 1), (4, 2)), field(5), ring((2, 1), (2, 1))])
def test_complement_never_emits_negative_multiplicities(spec, mocker: MockerFixture):
    merge = mocker.spy(Spectrum, "from_multiset")
    spectrum_complement(spec)
    for call in merge.call_args_list:
        pairs = list(call.args[-1])
        assert all(multiplicity >= 0 for _, multiplicity in pairs)


def test_is_connected():
    assert is_connected(zn(12))
    assert not is_connected(ring((2, 1), (4, 2)))
    assert component_count(ring((2, 1), (2, 1), (2, 1), (3, 1))) == 4
