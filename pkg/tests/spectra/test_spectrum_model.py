import pytest
from pydantic.v1 import ValidationError

from uc_spectra.models.spectrum import NegativeMultiplicity, Spectrum


def test_from_multiset_merges_and_sorts():
    spectrum = Spectrum.from_multiset([(-1, 2), (4, 1), (-1, 2), (0, 0)])
    assert spectrum.entries == ((4, 1), (-1, 4))
    assert spectrum.order == 5


def test_from_multiset_rejects_negative_multiplicities():
    with pytest.raises(NegativeMultiplicity):
        Spectrum.from_multiset([(3, 1), (3, -1), (2, 2)])
    with pytest.raises(NegativeMultiplicity):
        Spectrum.from_multiset([(3, 1), (3, -2)])


def test_constructor_enforces_canonical_form():
    with pytest.raises(ValidationError):
        Spectrum(entries=((0, 1), (1, 1)), order=2)
    with pytest.raises(ValidationError):
        Spectrum(entries=((1, 1), (0, 1)), order=3)
    with pytest.raises(ValidationError):
        Spectrum(entries=((1, 0),), order=0)


def test_moments_and_energy():
    spectrum = Spectrum.from_multiset([(4, 1), (-1, 4)])
    assert spectrum.moment(0) == 5
    assert spectrum.moment(1) == 0
    assert spectrum.moment(2) == 20
    assert spectrum.energy() == 8
    assert spectrum.multiplicity(-1) == 4
    assert spectrum.multiplicity(7) == 0


def test_json_round_trip():
    spectrum = Spectrum.from_multiset([(2, 1), (1, 2), (-1, 2), (-2, 1)])
    data = spectrum.to_json_dict()
    assert data == {"order": 6, "entries": [[2, 1], [1, 2], [-1, 2], [-2, 1]]}
    assert Spectrum.from_json_dict(data) == spectrum


def test_from_json_dict_checks_order():
    with pytest.raises(ValueError):
        Spectrum.from_json_dict({"order": 7, "entries": [[0, 6]]})


def test_to_csv():
    spectrum = Spectrum.from_multiset([(1, 2), (-1, 2)])
    assert spectrum.to_csv() == "value,mult\n1,2\n-1,2\n"
