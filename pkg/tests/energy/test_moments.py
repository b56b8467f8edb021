from math import prod

import pytest

from tests.fixtures.rings import field, zn
from uc_spectra.energy.moments import (
    LengthMismatch,
    cycle_count,
    generic_line_moment,
    moment_line,
    moment_unitary,
)
from uc_spectra.models.graph import GraphKind
from uc_spectra.rings.spec import canonicalize, enumerate_specs
from uc_spectra.spectra.closed_form import spectrum_line, spectrum_unitary


def test_moment_unitary_examples():
    assert moment_unitary(zn(4), 4) == 32
    assert moment_unitary(zn(12), 2) == 48
    assert moment_unitary(zn(12), 4) == 576
    assert moment_unitary(zn(12), 0) == 12
    assert all(moment_unitary(spec, 1) == 0 for spec in enumerate_specs(64))


def test_moment_line_examples():
    assert moment_line(zn(6), 3) == 0
    assert moment_line(field(3), 2) == 6
    assert moment_line(field(4), 3) == 48
    assert moment_line(field(4), 0) == 6


def test_moment_line_of_a_perfect_matching():
    assert moment_line(field(2), 0) == 1
    assert [moment_line(field(2), k) for k in range(1, 5)] == [0, 0, 0, 0]


def test_generic_line_moment():
    assert generic_line_moment(4, 2, [4, 0, 8, 0], 2) == 8
    assert generic_line_moment(5, 4, [5, 0, 20, 60], 3) == 6 * 30
    assert generic_line_moment(5, 4, [5], 0) == 10


def test_generic_line_moment_length_mismatch():
    with pytest.raises(LengthMismatch):
        generic_line_moment(4, 2, [4, 0], 2)


def test_moments_match_closed_spectra():
    for spec in enumerate_specs(200):
        unitary, line = spectrum_unitary(spec), spectrum_line(spec)
        for k in range(11):
            assert moment_unitary(spec, k) == unitary.moment(k), (spec.render(), k)
            assert moment_line(spec, k) == line.moment(k), (spec.render(), k)


def test_moment_unitary_is_multiplicative_over_factors():
    for spec in enumerate_specs(200):
        singles = [canonicalize([factor]) for factor in spec.factors]
        for k in range(9):
            assert moment_unitary(spec, k) == prod(moment_unitary(single, k) for single in singles)


@pytest.mark.parametrize(
    "spec,target,length,expected",
    [
        (field(5), GraphKind.UNITARY, 3, 10),
        (field(5), GraphKind.UNITARY, 4, 15),
        (field(4), GraphKind.LINE, 3, 8),
        (field(4), GraphKind.LINE, 4, 15),
        (zn(12), GraphKind.UNITARY, 3, 0),
        (zn(4), GraphKind.LINE, 4, 1),
        (field(2), GraphKind.LINE, 4, 0),
    ],
)
def test_cycle_count(spec, target, length, expected):
    assert cycle_count(spec, target, length) == expected


def test_triangles_are_a_sixth_of_the_third_moment():
    for spec in enumerate_specs(200):
        assert 6 * cycle_count(spec, GraphKind.UNITARY, 3) == moment_unitary(spec, 3)


def test_cycle_count_rejects_bad_arguments():
    with pytest.raises(ValueError):
        cycle_count(zn(12), GraphKind.COMPLEMENT, 3)
    with pytest.raises(ValueError):
        cycle_count(zn(12), GraphKind.UNITARY, 5)
