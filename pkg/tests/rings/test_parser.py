import pytest

from uc_spectra.rings.parser import ParseError, parse_ring_expr, render_ring
from uc_spectra.rings.validation import NotPrimePower, NotRealizable


def test_parse_product_with_field():
    spec = parse_ring_expr("Z/4 * GF(9)")
    assert spec.descriptors == [(4, 2), (9, 1)]


def test_parse_truncated_polynomial_ring():
    assert parse_ring_expr("GF(3)[x]/x^2").descriptors == [(9, 3)]


def test_parse_modulus_expands_into_prime_powers():
    assert parse_ring_expr("Z/140").descriptors == [(4, 2), (5, 1), (7, 1)]


@pytest.mark.parametrize("separator", ["*", "x", "×"])
def test_parse_accepts_every_separator(separator):
    spec = parse_ring_expr(f"GF(5) {separator} Z/2 {separator} local(9,3)")
    assert spec.descriptors == [(2, 1), (9, 3), (5, 1)]


def test_parse_ignores_whitespace_around_tokens():
    assert parse_ring_expr("  GF( 4 )*Z/ 3 ").descriptors == [(3, 1), (4, 1)]


def test_parse_local_not_realizable():
    with pytest.raises(NotRealizable):
        parse_ring_expr("local(16,2)")


def test_parse_local_lax():
    spec = parse_ring_expr("local(16,2)", strict=False)
    assert spec.descriptors == [(16, 2)]
    assert render_ring(spec) == "local(16,2)"


def test_parse_local_not_prime_power():
    with pytest.raises(NotPrimePower):
        parse_ring_expr("local(6,2)")


@pytest.mark.parametrize(
    "text,position",
    [
        ("", 0),
        ("Q/5", 0),
        ("Z/4 +", 4),
        ("GF(4", 4),
        ("Z/", 2),
    ],
)
def test_parse_errors_carry_position(text, position):
    with pytest.raises(ParseError) as excinfo:
        parse_ring_expr(text)
    assert excinfo.value.position == position


def test_parse_rejects_trivial_modulus():
    with pytest.raises(ParseError):
        parse_ring_expr("Z/1")


def test_render_round_trips():
    spec = parse_ring_expr("GF(2)[x]/x^3 × GF(4) × Z/9")
    assert render_ring(spec) == "GF(2)[x]/x^3 × Z/9 × GF(4)"
    assert parse_ring_expr(render_ring(spec)) == spec
