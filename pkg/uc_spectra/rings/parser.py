import re
from typing import List

from uc_spectra import UcSpectraError
from uc_spectra.models.ring import LocalRingFamily, LocalRingSpec, RingSpec
from uc_spectra.rings.spec import canonicalize, from_modulus
from uc_spectra.rings.validation import validate_local

PRODUCT_SEPARATORS = ("*", "×", "x")
_NAT = re.compile(r"[0-9]+")


class ParseError(UcSpectraError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.position = 0

    def skip_whitespace(self) -> None:
        while self.position < len(self.text) and self.text[self.position].isspace():
            self.position += 1

    def at_end(self) -> bool:
        self.skip_whitespace()
        return self.position >= len(self.text)

    def peek(self, literal: str) -> bool:
        self.skip_whitespace()
        return self.text.startswith(literal, self.position)

    def accept(self, literal: str) -> bool:
        if self.peek(literal):
            self.position += len(literal)
            return True
        return False

    def expect(self, literal: str) -> None:
        if not self.accept(literal):
            raise ParseError(f"expected {literal!r}", self.position)

    def nat(self) -> int:
        self.skip_whitespace()
        match = _NAT.match(self.text, self.position)
        if match is None:
            raise ParseError("expected a natural number", self.position)
        self.position = match.end()
        return int(match.group())


def _parse_term(scanner: _Scanner, strict: bool) -> List[LocalRingSpec]:
    start = scanner.position
    if scanner.accept("Z/"):
        modulus = scanner.nat()
        if modulus < 2:
            raise ParseError(f"Z/{modulus} is not a ring this library handles", start)
        return list(from_modulus(modulus).factors)
    if scanner.accept("GF("):
        size = scanner.nat()
        scanner.expect(")")
        if scanner.accept("[x]/x^"):
            length = scanner.nat()
            if length < 1:
                raise ParseError("truncation degree must be at least 1", start)
            family = LocalRingFamily.GALOIS if length == 1 else LocalRingFamily.TRUNCATED
            return [validate_local(size**length, size ** (length - 1), family=family)]
        return [validate_local(size, 1, family=LocalRingFamily.GALOIS)]
    if scanner.accept("local("):
        order = scanner.nat()
        scanner.expect(",")
        ideal_order = scanner.nat()
        scanner.expect(")")
        return [validate_local(order, ideal_order, strict=strict)]
    raise ParseError("expected Z/n, GF(q), GF(q)[x]/x^t or local(order,m)", scanner.position)


def parse_ring_expr(text: str, strict: bool = True) -> RingSpec:
    """Parses e.g. ``"Z/4 * GF(9)"`` or ``"GF(3)[x]/x^2 × local(8,2)"`` into a
    canonical RingSpec. ``strict=False`` admits non-realizable ``local(o,m)`` terms."""
    scanner = _Scanner(text)
    factors = _parse_term(scanner, strict)
    while not scanner.at_end():
        if not any(scanner.accept(separator) for separator in PRODUCT_SEPARATORS):
            raise ParseError("expected '*', 'x' or '×'", scanner.position)
        factors.extend(_parse_term(scanner, strict))
    return canonicalize(factors)


def render_ring(spec: RingSpec) -> str:
    return spec.render()
