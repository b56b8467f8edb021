"""Polynomial arithmetic over GF(p), enough to build GF(p^e) deterministically."""

import functools
import itertools
from typing import List, Sequence, Tuple

# coefficient lists are lowest degree first
Poly = Tuple[int, ...]


def _trim(coefficients: Sequence[int]) -> Poly:
    coefficients = list(coefficients)
    while coefficients and coefficients[-1] == 0:
        coefficients.pop()
    return tuple(coefficients)


def poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> Poly:
    if not a or not b:
        return ()
    product = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                product[i + j] = (product[i + j] + x * y) % p
    return _trim(product)


def poly_mod(a: Sequence[int], modulus: Sequence[int], p: int) -> Poly:
    """Remainder of a modulo a monic polynomial."""
    remainder = list(_trim(a))
    degree = len(modulus) - 1
    while len(remainder) - 1 >= degree:
        lead = remainder[-1]
        shift = len(remainder) - 1 - degree
        for i, c in enumerate(modulus):
            remainder[shift + i] = (remainder[shift + i] - lead * c) % p
        remainder = list(_trim(remainder))
    return tuple(remainder)


def _monic(degree: int, p: int) -> List[Poly]:
    """Monic polynomials of the given degree, lexicographic in (c_{d-1}, ..., c_0)."""
    return [
        tuple(reversed(head)) + (1,)
        for head in itertools.product(range(p), repeat=degree)
    ]


def is_irreducible(polynomial: Poly, p: int) -> bool:
    degree = len(polynomial) - 1
    if degree < 1:
        return False
    for divisor_degree in range(1, degree // 2 + 1):
        for divisor in _monic(divisor_degree, p):
            if not poly_mod(polynomial, divisor, p):
                return False
    return True


@functools.lru_cache(None)
def irreducible_polynomial(p: int, degree: int) -> Poly:
    """The lexicographically smallest monic irreducible polynomial of ``degree`` over
    GF(p), comparing coefficient tuples from X^(degree-1) down to the constant term."""
    for candidate in _monic(degree, p):
        if is_irreducible(candidate, p):
            return candidate
    raise ArithmeticError(f"no irreducible polynomial of degree {degree} over GF({p})")


def render_polynomial(polynomial: Poly) -> str:
    terms = []
    for power in range(len(polynomial) - 1, -1, -1):
        c = polynomial[power]
        if c == 0:
            continue
        base = "" if power == 0 else ("X" if power == 1 else f"X^{power}")
        if not base:
            terms.append(str(c))
        else:
            terms.append(base if c == 1 else f"{c}{base}")
    return " + ".join(terms) or "0"
