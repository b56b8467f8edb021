"""Ramanujan classification of the unitary Cayley graph of Z/n and its complement,
stated purely in terms of the prime factorization of n."""

from typing import Optional

from uc_spectra.models.graph import GraphKind
from uc_spectra.models.verdict import Verdict, VerdictMethod
from uc_spectra.rings.numbers import prime_factors, totient

COMPLEMENT_EXCEPTIONS = frozenset({6, 10, 12, 15, 18, 21, 24, 30, 35})


def _close_primes(low: int, high: int, slack: int) -> bool:
    return 3 <= low < high <= slack


def _unitary_case(n: int) -> Optional[str]:
    factors = prime_factors(n)
    primes = [prime for prime, _ in factors]
    exponents = dict(factors)
    odd = [(prime, exponent) for prime, exponent in factors if prime != 2]
    two = exponents.get(2, 0)

    if not odd:
        return "Cor3.3(a)"
    if two == 0 and len(odd) == 1 and odd[0][1] <= 2:
        return "Cor3.3(b)"
    if two == 2 and len(odd) == 2 and all(exponent == 1 for _, exponent in odd):
        p2, p3 = primes[1:]
        if p3 <= 2 * p2 - 3:
            return "Cor3.3(c)"
    if two in (0, 1) and len(odd) == 2 and all(exponent == 1 for _, exponent in odd):
        p1, p2 = (prime for prime, _ in odd)
        if _close_primes(p1, p2, 4 * p1 - 5):
            return "Cor3.3(d)"
    if two >= 1 and len(odd) == 1:
        p, exponent = odd[0]
        if exponent == 2 and two in (1, 2):
            return "Cor3.3(e)"
        if exponent == 1 and 8 * (p - 1) > 2**two:
            return "Cor3.3(e)"
    return None


def _complement_case(n: int) -> Optional[str]:
    if len(prime_factors(n)) == 1:
        return "Cor4.3(a)"
    if n in COMPLEMENT_EXCEPTIONS:
        return "Cor4.3(b)"
    return None


def classify_zn(n: int, which: GraphKind = GraphKind.UNITARY) -> Verdict:
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    which = GraphKind(which)
    if which == GraphKind.LINE:
        raise ValueError("only the unitary graph and its complement are classified for Z/n")
    units = totient(n)
    if which == GraphKind.UNITARY:
        case_label, degree = _unitary_case(n), units
    else:
        case_label, degree = _complement_case(n), n - 1 - units
    return Verdict(
        ramanujan=case_label is not None,
        method=VerdictMethod.THEOREM,
        case_label=case_label,
        degree=degree,
    )
