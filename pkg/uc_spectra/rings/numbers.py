import functools
from typing import List, Optional, Sequence, Tuple


@functools.lru_cache(None)
def prime_factors(value: int) -> Sequence[Tuple[int, int]]:
    """(prime, exponent) pairs of ``value`` in increasing prime order, by trial division."""
    if value < 1:
        raise ValueError(f"cannot factor {value}")
    result: List[Tuple[int, int]] = []
    prime = 2
    while prime * prime <= value:
        if value % prime == 0:
            count = 0
            while value % prime == 0:
                count += 1
                value //= prime
            result.append((prime, count))
        prime += 1 if prime == 2 else 2
    if value > 1:
        result.append((value, 1))
    return tuple(result)


def is_prime(value: int) -> bool:
    return value >= 2 and prime_factors(value) == ((value, 1),)


def prime_power(value: int) -> Optional[Tuple[int, int]]:
    """(p, k) with value = p^k and k >= 1, or None when value is not a prime power."""
    if value < 2:
        return None
    factors = prime_factors(value)
    if len(factors) != 1:
        return None
    return factors[0]


def integer_log(value: int, base: int) -> Optional[int]:
    """k with base^k == value exactly, or None."""
    if base < 2 or value < 1:
        return None
    exponent = 0
    while value % base == 0:
        value //= base
        exponent += 1
    return exponent if value == 1 else None


def totient(value: int) -> int:
    current = value
    for prime, _ in prime_factors(value):
        current = (current // prime) * (prime - 1)
    return current


def prime_powers_up_to(bound: int) -> List[int]:
    return [value for value in range(2, bound + 1) if prime_power(value) is not None]
