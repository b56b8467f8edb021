"""Exact integer forms of the square-root comparisons used by the classifiers."""


def le_two_sqrt(a: int, b: int) -> bool:
    """a <= 2 * sqrt(b), decided without floating point."""
    if b < 0:
        return False
    if a <= 0:
        return True
    return a * a <= 4 * b


def within_ramanujan_bound(value: int, degree: int) -> bool:
    """|value| <= 2 * sqrt(degree - 1)."""
    return le_two_sqrt(abs(value), degree - 1)
