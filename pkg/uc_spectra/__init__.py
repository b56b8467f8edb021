from loguru import logger

logger.disable("uc_spectra")


class UcSpectraError(Exception):
    """Base class for every error raised by uc_spectra."""


class InternalInconsistency(UcSpectraError):
    """A closed form or the oracle produced a value that cannot be right (e.g. a
    negative multiplicity or a division that should have been exact)."""


def exact_div(numerator: int, denominator: int, what: str = "quantity") -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise InternalInconsistency(f"{what}: {numerator} is not divisible by {denominator}")
    return quotient
