from loguru import logger

from uc_spectra import UcSpectraError
from uc_spectra.models.spectrum import Spectrum
from uc_spectra.models.verdict import Verdict, VerdictMethod
from uc_spectra.ramanujan.bounds import within_ramanujan_bound


class DegreeAbsent(UcSpectraError, ValueError):
    pass


def ramanujan_check(spectrum: Spectrum, degree: int) -> Verdict:
    """Direct Ramanujan test of an r-regular graph from its spectrum.

    Every occurrence of +r and -r is set aside; the largest remaining |eigenvalue|
    must not exceed 2 * sqrt(r - 1). An empty remainder is a vacuous pass.
    """
    if degree < 0 or spectrum.multiplicity(degree) == 0:
        raise DegreeAbsent(f"degree {degree} is not an eigenvalue of the given spectrum")
    residual = [value for value in spectrum.eigenvalues if value not in (degree, -degree)]
    if not residual:
        return Verdict(ramanujan=True, method=VerdictMethod.DIRECT, degree=degree, vacuous=True)
    # largest |value|, positive one first on ties
    extreme = max(residual, key=lambda value: (abs(value), value))
    if within_ramanujan_bound(extreme, degree):
        return Verdict(ramanujan=True, method=VerdictMethod.DIRECT, degree=degree)
    logger.debug("eigenvalue {} breaks the Ramanujan bound for degree {}", extreme, degree)
    return Verdict(
        ramanujan=False,
        method=VerdictMethod.DIRECT,
        witness=extreme,
        degree=degree,
    )
