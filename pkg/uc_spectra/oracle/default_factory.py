from uc_spectra.models.ring import LocalRingFamily, LocalRingSpec
from uc_spectra.oracle.abstract_factory import AbstractLocalRingFactory
from uc_spectra.oracle.local_rings import (
    BaseLocalRing,
    GaloisField,
    IntegersModPrimePower,
    TruncatedPolynomialRing,
)
from uc_spectra.rings.validation import NotRealizable


class DefaultLocalRingFactory(AbstractLocalRingFactory):
    def create_local_ring(
        self,
        local_spec: LocalRingSpec,
    ) -> BaseLocalRing:
        if local_spec.family == LocalRingFamily.INTEGERS:
            return IntegersModPrimePower(local_spec)
        elif local_spec.family == LocalRingFamily.GALOIS:
            return GaloisField(local_spec)
        elif local_spec.family == LocalRingFamily.TRUNCATED:
            return TruncatedPolynomialRing(local_spec)
        else:
            raise NotRealizable(f"no concrete ring realizes {local_spec.render()}")
