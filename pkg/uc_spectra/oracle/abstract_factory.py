from abc import ABC, abstractmethod

from uc_spectra.models.ring import LocalRingSpec
from uc_spectra.oracle.local_rings import BaseLocalRing


class AbstractLocalRingFactory(ABC):
    @abstractmethod
    def create_local_ring(
        self,
        local_spec: LocalRingSpec,
    ) -> BaseLocalRing:
        pass
