from typing import Any, Dict, List, Optional, Tuple

from .energy import EnergyReport
from .model import BaseModel
from .spectrum import Spectrum
from .verdict import Verdict


class AuditRow(BaseModel):
    """One ring where the direct and the corollary hyperenergetic predicates disagree."""

    ring: str
    descriptors: Tuple[Tuple[int, int], ...]
    order: int
    unit_count: int
    energy: int
    line_order: int
    hyper_direct: bool
    hyper_corollary: bool
    corollary_case: Optional[str] = None
    oracle_energy: Optional[int] = None


class OracleCheck(BaseModel):
    name: str
    expected: Any
    actual: Any

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


class ReportDoc(BaseModel):
    ring: str
    order: int
    unit_count: int
    s: int
    spectra: Dict[str, Spectrum]
    verdicts: Dict[str, Dict[str, Verdict]]
    energy: EnergyReport
    moments: Dict[str, List[int]]
    cycles: Dict[str, Dict[str, int]]
    zn: Optional[Dict[str, Any]] = None
    oracle: Optional[List[OracleCheck]] = None

    @property
    def oracle_ok(self) -> bool:
        return all(check.ok for check in self.oracle or [])

    def to_json_dict(self) -> Dict[str, Any]:
        document: Dict[str, Any] = {
            "ring": self.ring,
            "order": self.order,
            "unit_count": self.unit_count,
            "s": self.s,
            "spectra": {kind: spectrum.to_json_dict() for kind, spectrum in self.spectra.items()},
            "verdicts": {
                kind: {method: verdict.to_json_dict() for method, verdict in by_method.items()}
                for kind, by_method in self.verdicts.items()
            },
            "energy": self.energy.to_json_dict(),
            "moments": self.moments,
            "cycles": self.cycles,
        }
        if self.zn is not None:
            document["zn"] = self.zn
        if self.oracle is not None:
            document["oracle"] = [
                {"check": check.name, "expected": check.expected, "actual": check.actual}
                for check in self.oracle
            ]
        return document


class SuiteResult(BaseModel):
    suite: str
    checked: int
    failures: Tuple[str, ...] = ()
    findings: Tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures
