from enum import Enum
from typing import Any, Dict, Optional

from .model import BaseModel


class EnergyBranch(str, Enum):
    """Which closed form gives the line-graph energy, by residue pattern."""

    RESIDUE_TWO = "all-residue-2-or-F2…F2×F3"
    MIXED = "mixed-t"
    RESIDUE_AT_LEAST_THREE = "all-residue-ge-3"


class HyperenergeticCase(str, Enum):
    UNIT_COUNT = "a"  # |R^x| >= 4
    LOCAL = "b"  # s = 1 and |R| = 2m >= 8
    RESIDUE_TWO = "c"  # s >= 2, every residue 2, |R^x| >= 2


class EnergyReport(BaseModel):
    energy: int
    branch: EnergyBranch
    line_order: int
    hyperenergetic_direct: bool
    hyperenergetic_corollary: bool
    corollary_case: Optional[HyperenergeticCase] = None

    @property
    def hyperenergetic_agrees(self) -> bool:
        return self.hyperenergetic_direct == self.hyperenergetic_corollary

    def to_json_dict(self) -> Dict[str, Any]:
        return {
            "energy": self.energy,
            "branch": self.branch.value,
            "line_order": self.line_order,
            "hyper_direct": self.hyperenergetic_direct,
            "hyper_corollary": self.hyperenergetic_corollary,
            "corollary_case": self.corollary_case.value if self.corollary_case else None,
        }
