from enum import Enum
from typing import Any, Dict, Optional

from pydantic.v1 import root_validator

from .model import BaseModel


class VerdictMethod(str, Enum):
    DIRECT = "direct"
    THEOREM = "theorem"


class Verdict(BaseModel):
    """Whether an r-regular graph is Ramanujan, and how that was decided.

    Direct verdicts come from a spectrum and carry a witness eigenvalue when negative;
    theorem verdicts come from the ring descriptor and carry the matching case label.
    """

    ramanujan: bool
    method: VerdictMethod
    case_label: Optional[str] = None
    witness: Optional[int] = None
    degree: int
    vacuous: bool = False

    @root_validator(skip_on_failure=True)
    def negative_direct_verdict_needs_witness(cls, values):
        if values["method"] == VerdictMethod.DIRECT and not values["ramanujan"]:
            witness = values["witness"]
            degree = values["degree"]
            if witness is None or abs(witness) == degree:
                raise ValueError("a negative direct verdict needs a witness other than +-degree")
        return values

    def to_json_dict(self) -> Dict[str, Any]:
        return {
            "ramanujan": self.ramanujan,
            "method": self.method.value,
            "case": self.case_label,
            "witness": self.witness,
            "degree": self.degree,
            "vacuous": self.vacuous,
        }
