from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from loguru import logger

from uc_spectra.energy.energy import line_energy
from uc_spectra.models.ring import RingSpec
from uc_spectra.ramanujan.classifier import classify_complement, classify_unitary
from uc_spectra.rings.spec import enumerate_specs, from_modulus
from uc_spectra.settings import get_settings

COLUMNS = (
    "ring",
    "order",
    "unit_count",
    "ramanujan",
    "unitary_case",
    "complement_ramanujan",
    "complement_case",
    "line_energy",
    "hyperenergetic",
)


class EnumerationFilter(str, Enum):
    ALL = "all"
    RAMANUJAN = "ramanujan"
    COMPLEMENT_RAMANUJAN = "complement-ramanujan"
    HYPERENERGETIC = "hyperenergetic"


def labelled_specs(max_order: int, strict: bool = True, zn_only: bool = False) -> List[Tuple[str, RingSpec]]:
    if max_order < 2:
        raise ValueError(f"max order must be at least 2, got {max_order}")
    if zn_only:
        return [(f"Z/{n}", from_modulus(n)) for n in range(2, max_order + 1)]
    return [(spec.render(), spec) for spec in enumerate_specs(max_order, strict=strict)]


def enumeration_row(labelled: Tuple[str, RingSpec]) -> Dict[str, Any]:
    label, spec = labelled
    unitary = classify_unitary(spec)
    complement = classify_complement(spec)
    energy = line_energy(spec)
    return {
        "ring": label,
        "order": spec.order,
        "unit_count": spec.unit_count,
        "ramanujan": unitary.ramanujan,
        "unitary_case": unitary.case_label,
        "complement_ramanujan": complement.ramanujan,
        "complement_case": complement.case_label,
        "line_energy": energy.energy,
        "hyperenergetic": energy.hyperenergetic_direct,
    }


def _keep(row: Dict[str, Any], row_filter: EnumerationFilter) -> bool:
    if row_filter == EnumerationFilter.RAMANUJAN:
        return row["ramanujan"]
    if row_filter == EnumerationFilter.COMPLEMENT_RAMANUJAN:
        return row["complement_ramanujan"]
    if row_filter == EnumerationFilter.HYPERENERGETIC:
        return row["hyperenergetic"]
    return True


def enumerate_rows(
    max_order: int,
    row_filter: EnumerationFilter = EnumerationFilter.ALL,
    strict: bool = True,
    zn_only: bool = False,
    workers: Optional[int] = None,
) -> List[Dict[str, Any]]:
    """Classification rows for every ring up to ``max_order``, in enumeration order
    whatever order the workers finish in."""
    specs = labelled_specs(max_order, strict=strict, zn_only=zn_only)
    workers = workers or get_settings().workers
    logger.info("classifying {} rings with {} workers", len(specs), workers)
    with ThreadPoolExecutor(max_workers=workers) as executor:
        rows = list(executor.map(enumeration_row, specs))
    row_filter = EnumerationFilter(row_filter)
    return [row for row in rows if _keep(row, row_filter)]
