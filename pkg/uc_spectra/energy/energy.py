from typing import List, Optional

from loguru import logger

from uc_spectra import exact_div
from uc_spectra.models.energy import EnergyBranch, EnergyReport, HyperenergeticCase
from uc_spectra.models.report import AuditRow
from uc_spectra.models.ring import RingSpec
from uc_spectra.models.spectrum import Spectrum
from uc_spectra.rings.numbers import integer_log, totient
from uc_spectra.rings.spec import enumerate_specs


def energy_of(spectrum: Spectrum) -> int:
    return spectrum.energy()


def line_order(spec: RingSpec) -> int:
    return exact_div(spec.order * spec.unit_count, 2, "line graph order")


def _is_f2_power_times_f3(spec: RingSpec) -> bool:
    *heads, last = spec.descriptors
    return last == (3, 1) and all(descriptor == (2, 1) for descriptor in heads)


def energy_branch(spec: RingSpec) -> EnergyBranch:
    residue_two = spec.residue_two_count
    if residue_two == spec.s or _is_f2_power_times_f3(spec):
        return EnergyBranch.RESIDUE_TWO
    if residue_two >= 1:
        return EnergyBranch.MIXED
    return EnergyBranch.RESIDUE_AT_LEAST_THREE


def hyperenergetic_corollary_case(spec: RingSpec) -> Optional[HyperenergeticCase]:
    units = spec.unit_count
    if units >= 4:
        return HyperenergeticCase.UNIT_COUNT
    if spec.is_local:
        (factor,) = spec.factors
        if factor.order == 2 * factor.ideal_order and factor.order >= 8:
            return HyperenergeticCase.LOCAL
    elif spec.residue_two_count == spec.s and units >= 2:
        return HyperenergeticCase.RESIDUE_TWO
    return None


def is_hyperenergetic(energy: int, vertex_count: int) -> bool:
    return energy > 2 * (vertex_count - 1)


def line_energy(spec: RingSpec) -> EnergyReport:
    """Energy of L(G_R) from the piecewise closed form, with both hyperenergetic
    predicates evaluated independently."""
    units, order = spec.unit_count, spec.order
    branch = energy_branch(spec)
    if branch == EnergyBranch.RESIDUE_TWO:
        energy = 2 ** (spec.s + 1) * (units - 1) ** 2
    elif branch == EnergyBranch.MIXED:
        energy = 2 ** (spec.residue_two_count + 1) + 2 * order * (units - 2)
    else:
        energy = 2 * order * (units - 2)
    vertices = line_order(spec)
    case = hyperenergetic_corollary_case(spec)
    return EnergyReport(
        energy=energy,
        branch=branch,
        line_order=vertices,
        hyperenergetic_direct=is_hyperenergetic(energy, vertices),
        hyperenergetic_corollary=case is not None,
        corollary_case=case,
    )


def line_energy_zn(n: int) -> int:
    """Line-graph energy for Z/n straight from n and phi(n)."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if n == 3:
        return 4
    if n == 6:
        return 8
    exponent = integer_log(n, 2)
    if exponent is not None:
        return 4 * (2 ** (exponent - 1) - 1) ** 2
    if n % 2 == 0:
        return 4 + 2 * n * (totient(n) - 2)
    return 2 * n * (totient(n) - 2)


def audit_row(spec: RingSpec, report: EnergyReport, oracle_energy: Optional[int] = None) -> AuditRow:
    return AuditRow(
        ring=spec.render(),
        descriptors=tuple(spec.descriptors),
        order=spec.order,
        unit_count=spec.unit_count,
        energy=report.energy,
        line_order=report.line_order,
        hyper_direct=report.hyperenergetic_direct,
        hyper_corollary=report.hyperenergetic_corollary,
        corollary_case=report.corollary_case.value if report.corollary_case else None,
        oracle_energy=oracle_energy,
    )


def hyperenergetic_audit(max_order: int, strict: bool = True) -> List[AuditRow]:
    """Every ring up to ``max_order`` where the corollary's hyperenergetic predicate
    disagrees with the definition E(L) > 2(n - 1)."""
    rows = []
    for spec in enumerate_specs(max_order, strict=strict):
        report = line_energy(spec)
        if not report.hyperenergetic_agrees:
            logger.warning(
                "hyperenergetic predicates disagree for {}: direct={} corollary={}",
                spec.render(),
                report.hyperenergetic_direct,
                report.hyperenergetic_corollary,
            )
            rows.append(audit_row(spec, report))
    return rows
