"""Verification suites: every closed form against the oracle, the classifiers against
the direct Ramanujan test, and the Z/n corollaries against the general theorems."""

from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from math import prod
from typing import Callable, List, Optional, Sequence, Tuple, TypeVar

from loguru import logger

from uc_spectra.energy.energy import (
    energy_of,
    hyperenergetic_audit,
    is_hyperenergetic,
    line_energy,
    line_energy_zn,
)
from uc_spectra.energy.moments import cycle_count, moment_line, moment_unitary
from uc_spectra.models.graph import GraphKind
from uc_spectra.models.report import SuiteResult
from uc_spectra.models.ring import RingSpec
from uc_spectra.oracle.concrete import realize_ring
from uc_spectra.oracle.graph import (
    cayley_graph,
    connected_components,
    count_cycles,
    exact_moment,
    integral_spectrum,
    is_complete_multipartite,
    tensor_cayley_graph,
    transform,
)
from uc_spectra.ramanujan.check import ramanujan_check
from uc_spectra.ramanujan.classifier import classify_complement, classify_unitary
from uc_spectra.ramanujan.zn import COMPLEMENT_EXCEPTIONS, classify_zn
from uc_spectra.rings.numbers import prime_powers_up_to
from uc_spectra.rings.spec import canonicalize, enumerate_specs, from_modulus
from uc_spectra.settings import get_settings
from uc_spectra.spectra.closed_form import (
    component_count,
    spectrum_complement,
    spectrum_line,
    spectrum_unitary,
)

Item = TypeVar("Item")
Outcome = Tuple[List[str], List[str]]  # failures, findings

ORACLE_RAMANUJAN_BOUND = 64
ORACLE_ENERGY_BOUND = 40
COMPLEMENT_SET_BOUND = 1000
MAX_MOMENT = 8


class Suite(str, Enum):
    SPECTRA = "spectra"
    MOMENTS = "moments"
    RAMANUJAN = "ramanujan"
    ENERGY = "energy"
    CYCLES = "cycles"
    ZN = "zn"
    ALL = "all"


DEFAULT_BOUNDS = {
    Suite.SPECTRA: 64,
    Suite.MOMENTS: 64,
    Suite.RAMANUJAN: 5000,
    Suite.ENERGY: 200,
    Suite.CYCLES: 40,
    Suite.ZN: 2000,
}


def _fan_out(
    suite: Suite,
    items: Sequence[Item],
    check: Callable[[Item], Outcome],
    workers: Optional[int],
) -> SuiteResult:
    workers = workers or get_settings().workers
    logger.info("suite {}: checking {} items with {} workers", suite.value, len(items), workers)
    failures: List[str] = []
    findings: List[str] = []
    with ThreadPoolExecutor(max_workers=workers) as executor:
        for item_failures, item_findings in executor.map(check, items):
            failures.extend(item_failures)
            findings.extend(item_findings)
    logger.info("suite {}: {} failures, {} findings", suite.value, len(failures), len(findings))
    return SuiteResult(
        suite=suite.value,
        checked=len(items),
        failures=tuple(failures),
        findings=tuple(findings),
    )


def _mismatch(spec: RingSpec, what: str, closed, oracle) -> str:
    return f"{spec.render()}: {what} closed={closed} oracle={oracle}"


def _realizable(max_order: int) -> List[RingSpec]:
    return list(enumerate_specs(max_order, strict=True))


def check_spectra(spec: RingSpec) -> Outcome:
    failures: List[str] = []
    ring = realize_ring(spec)
    unitary = cayley_graph(ring)
    if unitary.degree != spec.unit_count:
        failures.append(_mismatch(spec, "degree", spec.unit_count, unitary.degree))
    for kind, closed_form in (
        (GraphKind.UNITARY, spectrum_unitary),
        (GraphKind.COMPLEMENT, spectrum_complement),
        (GraphKind.LINE, spectrum_line),
    ):
        expected = closed_form(spec)
        actual = integral_spectrum(transform(unitary, kind))
        if expected != actual:
            failures.append(
                _mismatch(spec, f"{kind.value} spectrum", expected.entries, actual.entries)
            )
    components = connected_components(unitary)
    if components != component_count(spec):
        failures.append(_mismatch(spec, "components", component_count(spec), components))
    if not tensor_cayley_graph(ring).same_edges(unitary):
        failures.append(f"{spec.render()}: G_R differs from the tensor product of its factors")
    if spec.is_local:
        (factor,) = spec.factors
        if not is_complete_multipartite(unitary, factor.residue, factor.ideal_order):
            failures.append(f"{spec.render()}: G_R is not complete multipartite")
    return failures, []


def check_moments(spec: RingSpec, max_k: int = MAX_MOMENT) -> Outcome:
    failures: List[str] = []
    unitary = cayley_graph(realize_ring(spec))
    line = transform(unitary, GraphKind.LINE)
    closed_unitary, closed_line = spectrum_unitary(spec), spectrum_line(spec)
    singles = [canonicalize([factor]) for factor in spec.factors]
    for k in range(max_k + 1):
        expected = moment_unitary(spec, k)
        for what, actual in (
            ("trace", exact_moment(unitary, k)),
            ("spectrum", closed_unitary.moment(k)),
            ("tensor", prod(moment_unitary(single, k) for single in singles)),
        ):
            if expected != actual:
                failures.append(_mismatch(spec, f"unitary moment {k} ({what})", expected, actual))
        expected = moment_line(spec, k)
        for what, actual in (
            ("trace", exact_moment(line, k)),
            ("spectrum", closed_line.moment(k)),
        ):
            if expected != actual:
                failures.append(_mismatch(spec, f"line moment {k} ({what})", expected, actual))
    return failures, []


def check_ramanujan(spec: RingSpec, oracle: bool = False) -> Outcome:
    failures: List[str] = []
    units = spec.unit_count
    complement_degree = spec.order - 1 - units
    spectra = {
        GraphKind.UNITARY: (spectrum_unitary(spec), units, classify_unitary(spec)),
        GraphKind.COMPLEMENT: (
            spectrum_complement(spec),
            complement_degree,
            classify_complement(spec),
        ),
    }
    graph = None
    if oracle and spec.is_realizable and spec.order <= ORACLE_RAMANUJAN_BOUND:
        graph = cayley_graph(realize_ring(spec))
    for kind, (spectrum, degree, theorem) in spectra.items():
        direct = ramanujan_check(spectrum, degree)
        if direct.ramanujan != theorem.ramanujan:
            failures.append(
                f"{spec.render()}: {kind.value} theorem says {theorem.ramanujan} "
                f"({theorem.case_label}), direct says {direct.ramanujan} (witness {direct.witness})"
            )
        if graph is not None:
            observed = ramanujan_check(integral_spectrum(transform(graph, kind)), degree)
            if observed.ramanujan != theorem.ramanujan:
                failures.append(
                    _mismatch(spec, f"{kind.value} ramanujan", theorem.ramanujan, observed.ramanujan)
                )
    return failures, []


def check_energy(spec: RingSpec, oracle: bool = False) -> Outcome:
    failures: List[str] = []
    report = line_energy(spec)
    from_spectrum = energy_of(spectrum_line(spec))
    if report.energy != from_spectrum:
        failures.append(f"{spec.render()}: line energy {report.energy}, spectrum gives {from_spectrum}")
    if report.hyperenergetic_direct != is_hyperenergetic(from_spectrum, report.line_order):
        failures.append(f"{spec.render()}: direct hyperenergetic flag inconsistent with energy")
    if oracle and spec.is_realizable and spec.order <= ORACLE_ENERGY_BOUND:
        line = transform(cayley_graph(realize_ring(spec)), GraphKind.LINE)
        oracle_energy = energy_of(integral_spectrum(line))
        if oracle_energy != report.energy:
            failures.append(_mismatch(spec, "line energy", report.energy, oracle_energy))
    return failures, []


def audit_findings(max_order: int, strict: bool = True) -> List[str]:
    return [
        f"{row.ring}: energy {row.energy} on {row.line_order} vertices, "
        f"direct={row.hyper_direct} corollary={row.hyper_corollary} ({row.corollary_case})"
        for row in hyperenergetic_audit(max_order, strict=strict)
    ]


def check_cycles(spec: RingSpec) -> Outcome:
    failures: List[str] = []
    unitary = cayley_graph(realize_ring(spec))
    graphs = {GraphKind.UNITARY: unitary, GraphKind.LINE: transform(unitary, GraphKind.LINE)}
    for kind, graph in graphs.items():
        for length in (3, 4):
            expected = cycle_count(spec, kind, length)
            actual = count_cycles(graph, length)
            if expected != actual:
                failures.append(_mismatch(spec, f"{kind.value} {length}-cycles", expected, actual))
    if 6 * cycle_count(spec, GraphKind.UNITARY, 3) != moment_unitary(spec, 3):
        failures.append(f"{spec.render()}: triangle count disagrees with the third moment")
    return failures, []


def check_zn(n: int) -> Outcome:
    failures: List[str] = []
    spec = from_modulus(n)
    for kind, general in (
        (GraphKind.UNITARY, classify_unitary(spec)),
        (GraphKind.COMPLEMENT, classify_complement(spec)),
    ):
        corollary = classify_zn(n, kind)
        if corollary.ramanujan != general.ramanujan:
            failures.append(
                f"Z/{n}: {kind.value} corollary {corollary.ramanujan} ({corollary.case_label}) "
                f"vs theorem {general.ramanujan} ({general.case_label})"
            )
    if line_energy_zn(n) != line_energy(spec).energy:
        failures.append(f"Z/{n}: line energy {line_energy_zn(n)} vs {line_energy(spec).energy}")
    return failures, []


def _complement_set_failures(max_n: int) -> List[str]:
    bound = min(max_n, COMPLEMENT_SET_BOUND)
    observed = {n for n in range(2, bound + 1) if classify_complement(from_modulus(n)).ramanujan}
    expected = set(prime_powers_up_to(bound)) | {n for n in COMPLEMENT_EXCEPTIONS if n <= bound}
    failures = []
    if observed != expected:
        failures.append(
            f"complement-Ramanujan n <= {bound}: unexpected {sorted(observed - expected)}, "
            f"missing {sorted(expected - observed)}"
        )
    for n, expected_verdict in ((12, True), (140, True), (105, False)):
        if n <= max_n and classify_unitary(from_modulus(n)).ramanujan != expected_verdict:
            failures.append(f"Z/{n}: expected ramanujan={expected_verdict}")
    return failures


def run_suite(
    suite: Suite,
    max_order: Optional[int] = None,
    oracle: bool = False,
    strict: bool = True,
    strict_paper: bool = False,
    workers: Optional[int] = None,
) -> List[SuiteResult]:
    suite = Suite(suite)
    if suite == Suite.ALL:
        results: List[SuiteResult] = []
        for each in DEFAULT_BOUNDS:
            bound = DEFAULT_BOUNDS[each] if max_order is None else min(max_order, DEFAULT_BOUNDS[each])
            results.extend(run_suite(each, bound, oracle, strict, strict_paper, workers))
        return results

    bound = max_order if max_order is not None else DEFAULT_BOUNDS[suite]
    if suite == Suite.ZN:
        result = _fan_out(suite, list(range(2, bound + 1)), check_zn, workers)
        extra = _complement_set_failures(bound)
        return [result.copy(update={"failures": result.failures + tuple(extra)})]

    if suite == Suite.SPECTRA:
        return [_fan_out(suite, _realizable(bound), check_spectra, workers)]
    if suite == Suite.MOMENTS:
        return [_fan_out(suite, _realizable(bound), check_moments, workers)]
    if suite == Suite.CYCLES:
        return [_fan_out(suite, _realizable(bound), check_cycles, workers)]
    specs = list(enumerate_specs(bound, strict=strict))
    if suite == Suite.RAMANUJAN:
        return [_fan_out(suite, specs, lambda spec: check_ramanujan(spec, oracle), workers)]
    result = _fan_out(suite, specs, lambda spec: check_energy(spec, oracle), workers)
    disagreements = tuple(audit_findings(bound, strict=strict))
    if strict_paper:
        return [result.copy(update={"failures": result.failures + disagreements})]
    return [result.copy(update={"findings": result.findings + disagreements})]
