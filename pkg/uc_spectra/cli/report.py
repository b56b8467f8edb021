"""Builds the per-ring report: closed forms for every quantity, optionally checked
against the brute-force oracle."""

import re
from typing import Any, Dict, List, Optional

from uc_spectra.energy.energy import energy_of, line_energy, line_energy_zn
from uc_spectra.energy.moments import cycle_count, moment_line, moment_unitary
from uc_spectra.models.graph import GraphKind
from uc_spectra.models.report import OracleCheck, ReportDoc
from uc_spectra.models.ring import RingSpec
from uc_spectra.models.spectrum import Spectrum
from uc_spectra.oracle.concrete import realize_ring
from uc_spectra.oracle.graph import (
    Graph,
    cayley_graph,
    connected_components,
    count_cycles,
    exact_moment,
    integral_spectrum,
    transform,
)
from uc_spectra.ramanujan.check import ramanujan_check
from uc_spectra.ramanujan.classifier import classify_complement, classify_unitary
from uc_spectra.ramanujan.zn import classify_zn
from uc_spectra.spectra.closed_form import (
    component_count,
    spectrum_complement,
    spectrum_line,
    spectrum_unitary,
)

_SINGLE_MODULUS = re.compile(r"^\s*Z/([0-9]+)\s*$")

DEFAULT_MOMENTS = 4
GRAPH_KINDS = (GraphKind.UNITARY, GraphKind.COMPLEMENT, GraphKind.LINE)


def single_modulus(ring_expr: str) -> Optional[int]:
    """n when the expression is exactly ``Z/n``."""
    match = _SINGLE_MODULUS.match(ring_expr)
    return int(match.group(1)) if match else None


def _zn_section(n: int, unitary_case: Optional[str], complement_case: Optional[str]) -> Dict[str, Any]:
    unitary = classify_zn(n, GraphKind.UNITARY)
    complement = classify_zn(n, GraphKind.COMPLEMENT)
    return {
        "n": n,
        "unitary": unitary.to_json_dict(),
        "complement": complement.to_json_dict(),
        "line_energy": line_energy_zn(n),
        "match": {
            "unitary": f"{unitary.case_label or '-'}/{unitary_case or '-'}",
            "complement": f"{complement.case_label or '-'}/{complement_case or '-'}",
        },
    }


def _oracle_checks(spec: RingSpec, doc_spectra: Dict[str, Spectrum], moments: int) -> List[OracleCheck]:
    graphs: Dict[GraphKind, Graph] = {GraphKind.UNITARY: cayley_graph(realize_ring(spec))}
    graphs[GraphKind.COMPLEMENT] = transform(graphs[GraphKind.UNITARY], GraphKind.COMPLEMENT)
    graphs[GraphKind.LINE] = transform(graphs[GraphKind.UNITARY], GraphKind.LINE)

    checks = []
    for kind in GRAPH_KINDS:
        checks.append(
            OracleCheck(
                name=f"spectrum.{kind.value}",
                expected=doc_spectra[kind.value].to_json_dict(),
                actual=integral_spectrum(graphs[kind]).to_json_dict(),
            )
        )
    for kind, closed_form in ((GraphKind.UNITARY, moment_unitary), (GraphKind.LINE, moment_line)):
        checks.append(
            OracleCheck(
                name=f"moments.{kind.value}",
                expected=[closed_form(spec, k) for k in range(moments + 1)],
                actual=[exact_moment(graphs[kind], k) for k in range(moments + 1)],
            )
        )
        for length in (3, 4):
            checks.append(
                OracleCheck(
                    name=f"cycles.{kind.value}.{length}",
                    expected=cycle_count(spec, kind, length),
                    actual=count_cycles(graphs[kind], length),
                )
            )
    checks.append(
        OracleCheck(
            name="components",
            expected=component_count(spec),
            actual=connected_components(graphs[GraphKind.UNITARY]),
        )
    )
    checks.append(
        OracleCheck(
            name="energy.line",
            expected=line_energy(spec).energy,
            actual=energy_of(integral_spectrum(graphs[GraphKind.LINE])),
        )
    )
    return checks


def build_report(
    spec: RingSpec,
    moments: int = DEFAULT_MOMENTS,
    oracle: bool = False,
    modulus: Optional[int] = None,
) -> ReportDoc:
    spectra = {
        GraphKind.UNITARY.value: spectrum_unitary(spec),
        GraphKind.COMPLEMENT.value: spectrum_complement(spec),
        GraphKind.LINE.value: spectrum_line(spec),
    }
    units = spec.unit_count
    complement_degree = spec.order - 1 - units
    unitary_theorem = classify_unitary(spec)
    complement_theorem = classify_complement(spec)
    verdicts = {
        GraphKind.UNITARY.value: {
            "direct": ramanujan_check(spectra[GraphKind.UNITARY.value], units),
            "theorem": unitary_theorem,
        },
        GraphKind.COMPLEMENT.value: {
            "direct": ramanujan_check(spectra[GraphKind.COMPLEMENT.value], complement_degree),
            "theorem": complement_theorem,
        },
    }
    return ReportDoc(
        ring=spec.render(),
        order=spec.order,
        unit_count=units,
        s=spec.s,
        spectra=spectra,
        verdicts=verdicts,
        energy=line_energy(spec),
        moments={
            GraphKind.UNITARY.value: [moment_unitary(spec, k) for k in range(1, moments + 1)],
            GraphKind.LINE.value: [moment_line(spec, k) for k in range(1, moments + 1)],
        },
        cycles={
            kind.value: {str(length): cycle_count(spec, kind, length) for length in (3, 4)}
            for kind in (GraphKind.UNITARY, GraphKind.LINE)
        },
        zn=(
            _zn_section(modulus, unitary_theorem.case_label, complement_theorem.case_label)
            if modulus is not None
            else None
        ),
        oracle=_oracle_checks(spec, spectra, moments) if oracle else None,
    )
