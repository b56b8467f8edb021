import csv
import io
import json
from typing import Any, Dict, List, Sequence

from uc_spectra.models.report import ReportDoc, SuiteResult
from uc_spectra.models.spectrum import Spectrum

MAX_LISTED_FAILURES = 10


def to_json(document: Any) -> str:
    return json.dumps(document, ensure_ascii=False, indent=2)


def render_rows_csv(rows: Sequence[Dict[str, Any]], columns: Sequence[str]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({column: _cell(row.get(column)) for column in columns})
    return buffer.getvalue()


def render_rows_table(rows: Sequence[Dict[str, Any]], columns: Sequence[str]) -> str:
    cells = [list(columns)] + [[_cell(row.get(column)) for column in columns] for row in rows]
    widths = [max(len(line[i]) for line in cells) for i in range(len(columns))]
    lines = ["  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip() for line in cells]
    lines.insert(1, "  ".join("-" * width for width in widths))
    return "\n".join(lines) + "\n"


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render_spectrum_inline(spectrum: Spectrum) -> str:
    return "{" + ", ".join(f"{value}:{mult}" for value, mult in spectrum.entries) + "}"


def render_report_csv(doc: ReportDoc) -> str:
    rows: List[Dict[str, Any]] = [
        {"graph": kind, "value": value, "mult": mult}
        for kind, spectrum in doc.spectra.items()
        for value, mult in spectrum.entries
    ]
    return render_rows_csv(rows, ("graph", "value", "mult"))


def render_report_table(doc: ReportDoc) -> str:
    lines = [
        f"ring        {doc.ring}",
        f"order       {doc.order}",
        f"units       {doc.unit_count}",
        f"factors     {doc.s}",
        "",
    ]
    for kind, spectrum in doc.spectra.items():
        lines.append(f"spectrum({kind})  {render_spectrum_inline(spectrum)}")
    lines.append("")
    for kind, by_method in doc.verdicts.items():
        for method, verdict in by_method.items():
            detail = verdict.case_label or (
                f"witness {verdict.witness}" if verdict.witness is not None else ""
            )
            if verdict.vacuous:
                detail = "vacuous"
            lines.append(
                f"ramanujan({kind}, {method})  {_cell(verdict.ramanujan)}  {detail}".rstrip()
            )
    lines.append("")
    energy = doc.energy
    lines.append(f"energy(L)   {energy.energy}  [{energy.branch.value}]")
    lines.append(
        f"hyperenergetic  direct={_cell(energy.hyperenergetic_direct)} "
        f"corollary={_cell(energy.hyperenergetic_corollary)}"
    )
    for kind, values in doc.moments.items():
        lines.append(f"moments({kind})  {' '.join(str(v) for v in values)}")
    for kind, counts in doc.cycles.items():
        lines.append(f"cycles({kind})  triangles={counts['3']} quadrangles={counts['4']}")
    if doc.oracle is not None:
        lines.append("")
        for check in doc.oracle:
            lines.append(f"oracle {check.name}  {'ok' if check.ok else 'MISMATCH'}")
    return "\n".join(lines) + "\n"


def render_suite(result: SuiteResult) -> str:
    lines = [
        f"[{result.suite}] checked {result.checked} specs, {len(result.failures)} mismatches"
    ]
    for failure in result.failures[:MAX_LISTED_FAILURES]:
        lines.append(f"  FAIL {failure}")
    if result.findings:
        lines.append(f"[{result.suite}] {len(result.findings)} findings")
        for finding in result.findings[:MAX_LISTED_FAILURES]:
            lines.append(f"  FINDING {finding}")
    return "\n".join(lines) + "\n"
