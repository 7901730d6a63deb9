"""Rendering of reports, homology profiles and sweep results for the CLI."""

import json
from typing import Any

import pandas as pd
from rich.table import Table

from src.homology.profile import HomologyProfile
from src.models.report import ClassificationReport
from src.models.sweep import SweepResult

REPORT_ROWS = (
    "dimension",
    "n_facets",
    "pure",
    "well_covered",
    "s2",
    "s2_terai",
    "sr",
    "cohen_macaulay",
    "cohen_macaulay_all_fields",
    "buchsbaum",
    "buchsbaum_all_fields",
    "shellable",
    "vertex_decomposable",
    "strongly_connected",
)


def dump_json(data: Any) -> str:
    """Deterministic JSON: sorted keys, fixed indentation."""
    return json.dumps(data, indent=2, sort_keys=True)


def _cell(value: Any) -> str:
    if value is None:
        return "-"
    if value is True:
        return "[green]yes[/green]"
    if value is False:
        return "[red]no[/red]"
    if isinstance(value, dict):
        return ", ".join(f"{k}: {_cell(v)}" for k, v in sorted(value.items()))
    return str(value)


def report_table(report: ClassificationReport) -> Table:
    table = Table(title=f"Ind({report.subject})" if report.graph else report.subject)
    table.add_column("Property", style="cyan")
    table.add_column("Value")
    for name in REPORT_ROWS:
        value = getattr(report, name)
        label = f"{name} (inferred)" if name in report.inferred else name
        table.add_row(label, _cell(value))
    return table


def witness_table(report: ClassificationReport) -> Table:
    table = Table(title="Witnesses")
    table.add_column("Property", style="cyan")
    table.add_column("Kind")
    table.add_column("Detail")
    for witness in report.witnesses:
        table.add_row(witness.property, witness.kind.value, witness.summary())
    return table


def report_row(report: ClassificationReport) -> dict[str, Any]:
    """Flatten per-characteristic fields into ``name[k]`` columns."""
    row: dict[str, Any] = {"subject": report.subject}
    for name in REPORT_ROWS:
        value = getattr(report, name)
        if isinstance(value, dict):
            for k, v in sorted(value.items()):
                row[f"{name}[{k}]"] = v
        else:
            row[name] = value
    row["witnesses"] = len(report.witnesses)
    return row


def reports_csv(reports: list[ClassificationReport]) -> str:
    return pd.DataFrame([report_row(r) for r in reports]).to_csv(index=False)


def homology_data(profile: HomologyProfile, characteristics: list[int]) -> dict[str, Any]:
    return {
        "dims": [
            {
                "i": group.i,
                "rank": group.rank,
                "torsion": list(group.torsion),
                "betti": {str(k): profile.betti(group.i, k) for k in characteristics},
            }
            for group in profile.dims
        ]
    }


def homology_table(subject: str, profile: HomologyProfile, characteristics: list[int]) -> Table:
    table = Table(title=f"Reduced homology of {subject}")
    table.add_column("i", justify="right")
    table.add_column("H~_i", style="cyan")
    for k in characteristics:
        table.add_column(f"betti (char {k})", justify="right")
    for group in profile.dims:
        parts = [f"Z^{group.rank}"] if group.rank else []
        parts.extend(f"Z/{d}" for d in group.torsion)
        table.add_row(
            str(group.i),
            " + ".join(parts) or "0",
            *(str(profile.betti(group.i, k)) for k in characteristics),
        )
    return table


def homology_csv(profile: HomologyProfile, characteristics: list[int]) -> str:
    rows = []
    for entry in homology_data(profile, characteristics)["dims"]:
        row = {"i": entry["i"], "rank": entry["rank"], "torsion": " ".join(map(str, entry["torsion"]))}
        row.update({f"betti[{k}]": v for k, v in entry["betti"].items()})
        rows.append(row)
    return pd.DataFrame(rows).to_csv(index=False)


def sweep_table(results: list[SweepResult], timings: bool = False) -> Table:
    table = Table(title="Theorem sweeps")
    table.add_column("Theorem", style="cyan")
    table.add_column("Status")
    table.add_column("Instances", justify="right")
    table.add_column("Mismatches", justify="right")
    table.add_column("Timeouts", justify="right")
    table.add_column("Skipped", justify="right")
    if timings:
        table.add_column("Runtime (ms)", justify="right")
    for result in results:
        row = result.summary_row()
        status = "[green]pass[/green]" if result.passed else "[red]FAIL[/red]"
        cells = [
            row["theorem"],
            status,
            str(row["instances"]),
            str(row["mismatches"]),
            str(row["timeouts"]),
            str(row["skipped"]),
        ]
        if timings:
            cells.append(str(row["runtime_ms"]))
        table.add_row(*cells)
    return table


def mismatch_table(result: SweepResult, limit: int = 20) -> Table:
    table = Table(title=f"Mismatches in {result.theorem}")
    table.add_column("Parameters")
    table.add_column("Property", style="cyan")
    table.add_column("Predicted")
    table.add_column("Computed")
    for mismatch in result.mismatches[:limit]:
        table.add_row(
            json.dumps(mismatch.params, sort_keys=True),
            mismatch.property,
            str(mismatch.predicted),
            str(mismatch.computed),
        )
    return table


def stats_table(stats: dict[str, Any]) -> Table:
    table = Table(title="Cache")
    table.add_column("Statistic", style="cyan")
    table.add_column("Value", justify="right")
    for name, value in stats.items():
        table.add_row(name, str(value))
    return table
