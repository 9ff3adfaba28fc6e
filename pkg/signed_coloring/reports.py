"""
Report generation: summary dictionaries, tables and text/JSON rendering.
"""

import json
import logging
from pathlib import Path
from typing import Any, Iterable, Optional

import pandas as pd

from .classify import ClassReport, ClassSample, ProbeReport, negative_edges, predicts_delta
from .models import IncidenceColoring, SignedGraph, VerificationReport

logger = logging.getLogger(__name__)

SAMPLE_COLUMNS = ["index", "signature", "negative_edges", "chi"]


def format_ratio(report: ClassReport) -> str:
    """Reduced fraction, with 1 and 0 written as 1/1 and 0/1."""
    return f"{report.ratio.numerator}/{report.ratio.denominator}"


def class_report_summary(report: ClassReport) -> dict[str, Any]:
    """
    Summary dictionary for ``classify`` and ``ratio`` output.

    Matching edges are reported as 1-indexed vertex pairs.
    """
    witness = None
    if report.witness_matching is not None:
        witness = [[u + 1, v + 1] for u, v in report.witness_matching]
    summary = {
        "delta": report.delta,
        "verdict": str(report.verdict),
        "classes_at_delta": report.classes_at_delta,
        "total_classes": report.total_classes,
        "ratio": format_ratio(report),
        "structural_2pm": report.structural_2pm,
        "witness_matching": witness,
        "naive": report.naive,
    }
    if report.ordinary_class_hint is not None:
        summary["ordinary_class_hint"] = report.ordinary_class_hint
    return summary


def probe_summary(report: ProbeReport) -> dict[str, Any]:
    return {
        "r": report.r,
        "samples": report.samples,
        "exhaustive": report.exhaustive,
        "predicted_delta": report.predicted_delta,
        "confirmed": report.confirmed,
        "proven_direction_checked": report.proven_direction_checked,
        "counterexamples": list(report.counterexamples),
        "proven_direction_violations": list(report.proven_direction_violations),
    }


def coloring_summary(
    sg: SignedGraph,
    coloring: IncidenceColoring,
    method: str,
    delta: int,
    valid: bool,
    chi: Optional[int] = None,
) -> dict[str, Any]:
    summary: dict[str, Any] = {"delta": delta}
    if chi is not None:
        summary["chi"] = chi
    summary.update(colors=coloring.n, method=method, valid=valid)
    return summary


def verification_summary(report: VerificationReport) -> dict[str, Any]:
    """Edge ids and vertices are reported 1-indexed, as in the files."""
    violations = []
    for v in report.violations:
        item = v.as_dict()
        for key in ("edge", "vertex"):
            if key in item:
                item[key] += 1
        violations.append(item)
    return {"valid": report.valid, "violations": violations}


def samples_table(samples: Iterable[ClassSample]) -> pd.DataFrame:
    """One row per enumerated signature."""
    rows = [
        {
            "index": s.index,
            "signature": str(s.signature),
            "negative_edges": " ".join(str(e + 1) for e in negative_edges(s.signature)),
            "chi": s.chi,
        }
        for s in samples
    ]
    return pd.DataFrame(rows, columns=SAMPLE_COLUMNS)


def class_report_table(report: ClassReport) -> pd.DataFrame:
    return samples_table(report.samples)


def probe_table(report: ProbeReport) -> pd.DataFrame:
    table = samples_table(report.rows)
    table["predicted_delta"] = [predicts_delta(report.r, s.signature) for s in report.rows]
    return table


def export_csv(table: pd.DataFrame, path: Path) -> None:
    table.to_csv(path, index=False)
    logger.info(f"Wrote {len(table)} rows to {path}")


def render_json(command: str, payload: dict[str, Any]) -> str:
    return json.dumps({"command": command, **payload}, sort_keys=False)


def render_text(command: str, payload: dict[str, Any]) -> str:
    """Human-readable single block of output for a CLI command."""
    if command in ("classify", "ratio"):
        if payload.get("verdict") is None:
            return f"structural_2pm={str(payload['structural_2pm']).lower()}"
        return f"class={payload['verdict']} ratio={payload['ratio']}"
    if command == "chromatic-index":
        return f"delta={payload['delta']} chi={payload['chi']}"
    if command == "color":
        return f"method={payload['method']} colors={payload['colors']} delta={payload['delta']}"
    if command == "verify":
        if payload["valid"]:
            return "valid"
        lines = ["invalid"]
        for v in payload["violations"]:
            where = f" edge={v['edge']}" if "edge" in v else f" vertex={v['vertex']}" if "vertex" in v else ""
            lines.append(f"  {v['kind']}{where}: {v['detail']}")
        return "\n".join(lines)
    if command == "probe-conjecture":
        return (
            f"r={payload['r']} samples={payload['samples']} exhaustive={str(payload['exhaustive']).lower()} "
            f"confirmed={payload['confirmed']}/{payload['predicted_delta']} "
            f"proven_direction_checked={payload['proven_direction_checked']} "
            f"counterexamples={len(payload['counterexamples'])}"
        )
    return " ".join(f"{k}={v}" for k, v in payload.items())
