"""
Text and machine-readable renderings of a RunReport.

The machine form is JSON with a fixed key order, rationals as canonical
"p/q" strings and absent values as null, so the same model always yields
byte-identical output.
"""

import json
from typing import Any, Dict, List, Optional

from algebra.rational import format_rational
from geometry.checks import IdentityReport, Witness
from report.runner import FAIL, PASS, RunReport

FORMATS = ("text", "machine")


def _rational(value) -> Optional[str]:
    return None if value is None else format_rational(value)


def _witness(witness: Optional[Witness]) -> Optional[Dict[str, Any]]:
    if witness is None:
        return None
    return {
        "index": list(witness.index),
        "residual": format_rational(witness.residual),
        "detail": witness.detail,
    }


def _report_witness(report: Optional[IdentityReport]) -> Optional[Dict[str, Any]]:
    return None if report is None else _witness(report.witness)


def to_document(run: RunReport) -> Dict[str, Any]:
    summary = run.summary
    return {
        "model": run.model_name,
        "dim": run.dim,
        "classification": {
            name: {"value": report.passed, "witness": _witness(report.witness)}
            for name, report in run.classification.reports().items()
        },
        "curvature": {
            "scal": format_rational(summary.scal),
            "constant_curvature": _rational(summary.constant_curvature),
            "holomorphic_curvature": _rational(summary.holomorphic_curvature),
            "eta_einstein": (None if summary.eta_einstein is None
                             else {"a": format_rational(summary.eta_einstein[0]),
                                   "b": format_rational(summary.eta_einstein[1])}),
            "pc_bochner_k": _rational(summary.pc_bochner_k),
        },
        "identities": [
            {
                "name": outcome.name,
                "status": outcome.status,
                "holds": outcome.holds,
                "witness": _report_witness(outcome.report),
            }
            for outcome in run.identities
        ],
        "implications": [
            {
                "name": check.name,
                "kind": check.kind,
                "statement": check.statement,
                "applicable": check.applicable,
                "hypothesis": check.hypothesis,
                "conclusion": check.conclusion,
                "status": check.status,
            }
            for check in run.implications
        ],
        "expectations": [
            {"flag": e.flag, "expected": e.expected, "actual": e.actual, "matched": e.matched}
            for e in run.expectations
        ],
        "overall": PASS if run.overall else FAIL,
    }


def format_machine(run: RunReport) -> str:
    return json.dumps(to_document(run), indent=2, ensure_ascii=False) + "\n"


def _yes_no(value: bool) -> str:
    return "true" if value else "false"


def _absent(value) -> str:
    return "absent" if value is None else format_rational(value)


def format_text(run: RunReport) -> str:
    """Human-readable report, one section per concern"""
    summary = run.summary
    lines: List[str] = [f"Model: {run.model_name} (dimension {run.dim})", "", "Classification:"]

    for name, report in run.classification.reports().items():
        line = f"  {name:<28} {_yes_no(report.passed)}"
        if not report.passed and report.witness is not None:
            line += f"  [{report.witness.describe()}]"
        lines.append(line)

    if summary.eta_einstein is None:
        eta_einstein = "absent"
    else:
        a, b = summary.eta_einstein
        eta_einstein = f"a = {format_rational(a)}, b = {format_rational(b)}"
    lines += [
        "",
        "Curvature:",
        f"  scal                         {format_rational(summary.scal)}",
        f"  constant curvature c         {_absent(summary.constant_curvature)}",
        f"  φ-sectional curvature H      {_absent(summary.holomorphic_curvature)}",
        f"  η-Einstein (a, b)            {eta_einstein}",
        f"  PC-Bochner k                 {_absent(summary.pc_bochner_k)}",
        "",
        "Identities:",
    ]

    for outcome in run.identities:
        line = f"  {outcome.name:<28} {outcome.status}"
        if outcome.holds is not None and outcome.status != PASS:
            line += f" ({_yes_no(outcome.holds)})"
        if outcome.report is not None and not outcome.report.passed:
            line += f"  [{outcome.report.witness.describe()}]"
        lines.append(line)

    lines += ["", "Implications:"]
    for check in run.implications:
        line = f"  {check.name:<40} {check.status}"
        if check.applicable:
            line += f"  (hypothesis {_yes_no(check.hypothesis)}, conclusion {_yes_no(check.conclusion)})"
        lines.append(line)

    if run.expectations:
        lines += ["", "Expectations:"]
        for e in run.expectations:
            verdict = PASS if e.matched else FAIL
            lines.append(f"  {e.flag:<28} expected {_yes_no(e.expected)}, got {_yes_no(e.actual)}: {verdict}")

    lines += ["", f"Overall: {PASS if run.overall else FAIL}"]
    return "\n".join(lines) + "\n"


def render(run: RunReport, fmt: str = "text") -> str:
    if fmt == "machine":
        return format_machine(run)
    if fmt == "text":
        return format_text(run)
    raise ValueError(f"unknown report format '{fmt}', expected one of {', '.join(FORMATS)}")
