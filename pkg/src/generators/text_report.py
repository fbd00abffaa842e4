"""Plain-text and JSON rendering of verification reports."""

import json

from src.calculators.verification import VerificationResult


def format_table(rows: list[list[str]]) -> str:
    if not rows:
        return ""
    widths = [max(len(str(row[k])) for row in rows if k < len(row)) for k in range(len(rows[0]))]
    lines = []
    for index, row in enumerate(rows):
        lines.append("  ".join(str(v).ljust(w) for v, w in zip(row, widths)).rstrip())
        if index == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)


def render_text(result: VerificationResult, show_tables: bool = True) -> str:
    """One line per check, witnesses indented under failures."""
    params = " ".join(f"{k}={v}" for k, v in result.parameters.items())
    lines = [f"suite {result.suite} {params}".rstrip()]
    for check in result.checks:
        status = "SKIP" if check.skipped else ("PASS" if check.passed else "FAIL")
        lines.append(f"  [{status}] {check.check_id}: {check.formula}")
        if not check.passed and check.witness:
            lines.append(f"         witness: {check.witness}")
    if show_tables:
        for name, rows in result.tables.items():
            lines.append("")
            lines.append(f"{name}:")
            lines.append(format_table(rows))
    lines.append("")
    lines.append(
        f"{result.pass_count} passed, {result.fail_count} failed, {result.skip_count} skipped"
        f" -> {'PASS' if result.passed else 'FAIL'}"
    )
    return "\n".join(lines)


def render_json(result: VerificationResult) -> str:
    return json.dumps(result.to_dict(), indent=2)
