"""
Plain-text rendering of check reports and component arrays.
"""

from typing import List

import numpy as np

from shared.models import CheckReport, Verdict

_MARKS = {Verdict.PASS: "ok", Verdict.FAIL: "FAIL", Verdict.INDETERMINATE: "??"}


def format_report(report: CheckReport) -> str:
    lines: List[str] = [
        f"manifold  {report.manifold}",
        f"structure {report.structure}",
        f"suite     {report.suite}",
        f"points    {report.points} (seed {report.seed}, skipped {report.skipped})",
        "",
    ]
    if report.records:
        width = max(len(r.name) for r in report.records)
        lines.append(f"{'check':<{width}}  {'max residual':>12}  {'tolerance':>9}  verdict")
        for r in report.records:
            lines.append(
                f"{r.name:<{width}}  {r.max_residual:>12.3e}  {r.tolerance:>9.1e}  {_MARKS[r.verdict]}"
            )
    else:
        lines.append("no checks were run")
    if report.erratum is not None:
        lines.append("")
        lines.append(f"closed Nijenhuis form guard: {report.erratum}")
    failed = [r.name for r in report.records if r.verdict != Verdict.PASS]
    lines.append("")
    lines.append("RESULT: PASS" if report.passed else f"RESULT: FAIL ({len(failed)} check(s) not passing)")
    lines.append(f"wall time {report.wall_time:.2f}s")
    return "\n".join(lines)


def format_array(name: str, array: np.ndarray) -> str:
    """Nonzero components, one per line, with 1-based indices."""
    array = np.asarray(array, dtype=float)
    lines = [f"{name} shape={array.shape}"]
    for idx in np.ndindex(array.shape):
        value = array[idx]
        if abs(value) > 1e-14:
            label = ",".join(str(i + 1) for i in idx)
            lines.append(f"  [{label}] = {value:.12g}")
    if len(lines) == 1:
        lines.append("  (all components vanish)")
    return "\n".join(lines)
