"""
output.py

Everything the CLI writes.

    emit_csv(results, path)        sweep rows, header fixed by SWEEP_COLUMNS
    render_summary(config, ...)    human-readable header + table

CSV rows use a decimal point, no index column and "\\n" line endings
on every platform, so equal sweeps produce equal bytes.
"""

from pathlib import Path
from typing import Iterable, Sequence, TextIO
import sys

import click
import pandas as pd

from app.core.logger import log
from app.experiments import SWEEP_COLUMNS, SweepResult, TrialOutcome, hebbian_capacity


class OutputError(click.ClickException):
    """Output could not be written; exit status 3."""

    exit_code = 3

    def __init__(self, path, reason: str):
        self.path = str(path)
        super().__init__(f"cannot write '{self.path}': {reason}")


def sweep_frame(results: SweepResult | Iterable[SweepResult], extended: bool = False) -> pd.DataFrame:
    if isinstance(results, SweepResult):
        results = [results]
    frames = [result.to_frame(extended=extended) for result in results]
    if not frames:
        return pd.DataFrame(columns=SWEEP_COLUMNS)
    return pd.concat(frames, ignore_index=True)


def emit_csv(
    results: SweepResult | Iterable[SweepResult],
    path: str | Path | None = None,
    stream: TextIO | None = None,
) -> None:
    """
    Write sweep rows as CSV to `path`, or to `stream` (default stdout)
    when no path is given.

    Raises
    ------
    OutputError — the file cannot be opened or written
    """
    frame = sweep_frame(results)

    if path is None:
        out = stream if stream is not None else sys.stdout
        out.write(frame.to_csv(index=False, lineterminator="\n"))
        return

    try:
        frame.to_csv(path, index=False, lineterminator="\n", encoding="utf-8")
    except OSError as exc:
        raise OutputError(path, exc.strerror or str(exc)) from exc

    log("CSV_WRITTEN", layer="cli", path=str(path), rows=len(frame))


# ============================================================
# Summary
# ============================================================

def _header_lines(settings: dict) -> list[str]:
    width = max(len(key) for key in settings)
    return [f"# {key:<{width}} : {value}" for key, value in settings.items()]


def render_summary(
    settings: dict,
    results: Sequence[SweepResult] = (),
    outcome: TrialOutcome | None = None,
) -> str:
    """
    Header listing every effective setting (defaults included), followed
    by the sweep table or the single trial outcome.
    """
    lines = _header_lines(settings)

    n = settings.get("n")
    if isinstance(n, int) and n >= 2:
        lines.append(f"# hebbian capacity n/(2 ln n) ~ {hebbian_capacity(n):.1f}")

    if results:
        lines.append("")
        lines.append(sweep_frame(results, extended=True).to_string(index=False))

    if outcome is not None:
        lines.append("")
        lines.append(f"success        : {outcome.success}")
        lines.append(f"iterations     : {outcome.iterations}")
        lines.append(f"converged      : {outcome.converged}")
        lines.append(f"final_distance : {outcome.final_distance:.6g}")
        if outcome.singular:
            lines.append("singular       : True")
        if outcome.overflow:
            lines.append("overflow       : True")

    return "\n".join(lines) + "\n"
