"""Per-task score reports: the TSV interchange format between the
evaluate and significance commands.

Format: comment header lines `# method: LABEL` (plus free-form `# key:
value` metadata), then one `task<TAB>score` line per task. The aggregate
is always recomputed as the arithmetic mean of the task scores.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import IO

from .errors import EmptyInput, IoFailure, TaskMismatch
from .metrics import TTestResult, paired_t_test_one_tailed


@dataclass(frozen=True)
class RunReport:
    method: str
    per_task: tuple[tuple[str, float], ...]
    metadata: dict[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.per_task:
            raise EmptyInput("report has no task rows")
        names = [name for name, _ in self.per_task]
        if len(set(names)) != len(names):
            raise ValueError("duplicate task names in report")
        if any(not math.isfinite(score) for _, score in self.per_task):
            raise ValueError("non-finite score in report")

    @property
    def aggregate(self) -> float:
        return sum(score for _, score in self.per_task) / len(self.per_task)

    def scores_by_task(self) -> dict[str, float]:
        return dict(self.per_task)


def write_report(report: RunReport, stream: IO[str]) -> None:
    stream.write(f"# method: {report.method}\n")
    for key, value in report.metadata.items():
        stream.write(f"# {key}: {value}\n")
    for name, score in report.per_task:
        stream.write(f"{name}\t{score:.10g}\n")


def save_report(report: RunReport, path: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            write_report(report, fh)
    except OSError as exc:
        raise IoFailure(f"cannot write report {path}: {exc}") from exc


def parse_report(stream: IO[str], source: str = "<stream>") -> RunReport:
    method = "unknown"
    metadata: dict[str, str] = {}
    rows: list[tuple[str, float]] = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.rstrip("\n").rstrip("\r")
        if not line.strip():
            continue
        if line.lstrip().startswith("#"):
            body = line.lstrip()[1:].strip()
            if ":" in body:
                key, value = body.split(":", 1)
                key, value = key.strip(), value.strip()
                if key == "method":
                    method = value
                elif key:
                    metadata[key] = value
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise IoFailure(
                f"{source}:{lineno}: expected `task<TAB>score`, got {len(fields)} field(s)"
            )
        name = fields[0].strip()
        try:
            score = float(fields[1])
        except ValueError:
            raise IoFailure(f"{source}:{lineno}: score {fields[1]!r} is not a number") from None
        if not math.isfinite(score):
            raise IoFailure(f"{source}:{lineno}: non-finite score")
        if not name:
            raise IoFailure(f"{source}:{lineno}: empty task name")
        rows.append((name, score))
    if not rows:
        raise EmptyInput(f"{source}: report has no task rows")
    return RunReport(method=method, per_task=tuple(rows), metadata=metadata)


def load_report(path: str) -> RunReport:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_report(fh, source=path)
    except OSError as exc:
        raise IoFailure(f"cannot read report {path}: {exc}") from exc


def compare_reports(baseline: RunReport, treatment: RunReport) -> TTestResult:
    """Align tasks by name and run the paired one-tailed t-test with the
    alternative `treatment > baseline`. Task order follows the baseline
    report (the test is order-invariant; alignment is by name)."""
    base_scores = baseline.scores_by_task()
    treat_scores = treatment.scores_by_task()
    if set(base_scores) != set(treat_scores):
        missing = sorted(set(base_scores) ^ set(treat_scores))
        raise TaskMismatch(f"reports cover different tasks; unmatched: {missing}")
    names = [name for name, _ in baseline.per_task]
    return paired_t_test_one_tailed(
        [base_scores[n] for n in names],
        [treat_scores[n] for n in names],
    )
