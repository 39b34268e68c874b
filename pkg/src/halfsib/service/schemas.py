"""Request/response models for the three commands plus the table registry.

The CLI marshals its arguments into these models and either executes the
matching handler in-process or posts the JSON to a running server; both
paths return the same response models.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field


class _Model(BaseModel):
    model_config = ConfigDict(extra="forbid")


# -------------------------------------------------------------- postprocess


class PostprocessRequest(_Model):
    input_path: str
    output_path: str
    method: Literal["hsr-rr", "abtt"]
    alpha1: float = 50.0
    alpha2: float = 50.0
    top_content: int = Field(default=1000, ge=1)
    stopwords_path: str | None = None
    freq_ranking_path: str | None = None
    d: int | None = Field(default=None, ge=0)
    lowercase: bool = False
    expect_header: Literal["auto", "yes", "no"] = "auto"
    write_header: bool = False
    precision: int = Field(default=6, ge=1, le=17)
    block: int = Field(default=4096, ge=1)


class PostprocessResponse(_Model):
    method: str
    vocab_size: int
    dim: int
    function_count: int | None = None
    content_count: int | None = None
    feature_count: int | None = None
    components_removed: int | None = None
    wall_seconds: float
    output_path: str
    warnings: list[str] = []


# ----------------------------------------------------------------- evaluate


class EvaluateRequest(_Model):
    embeddings_path: str | None = None
    table: str | None = None  # name of a server-resident table
    task: Literal["wordsim", "sts", "sentiment"]
    data_paths: list[str] = Field(min_length=1)
    label: str | None = None
    expect_header: Literal["auto", "yes", "no"] = "auto"
    lowercase: bool = False
    l2_lambda: float = Field(default=1e-4, ge=0)
    max_iters: int = Field(default=1000, ge=1)
    tol: float = Field(default=1e-8, gt=0)
    folds: int = Field(default=5, ge=2)
    seed: int = 42


class TaskScore(_Model):
    task: str
    score: float
    pairs_used: int | None = None
    pairs_skipped: int | None = None
    per_fold: list[float] | None = None
    examples_used: int | None = None
    examples_dropped: int | None = None


class TaskFailure(_Model):
    task: str
    error: str
    message: str


class EvaluateResponse(_Model):
    method: str
    task_type: str
    rows: list[TaskScore]
    aggregate: float | None = None
    failures: list[TaskFailure] = []


# ------------------------------------------------------------- significance


class ReportPayload(_Model):
    method: str
    per_task: list[tuple[str, float]] = Field(min_length=1)


class SignificanceRequest(_Model):
    baseline_path: str | None = None
    treatment_path: str | None = None
    baseline: ReportPayload | None = None
    treatment: ReportPayload | None = None


class SignificanceResponse(_Model):
    baseline_method: str
    treatment_method: str
    tasks: int
    t_stat: float
    df: int
    p_one_tailed: float
    mean_diff: float
    text: str  # printable three-line summary, identical in CLI and HTTP modes


# ------------------------------------------------------------ table registry


class TableLoadRequest(_Model):
    name: str = Field(min_length=1)
    path: str
    expect_header: Literal["auto", "yes", "no"] = "auto"
    lowercase: bool = False


class TableInfo(_Model):
    name: str
    vocab_size: int
    dim: int


class ErrorBody(_Model):
    error: str
    message: str
