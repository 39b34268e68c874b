"""Command logic shared by the CLI (in-process) and the FastAPI app.

Handlers accept a request model and return a response model; contract
violations raise HalfsibError subclasses for the caller to map onto an
exit code or HTTP status.
"""

from __future__ import annotations

import time
import warnings

from .. import published
from ..abtt import AbttConfig, abtt_postprocess
from ..datasets import (
    dataset_name,
    load_labeled_corpus,
    load_sentence_pairs,
    load_word_pairs,
)
from ..embeddings import (
    EmbeddingTable,
    load_embeddings,
    lowercase_fold,
    partition_vocab,
    read_word_list,
    save_embeddings,
)
from ..errors import HalfsibError
from ..harness import (
    LogRegConfig,
    eval_sentiment_cv,
    eval_sts,
    eval_word_similarity,
)
from ..hsr import HsrConfig, hsr_postprocess
from ..reports import RunReport, compare_reports, load_report
from .schemas import (
    EvaluateRequest,
    EvaluateResponse,
    PostprocessRequest,
    PostprocessResponse,
    ReportPayload,
    SignificanceRequest,
    SignificanceResponse,
    TaskFailure,
    TaskScore,
)


def load_table(path: str, expect_header: str = "auto", lowercase: bool = False) -> tuple[EmbeddingTable, list[str]]:
    """Load (and optionally case-fold) a table, capturing warning texts."""
    notes: list[str] = []
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        table = load_embeddings(path, expect_header=expect_header)
        if lowercase:
            table = lowercase_fold(table)
    notes.extend(str(w.message) for w in caught)
    return table, notes


def run_postprocess(req: PostprocessRequest) -> PostprocessResponse:
    start = time.perf_counter()
    table, notes = load_table(req.input_path, req.expect_header, req.lowercase)
    if req.method == "hsr-rr":
        stopwords = (
            read_word_list(req.stopwords_path)
            if req.stopwords_path
            else published.default_stopwords()
        )
        ranking = (
            read_word_list(req.freq_ranking_path)
            if req.freq_ranking_path
            else published.default_freq_ranking()
        )
        cfg = HsrConfig(alpha1=req.alpha1, alpha2=req.alpha2, feature_cap=req.top_content)
        partition = partition_vocab(table, stopwords, ranking, cfg.feature_cap)
        result = hsr_postprocess(table, partition, cfg, block=req.block)
        response = PostprocessResponse(
            method=req.method,
            vocab_size=len(result),
            dim=result.dim,
            function_count=len(partition.function_words),
            content_count=len(partition.content_words),
            feature_count=len(partition.content_features),
            wall_seconds=0.0,
            output_path=req.output_path,
            warnings=notes,
        )
    else:
        if req.d is None:
            raise ValueError("abtt requires the number of components to remove (d)")
        result = abtt_postprocess(table, AbttConfig(d=req.d))
        response = PostprocessResponse(
            method=req.method,
            vocab_size=len(result),
            dim=result.dim,
            components_removed=req.d,
            wall_seconds=0.0,
            output_path=req.output_path,
            warnings=notes,
        )
    save_embeddings(result, req.output_path, header=req.write_header, precision=req.precision)
    return response.model_copy(update={"wall_seconds": time.perf_counter() - start})


def run_evaluate(req: EvaluateRequest, table: EmbeddingTable | None = None) -> EvaluateResponse:
    if table is None:
        if not req.embeddings_path:
            raise ValueError("either embeddings_path or a resident table name is required")
        table, _ = load_table(req.embeddings_path, req.expect_header, req.lowercase)
    label = req.label or (dataset_name(req.embeddings_path) if req.embeddings_path else "table")
    rows: list[TaskScore] = []
    failures: list[TaskFailure] = []
    for path in req.data_paths:
        task = dataset_name(path)
        try:
            if req.task == "wordsim":
                ds = load_word_pairs(path)
                res = eval_word_similarity(table, ds)
                rows.append(
                    TaskScore(
                        task=task,
                        score=res.spearman_rho,
                        pairs_used=res.pairs_used,
                        pairs_skipped=res.pairs_skipped,
                    )
                )
            elif req.task == "sts":
                ds = load_sentence_pairs(path)
                res = eval_sts(table, ds)
                rows.append(
                    TaskScore(
                        task=task,
                        score=res.pearson_x100,
                        pairs_used=res.pairs_used,
                        pairs_skipped=res.pairs_skipped,
                    )
                )
            else:
                corpus = load_labeled_corpus(path)
                cfg = LogRegConfig(
                    l2_lambda=req.l2_lambda,
                    max_iters=req.max_iters,
                    tol=req.tol,
                    folds=req.folds,
                    shuffle_seed=req.seed,
                )
                cv = eval_sentiment_cv(table, corpus, cfg)
                rows.append(
                    TaskScore(
                        task=task,
                        score=cv.mean_accuracy,
                        per_fold=list(cv.per_fold),
                        examples_used=cv.examples_used,
                        examples_dropped=cv.examples_dropped,
                    )
                )
        except HalfsibError as exc:
            failures.append(
                TaskFailure(task=task, error=type(exc).__name__, message=str(exc))
            )
    aggregate = sum(r.score for r in rows) / len(rows) if rows else None
    return EvaluateResponse(
        method=label,
        task_type=req.task,
        rows=rows,
        aggregate=aggregate,
        failures=failures,
    )


def _resolve_report(path: str | None, inline: ReportPayload | None, side: str) -> RunReport:
    if (path is None) == (inline is None):
        raise ValueError(f"exactly one of {side}_path or inline {side} report is required")
    if path is not None:
        return load_report(path)
    return RunReport(method=inline.method, per_task=tuple((n, s) for n, s in inline.per_task))


def run_significance(req: SignificanceRequest) -> SignificanceResponse:
    baseline = _resolve_report(req.baseline_path, req.baseline, "baseline")
    treatment = _resolve_report(req.treatment_path, req.treatment, "treatment")
    result = compare_reports(baseline, treatment)
    text = (
        f"baseline : {baseline.method} ({len(baseline.per_task)} tasks)\n"
        f"treatment: {treatment.method}\n"
        f"alternative: treatment > baseline\n"
        f"t = {result.t_stat:.4g}\n"
        f"df = {result.df}\n"
        f"p = {result.p_one_tailed:.2e}"
    )
    return SignificanceResponse(
        baseline_method=baseline.method,
        treatment_method=treatment.method,
        tasks=len(baseline.per_task),
        t_stat=result.t_stat,
        df=result.df,
        p_one_tailed=result.p_one_tailed,
        mean_diff=result.mean_diff,
        text=text,
    )
