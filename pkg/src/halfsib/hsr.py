"""Half-sibling ridge regression: predict one vector family from the other
and subtract the prediction, leaving the denoised residual.

Postprocessing runs two regressions. Step 1 regresses every content-word
vector on the function-word vectors and keeps the residual. Step 2
regresses the function-word vectors on the most frequent content-word
vectors (their ORIGINAL, un-postprocessed columns) and keeps the residual.
The output table carries the residual vector for every word.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.linalg import cho_factor, cho_solve

from .embeddings import EmbeddingTable, VocabPartition
from .errors import EmptyPartition, NumericalFailure, ShapeMismatch

DEFAULT_ALPHA = 50.0
DEFAULT_FEATURE_CAP = 1000
DEFAULT_BLOCK = 4096

THREADS_ENV = "HSR_NUM_THREADS"


@dataclass(frozen=True)
class HsrConfig:
    """Regularization constants and the content-feature cap."""

    alpha1: float = DEFAULT_ALPHA
    alpha2: float = DEFAULT_ALPHA
    feature_cap: int = DEFAULT_FEATURE_CAP

    def __post_init__(self) -> None:
        if not (self.alpha1 > 0 and self.alpha2 > 0):
            raise ValueError("regularization constants must be positive")
        if self.feature_cap < 1:
            raise ValueError("feature_cap must be >= 1")


@dataclass(frozen=True)
class RegressionWeights:
    """Ridge solution W (predictor_count x target_count) plus its alpha."""

    matrix: np.ndarray
    alpha: float
    predictor_count: int
    target_count: int

    def __post_init__(self) -> None:
        if self.matrix.shape != (self.predictor_count, self.target_count):
            raise ShapeMismatch(
                f"weight matrix shape {self.matrix.shape} does not match "
                f"{self.predictor_count} x {self.target_count}"
            )
        if not np.isfinite(self.matrix).all():
            raise NumericalFailure("weight matrix contains non-finite values")
        self.matrix.setflags(write=False)


def _num_threads() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _blocks(total: int, width: int) -> list[tuple[int, int]]:
    return [(lo, min(lo + width, total)) for lo in range(0, total, width)]


def _map_blocks(fn, spans: list[tuple[int, int]]) -> None:
    """Run fn(lo, hi) over spans; results land in preallocated arrays, so
    worker count never changes the output, only the wall time."""
    threads = _num_threads()
    if threads == 1 or len(spans) <= 1:
        for lo, hi in spans:
            fn(lo, hi)
        return
    with ThreadPoolExecutor(max_workers=threads) as pool:
        list(pool.map(lambda span: fn(*span), spans))


def ridge_weights(
    X: np.ndarray,
    Y: np.ndarray,
    alpha: float,
    block: int = DEFAULT_BLOCK,
) -> RegressionWeights:
    """Solve W = argmin |Y - XW|_F^2 + alpha |W|_F^2.

    Equivalently W = (X'X + alpha I)^-1 X'Y, computed via one Cholesky
    factorization of the SPD Gram matrix shared across all target columns
    (never via explicit inversion). Targets are processed in column
    blocks to bound peak memory.
    """
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    Xa = np.asarray(X, dtype=np.float64)
    Ya = np.asarray(Y, dtype=np.float64)
    if Xa.ndim != 2 or Ya.ndim != 2:
        raise ShapeMismatch("X and Y must be 2-D")
    if Xa.shape[0] != Ya.shape[0]:
        raise ShapeMismatch(f"row counts differ: X has {Xa.shape[0]}, Y has {Ya.shape[0]}")
    n, p = Xa.shape
    k = Ya.shape[1]
    if n < 1 or p < 1 or k < 1:
        raise ShapeMismatch("X and Y must be nonempty")
    gram = Xa.T @ Xa
    gram[np.diag_indices_from(gram)] += alpha
    try:
        factor = cho_factor(gram, lower=True, check_finite=True)
    except Exception as exc:  # LinAlgError or ValueError on NaN
        raise NumericalFailure(f"SPD factorization failed: {exc}") from exc
    W = np.empty((p, k), dtype=np.float64)

    def solve_block(lo: int, hi: int) -> None:
        rhs = Xa.T @ Ya[:, lo:hi]
        W[:, lo:hi] = cho_solve(factor, rhs, check_finite=False)

    _map_blocks(solve_block, _blocks(k, block))
    if not np.isfinite(W).all():
        raise NumericalFailure("ridge solution contains non-finite values")
    return RegressionWeights(matrix=W, alpha=float(alpha), predictor_count=p, target_count=k)


def denoise(
    Y: np.ndarray,
    X: np.ndarray,
    weights: RegressionWeights,
    block: int = DEFAULT_BLOCK,
) -> np.ndarray:
    """Residual Y - XW: the part of Y the predictors cannot explain."""
    Xa = np.asarray(X, dtype=np.float64)
    Ya = np.asarray(Y, dtype=np.float64)
    if Xa.ndim != 2 or Ya.ndim != 2:
        raise ShapeMismatch("X and Y must be 2-D")
    n, p = Xa.shape
    if Ya.shape[0] != n:
        raise ShapeMismatch(f"row counts differ: X has {n}, Y has {Ya.shape[0]}")
    if weights.predictor_count != p or weights.target_count != Ya.shape[1]:
        raise ShapeMismatch(
            f"weights are {weights.predictor_count} x {weights.target_count}, "
            f"need {p} x {Ya.shape[1]}"
        )
    out = np.empty_like(Ya)

    def subtract_block(lo: int, hi: int) -> None:
        out[:, lo:hi] = Ya[:, lo:hi] - Xa @ weights.matrix[:, lo:hi]

    _map_blocks(subtract_block, _blocks(Ya.shape[1], block))
    return out


def hsr_postprocess(
    table: EmbeddingTable,
    partition: VocabPartition,
    cfg: HsrConfig = HsrConfig(),
    block: int = DEFAULT_BLOCK,
) -> EmbeddingTable:
    """Run both regression steps and return a new table, word order intact.

    Step 1: W1 from function -> content, content residuals kept.
    Step 2: W2 from frequent-content -> function, function residuals kept;
    the frequent-content regressors are the ORIGINAL vectors, not the
    Step-1 residuals.
    """
    func_words = [w for w in table.words if w in partition.function_words]
    cont_words = [w for w in table.words if w in partition.content_words]
    if not func_words or not cont_words:
        raise EmptyPartition("both partition sides must be nonempty")
    features = [w for w in partition.content_features if w in table.index][: cfg.feature_cap]
    if not features:
        raise EmptyPartition("no content-feature word present in the table")

    Vx = table.columns(func_words)
    Vy = table.columns(cont_words)
    Vf = table.columns(features)  # original content vectors by contract

    w1 = ridge_weights(Vx, Vy, cfg.alpha1, block=block)
    Vy_hat = denoise(Vy, Vx, w1, block=block)
    w2 = ridge_weights(Vf, Vx, cfg.alpha2, block=block)
    Vx_hat = denoise(Vx, Vf, w2, block=block)

    out = np.empty_like(table.vectors)
    for j, w in enumerate(func_words):
        out[:, table.index[w]] = Vx_hat[:, j]
    for j, w in enumerate(cont_words):
        out[:, table.index[w]] = Vy_hat[:, j]
    return table.replace_vectors(out)
