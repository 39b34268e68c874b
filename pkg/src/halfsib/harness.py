"""Evaluation protocols over an EmbeddingTable: word-pair similarity
(cosine + Spearman), sentence-pair similarity (averaged vectors, cosine,
Pearson x 100), and sentiment classification (logistic regression with
seeded k-fold cross-validation).

Out-of-vocabulary handling never fails a whole task: unusable items are
skipped and counted in the result.
"""

from __future__ import annotations

import math
import unicodedata
import warnings
from dataclasses import dataclass, field

import numpy as np

from ._shuffle import shuffled_indices
from .datasets import LabeledCorpus, SentencePairDataset, WordPairDataset
from .embeddings import EmbeddingTable
from .errors import (
    DegenerateInput,
    EmptySentence,
    NonConvergence,
    TooFewExamples,
    TooFewPairs,
)
from .metrics import cosine_similarity, pearson, spearman

# ------------------------------------------------------------------ tokenizing


def _strip_punct(token: str) -> str:
    start = 0
    end = len(token)
    while start < end and unicodedata.category(token[start]).startswith("P"):
        start += 1
    while end > start and unicodedata.category(token[end - 1]).startswith("P"):
        end -= 1
    return token[start:end]


def tokenize(text: str) -> list[str]:
    """Lowercase, split on Unicode whitespace, strip leading/trailing
    punctuation from each token (internal punctuation survives), drop
    empties."""
    out = []
    for raw in text.lower().split():
        tok = _strip_punct(raw)
        if tok:
            out.append(tok)
    return out


def sentence_embedding(table: EmbeddingTable, tokens: list[str]) -> tuple[np.ndarray, int]:
    """Mean of in-vocabulary token vectors (with multiplicity) and the
    count of skipped out-of-vocabulary tokens."""
    cols = []
    oov = 0
    for tok in tokens:
        j = table.index.get(tok)
        if j is None:
            oov += 1
        else:
            cols.append(j)
    if not cols:
        raise EmptySentence(f"no in-vocabulary token among {len(tokens)} token(s)")
    return table.vectors[:, cols].mean(axis=1), oov


# ------------------------------------------------------------ similarity tasks


@dataclass(frozen=True)
class WordSimResult:
    spearman_rho: float
    pairs_used: int
    pairs_skipped: int


def eval_word_similarity(table: EmbeddingTable, ds: WordPairDataset) -> WordSimResult:
    """Cosine per in-vocabulary pair, Spearman against the human scores.
    Pairs with an out-of-vocabulary word are skipped and counted."""
    sims: list[float] = []
    human: list[float] = []
    skipped = 0
    for w1, w2, score in ds.items:
        if w1 in table and w2 in table:
            sims.append(cosine_similarity(table.vector(w1), table.vector(w2)))
            human.append(score)
        else:
            skipped += 1
    if len(sims) < 3:
        raise TooFewPairs(
            f"{ds.name}: only {len(sims)} usable pair(s) after skipping {skipped}"
        )
    return WordSimResult(spearman(sims, human), len(sims), skipped)


@dataclass(frozen=True)
class StsResult:
    pearson_x100: float
    pairs_used: int
    pairs_skipped: int


def eval_sts(table: EmbeddingTable, ds: SentencePairDataset) -> StsResult:
    """Cosine of averaged sentence vectors, Pearson x 100 against the
    human scores. A pair whose side has no in-vocabulary token is skipped."""
    sims: list[float] = []
    human: list[float] = []
    skipped = 0
    for s1, s2, score in ds.items:
        try:
            v1, _ = sentence_embedding(table, tokenize(s1))
            v2, _ = sentence_embedding(table, tokenize(s2))
        except EmptySentence:
            skipped += 1
            continue
        sims.append(cosine_similarity(v1, v2))
        human.append(score)
    if len(sims) < 3:
        raise TooFewPairs(
            f"{ds.name}: only {len(sims)} usable pair(s) after skipping {skipped}"
        )
    return StsResult(pearson(sims, human) * 100.0, len(sims), skipped)


# --------------------------------------------------------- sentiment pipeline


@dataclass(frozen=True)
class LogRegConfig:
    l2_lambda: float = 1e-4
    max_iters: int = 1000
    tol: float = 1e-8
    folds: int = 5
    shuffle_seed: int = 42

    def __post_init__(self) -> None:
        if self.l2_lambda < 0:
            raise ValueError("l2_lambda must be >= 0")
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        if self.folds < 2:
            raise ValueError("folds must be >= 2")
        if self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")


def _sigmoid(z: np.ndarray) -> np.ndarray:
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def logreg_loss(X: np.ndarray, y: np.ndarray, w: np.ndarray, b: float, l2_lambda: float) -> float:
    """Mean cross-entropy plus (lambda/2)|w|^2; the bias is unpenalized."""
    z = X @ w + b
    # per-sample cross-entropy log(1 + e^z) - y z, computed stably
    ce = np.logaddexp(0.0, z) - y * z
    return float(ce.mean() + 0.5 * l2_lambda * float(w @ w))


def logreg_gradient(
    X: np.ndarray, y: np.ndarray, w: np.ndarray, b: float, l2_lambda: float
) -> tuple[np.ndarray, float]:
    """Gradient of logreg_loss in (w, b)."""
    m = X.shape[0]
    r = _sigmoid(X @ w + b) - y
    return X.T @ r / m + l2_lambda * w, float(r.mean())


@dataclass(frozen=True)
class LogRegModel:
    weights: np.ndarray
    bias: float
    converged: bool
    iterations: int
    grad_norm: float
    loss_path: tuple[float, ...] = field(repr=False)

    def decision(self, X: np.ndarray) -> np.ndarray:
        return X @ self.weights + self.bias

    def predict(self, X: np.ndarray) -> np.ndarray:
        return (self.decision(X) > 0.0).astype(np.int64)


def train_logreg(features: np.ndarray, labels, cfg: LogRegConfig = LogRegConfig()) -> LogRegModel:
    """Newton iterations with Armijo backtracking on the penalized
    cross-entropy; stops at gradient norm <= cfg.tol. Hitting max_iters
    emits a NonConvergence warning and returns the best iterate."""
    X = np.asarray(features, dtype=np.float64)
    y = np.asarray(labels, dtype=np.float64)
    if X.ndim != 2 or y.ndim != 1 or X.shape[0] != y.shape[0]:
        raise DegenerateInput("features must be (m, p) with one label per row")
    if not np.isfinite(X).all():
        raise DegenerateInput("features contain non-finite values")
    classes = set(np.unique(y).tolist())
    if not classes <= {0.0, 1.0} or len(classes) != 2:
        raise DegenerateInput("labels must contain both classes 0 and 1")
    m, p = X.shape
    w = np.zeros(p)
    b = 0.0
    loss = logreg_loss(X, y, w, b, cfg.l2_lambda)
    path = [loss]
    grad_norm = math.inf
    iters = 0
    for iters in range(1, cfg.max_iters + 1):
        gw, gb = logreg_gradient(X, y, w, b, cfg.l2_lambda)
        grad_norm = math.sqrt(float(gw @ gw) + gb * gb)
        if grad_norm <= cfg.tol:
            iters -= 1  # this iteration performed no step
            break
        sig = _sigmoid(X @ w + b)
        s = sig * (1.0 - sig) / m
        H = np.empty((p + 1, p + 1))
        H[:p, :p] = (X.T * s) @ X
        H[:p, :p][np.diag_indices(p)] += cfg.l2_lambda
        H[:p, p] = H[p, :p] = X.T @ s
        H[p, p] = float(s.sum())
        g = np.concatenate([gw, [gb]])
        try:
            step = np.linalg.solve(H, -g)
        except np.linalg.LinAlgError:
            step = -g
        descent = float(g @ step)
        if descent >= 0.0:  # saturated Hessian; fall back to steepest descent
            step = -g
            descent = float(g @ step)
        t = 1.0
        for _ in range(60):
            w_new = w + t * step[:p]
            b_new = b + t * step[p]
            loss_new = logreg_loss(X, y, w_new, b_new, cfg.l2_lambda)
            if loss_new <= loss + 1e-4 * t * descent:
                break
            t *= 0.5
        else:
            break  # no acceptable step; keep current iterate
        w, b, loss = w_new, b_new, loss_new
        path.append(loss)
    else:
        iters = cfg.max_iters
    converged = grad_norm <= cfg.tol
    if not converged:
        warnings.warn(
            NonConvergence(
                f"gradient norm {grad_norm:.3e} > tol {cfg.tol:.1e} "
                f"after {iters} iteration(s)"
            ),
            stacklevel=2,
        )
    return LogRegModel(
        weights=w,
        bias=float(b),
        converged=converged,
        iterations=iters,
        grad_norm=float(grad_norm),
        loss_path=tuple(path),
    )


@dataclass(frozen=True)
class SentimentCvResult:
    mean_accuracy: float
    per_fold: tuple[float, ...]
    examples_used: int
    examples_dropped: int


def eval_sentiment_cv(
    table: EmbeddingTable,
    corpus: LabeledCorpus,
    cfg: LogRegConfig = LogRegConfig(),
) -> SentimentCvResult:
    """Embed every text by averaged word vectors, shuffle deterministically
    by cfg.shuffle_seed, split into cfg.folds contiguous folds, and report
    held-out accuracy per fold plus the mean. Texts with no in-vocabulary
    token are dropped and counted."""
    feats: list[np.ndarray] = []
    labels: list[int] = []
    dropped = 0
    for text, label in corpus.items:
        try:
            vec, _ = sentence_embedding(table, tokenize(text))
        except EmptySentence:
            dropped += 1
            continue
        feats.append(vec)
        labels.append(label)
    m = len(feats)
    counts = {0: labels.count(0), 1: labels.count(1)}
    if min(counts.values(), default=0) < cfg.folds:
        raise TooFewExamples(
            f"{corpus.name}: need >= {cfg.folds} usable examples per class, "
            f"have {counts.get(0, 0)} / {counts.get(1, 0)}"
        )
    X = np.vstack(feats)
    y = np.asarray(labels, dtype=np.int64)
    order = shuffled_indices(m, cfg.shuffle_seed)
    base, extra = divmod(m, cfg.folds)
    per_fold: list[float] = []
    start = 0
    for f in range(cfg.folds):
        size = base + (1 if f < extra else 0)
        test_idx = order[start : start + size]
        train_idx = order[:start] + order[start + size :]
        start += size
        model = train_logreg(X[train_idx], y[train_idx], cfg)
        correct = model.predict(X[test_idx]) == y[test_idx]
        per_fold.append(float(correct.mean()))
    return SentimentCvResult(
        mean_accuracy=float(np.mean(per_fold)),
        per_fold=tuple(per_fold),
        examples_used=m,
        examples_dropped=dropped,
    )
