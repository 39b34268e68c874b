"""Spectral baseline: mean-center the embedding matrix and remove its
top-d principal directions from every vector.

Output vectors are left centered (the mean is not added back); removal
with d = 0 is therefore pure mean-centering.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .embeddings import EmbeddingTable
from .errors import DecompositionFailure, DegenerateSpectrum, ShapeMismatch

_SPECTRUM_REL_GAP = 1e-9


@dataclass(frozen=True)
class AbttConfig:
    """Number of leading principal components to remove."""

    d: int

    def __post_init__(self) -> None:
        if self.d < 0:
            raise ValueError("d must be >= 0")


def mean_center(M: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Subtract the per-coordinate mean over columns; returns (centered, mean)."""
    Ma = np.asarray(M, dtype=np.float64)
    if Ma.ndim != 2 or Ma.shape[1] < 1:
        raise ShapeMismatch("need a 2-D matrix with at least one column")
    mu = Ma.mean(axis=1)
    return Ma - mu[:, None], mu


def top_principal_components(M: np.ndarray, d: int) -> np.ndarray:
    """Orthonormal n x d basis of the top-d left singular subspace of a
    centered matrix. Sign convention: each component's largest-magnitude
    entry is positive. Warns DegenerateSpectrum when singular values d and
    d+1 differ by < 1e-9 relative (the subspace is then ill-defined).
    """
    Ma = np.asarray(M, dtype=np.float64)
    if Ma.ndim != 2:
        raise ShapeMismatch("need a 2-D matrix")
    n, v = Ma.shape
    if not 1 <= d < min(n, v):
        raise ShapeMismatch(f"d must satisfy 1 <= d < min(n, V) = {min(n, v)}")
    try:
        U, s, _ = np.linalg.svd(Ma, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise DecompositionFailure(f"SVD did not converge: {exc}") from exc
    scale = s[0] if s[0] > 0 else 1.0
    if (s[d - 1] - s[d]) / scale < _SPECTRUM_REL_GAP:
        warnings.warn(
            DegenerateSpectrum(
                f"singular values {d} and {d + 1} nearly tie "
                f"({s[d - 1]:.6e} vs {s[d]:.6e}); top-{d} subspace is ill-defined"
            ),
            stacklevel=2,
        )
    top = U[:, :d].copy()
    for j in range(d):
        if top[np.argmax(np.abs(top[:, j])), j] < 0:
            top[:, j] = -top[:, j]
    return top


def abtt_postprocess(table: EmbeddingTable, cfg: AbttConfig) -> EmbeddingTable:
    """v_hat = (v - mu) - sum_i u_i (u_i' (v - mu)) over the top-d components."""
    if cfg.d >= min(table.dim, len(table.words)):
        raise ShapeMismatch(
            f"d = {cfg.d} must be < min(dim, vocab) = {min(table.dim, len(table.words))}"
        )
    centered, _ = mean_center(table.vectors)
    if cfg.d == 0:
        return table.replace_vectors(centered)
    U = top_principal_components(centered, cfg.d)
    out = centered - U @ (U.T @ centered)
    return table.replace_vectors(out)
