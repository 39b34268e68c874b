"""Statistical primitives: cosine, Spearman, Pearson, paired one-tailed t-test.

The Student-t tail probability is computed from a self-contained
regularized incomplete beta function (Lentz continued fraction), accurate
to ~1e-14 relative, so the package has no runtime dependency on a stats
library for its published-number reproduction path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    DegenerateInput,
    DimensionMismatch,
    LengthMismatch,
    NonFiniteValue,
    ZeroVariance,
    ZeroVector,
)

_BETA_EPS = 1e-15
_BETA_MAXIT = 400
_FPMIN = 1e-300


def _beta_cf(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta, modified Lentz method."""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _FPMIN:
        d = _FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, _BETA_MAXIT + 1):
        m2 = 2 * m
        # even step
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        h *= d * c
        # odd step
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _BETA_EPS:
            return h
    raise ArithmeticError("incomplete beta continued fraction did not converge")


def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    """I_x(a, b) for a, b > 0 and x in [0, 1]."""
    if a <= 0.0 or b <= 0.0:
        raise ValueError("beta parameters must be positive")
    if not 0.0 <= x <= 1.0:
        raise ValueError("x must lie in [0, 1]")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    ln_front = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log1p(-x)
    )
    front = math.exp(ln_front)
    # continued fraction converges fast only below the distribution mean
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _beta_cf(a, b, x) / a
    return 1.0 - front * _beta_cf(b, a, 1.0 - x) / b


def student_t_sf(t: float, df: int) -> float:
    """P(T > t) for Student's t with df degrees of freedom."""
    if df < 1:
        raise ValueError("df must be >= 1")
    if not math.isfinite(t):
        raise NonFiniteValue("t statistic is not finite")
    x = df / (df + t * t)
    half_tail = 0.5 * regularized_incomplete_beta(df / 2.0, 0.5, x)
    return half_tail if t >= 0.0 else 1.0 - half_tail


def student_t_cdf(t: float, df: int) -> float:
    """P(T <= t); mirror of the survival function, so cdf(t) + sf(t) = 1."""
    return student_t_sf(-t, df)


def _as_1d(x: Sequence[float] | np.ndarray, what: str) -> np.ndarray:
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim != 1:
        raise DimensionMismatch(f"{what} must be one-dimensional")
    if not np.isfinite(arr).all():
        raise NonFiniteValue(f"{what} contains non-finite values")
    return arr


def cosine_similarity(u: Sequence[float] | np.ndarray, v: Sequence[float] | np.ndarray) -> float:
    """u.v / (|u||v|), clamped into [-1, 1] against rounding."""
    ua = _as_1d(u, "u")
    va = _as_1d(v, "v")
    if ua.shape != va.shape:
        raise DimensionMismatch(f"dimensions differ: {ua.shape[0]} vs {va.shape[0]}")
    nu = float(np.linalg.norm(ua))
    nv = float(np.linalg.norm(va))
    if nu == 0.0 or nv == 0.0:
        raise ZeroVector("cosine similarity of a zero vector is undefined")
    return float(min(1.0, max(-1.0, float(ua @ va) / (nu * nv))))


def average_ranks(x: Sequence[float] | np.ndarray) -> np.ndarray:
    """1-based ranks; tied values share the average of their positions."""
    arr = _as_1d(x, "x")
    order = np.argsort(arr, kind="stable")
    ranks = np.empty(arr.shape[0], dtype=np.float64)
    i = 0
    n = arr.shape[0]
    while i < n:
        j = i
        while j + 1 < n and arr[order[j + 1]] == arr[order[i]]:
            j += 1
        # positions i..j (0-based) share rank mean of (i+1 .. j+1)
        ranks[order[i : j + 1]] = (i + j) / 2.0 + 1.0
        i = j + 1
    return ranks


def pearson(x: Sequence[float] | np.ndarray, y: Sequence[float] | np.ndarray) -> float:
    """Sample Pearson correlation, clamped into [-1, 1]."""
    xa = _as_1d(x, "x")
    ya = _as_1d(y, "y")
    if xa.shape[0] != ya.shape[0]:
        raise LengthMismatch(f"lengths differ: {xa.shape[0]} vs {ya.shape[0]}")
    if xa.shape[0] < 3:
        raise DegenerateInput("need at least 3 samples")
    dx = xa - xa.mean()
    dy = ya - ya.mean()
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    if sxx == 0.0 or syy == 0.0:
        raise DegenerateInput("constant sequence has no correlation")
    r = float(dx @ dy) / math.sqrt(sxx * syy)
    return float(min(1.0, max(-1.0, r)))


def spearman(x: Sequence[float] | np.ndarray, y: Sequence[float] | np.ndarray) -> float:
    """Pearson correlation of average ranks (fractional on ties)."""
    xa = _as_1d(x, "x")
    ya = _as_1d(y, "y")
    if xa.shape[0] != ya.shape[0]:
        raise LengthMismatch(f"lengths differ: {xa.shape[0]} vs {ya.shape[0]}")
    if xa.shape[0] < 3:
        raise DegenerateInput("need at least 3 samples")
    return pearson(average_ranks(xa), average_ranks(ya))


@dataclass(frozen=True)
class TTestResult:
    """Paired one-tailed t-test outcome (alternative: treatment > baseline)."""

    t_stat: float
    df: int
    p_one_tailed: float
    mean_diff: float


def paired_t_test_one_tailed(
    baseline: Sequence[float] | np.ndarray,
    treatment: Sequence[float] | np.ndarray,
) -> TTestResult:
    """t-test on per-task score differences d_i = treatment_i - baseline_i.

    t = mean(d) / (sd(d)/sqrt(m)) with sample sd (divisor m-1), df = m-1,
    p = P(T > t). Swapping the arguments maps p to exactly 1 - p.
    """
    ba = _as_1d(baseline, "baseline")
    ta = _as_1d(treatment, "treatment")
    if ba.shape[0] != ta.shape[0]:
        raise LengthMismatch(f"lengths differ: {ba.shape[0]} vs {ta.shape[0]}")
    m = ba.shape[0]
    if m < 2:
        raise LengthMismatch("need at least 2 paired samples")
    d = ta - ba
    mean = float(d.mean())
    centered = d - mean
    ss = float(centered @ centered)
    if ss == 0.0:
        raise ZeroVariance("all paired differences are identical")
    sd = math.sqrt(ss / (m - 1))
    t = mean / (sd / math.sqrt(m))
    df = m - 1
    return TTestResult(t_stat=t, df=df, p_one_tailed=student_t_sf(t, df), mean_diff=mean)
