"""Independent reference implementations used only by the tests.

Every oracle here deliberately takes a different computational route than
the library: exact rational arithmetic, brute force, high-precision
mpmath, finite differences, or a first-order iterative minimizer. None of
them call into halfsib.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np


# --------------------------------------------------------------- ridge oracle


def ridge_minimizer(X, Y, alpha, rel_tol=1e-9, max_iters=200_000):
    """Minimize |XW - Y|_F^2 + alpha |W|_F^2 by Nesterov's accelerated
    gradient method for strongly convex objectives. First-order only: no
    normal equations, no factorization, no matrix inverse."""
    X = np.asarray(X, dtype=np.float64)
    Y = np.asarray(Y, dtype=np.float64)
    p, k = X.shape[1], Y.shape[1]
    lam_max = np.linalg.norm(X, 2) ** 2
    L = 2.0 * (lam_max + alpha)  # gradient Lipschitz constant
    mu = 2.0 * alpha  # strong convexity constant
    kappa = L / mu
    beta = (math.sqrt(kappa) - 1.0) / (math.sqrt(kappa) + 1.0)
    scale = max(1.0, float(np.linalg.norm(X.T @ Y)))

    def grad(W):
        return 2.0 * (X.T @ (X @ W - Y) + alpha * W)

    W = np.zeros((p, k))
    Z = W.copy()
    for _ in range(max_iters):
        G = grad(Z)
        W_next = Z - G / L
        Z = W_next + beta * (W_next - W)
        W = W_next
        if float(np.linalg.norm(grad(W))) <= rel_tol * scale:
            return W
    raise AssertionError("ridge oracle did not converge")


def ridge_normal_equations(X, Y, alpha):
    """Textbook solve of (X'X + alpha I) W = X'Y via LU, one call, no
    blocking, no Cholesky."""
    X = np.asarray(X, dtype=np.float64)
    Y = np.asarray(Y, dtype=np.float64)
    p = X.shape[1]
    return np.linalg.solve(X.T @ X + alpha * np.eye(p), X.T @ Y)


# ------------------------------------------------- exact two-step hsr replica


def exact_hsr(columns_by_word, function_words, content_words, features, alpha1, alpha2):
    """Straight-line replay of the two regression steps in exact rational
    arithmetic (sympy). Inputs must be exactly representable (ints,
    fractions, or dyadic floats). Returns {word: [float, ...]}.

    Step 2 regresses the function columns on the ORIGINAL feature columns.
    """
    import sympy as sp

    dim = len(next(iter(columns_by_word.values())))

    def mat(words):
        return sp.Matrix([[sp.nsimplify(columns_by_word[w][i], rational=True) for w in words] for i in range(dim)])

    def ridge(X, Y, a):
        p = X.shape[1]
        return (X.T * X + sp.nsimplify(a, rational=True) * sp.eye(p)).inv() * (X.T * Y)

    Vx, Vy, Vf = mat(function_words), mat(content_words), mat(features)
    W1 = ridge(Vx, Vy, alpha1)
    Vy_hat = Vy - Vx * W1
    W2 = ridge(Vf, Vx, alpha2)
    Vx_hat = Vx - Vf * W2
    out = {}
    for j, w in enumerate(function_words):
        out[w] = [float(Vx_hat[i, j]) for i in range(dim)]
    for j, w in enumerate(content_words):
        out[w] = [float(Vy_hat[i, j]) for i in range(dim)]
    return out


def exact_hsr_swapped_step2(columns_by_word, function_words, content_words, features, alpha1, alpha2):
    """Deliberately wrong variant: Step 2 regresses on the Step-1
    residuals of the feature columns instead of the originals. Used to
    prove the library's output is distinguishable from this reading."""
    import sympy as sp

    dim = len(next(iter(columns_by_word.values())))

    def mat(words):
        return sp.Matrix([[sp.nsimplify(columns_by_word[w][i], rational=True) for w in words] for i in range(dim)])

    def ridge(X, Y, a):
        p = X.shape[1]
        return (X.T * X + sp.nsimplify(a, rational=True) * sp.eye(p)).inv() * (X.T * Y)

    Vx, Vy, Vf = mat(function_words), mat(content_words), mat(features)
    W1 = ridge(Vx, Vy, alpha1)
    Vy_hat = Vy - Vx * W1
    feat_pos = [content_words.index(w) for w in features]
    Vf_resid = Vy_hat[:, feat_pos]
    W2 = ridge(Vf_resid, Vx, alpha2)
    Vx_hat = Vx - Vf_resid * W2
    out = {}
    for j, w in enumerate(function_words):
        out[w] = [float(Vx_hat[i, j]) for i in range(dim)]
    for j, w in enumerate(content_words):
        out[w] = [float(Vy_hat[i, j]) for i in range(dim)]
    return out


# ------------------------------------------------------------ rank/corr oracles


def brute_force_ranks(values):
    """O(n^2) fractional ranking: 1-based, ties get the group average."""
    out = []
    for v in values:
        less = sum(1 for u in values if u < v)
        equal = sum(1 for u in values if u == v)  # includes v itself
        out.append(less + (equal + 1) / 2.0)
    return out


def exact_pearson(x, y):
    """Pearson r with all sums done in exact rational arithmetic; only the
    final square root and division are floating point."""
    n = len(x)
    xs = [Fraction(float(v)) for v in x]
    ys = [Fraction(float(v)) for v in y]
    sx, sy = sum(xs), sum(ys)
    sxx = sum(v * v for v in xs)
    syy = sum(v * v for v in ys)
    sxy = sum(a * b for a, b in zip(xs, ys))
    num = n * sxy - sx * sy
    den_x = n * sxx - sx * sx
    den_y = n * syy - sy * sy
    if den_x == 0 or den_y == 0:
        raise ZeroDivisionError("constant input")
    return float(num) / math.sqrt(float(den_x) * float(den_y))


def exact_spearman(x, y):
    return exact_pearson(brute_force_ranks(list(x)), brute_force_ranks(list(y)))


# ----------------------------------------------------------- t-tail oracle


def mpmath_t_sf(t, df, dps=50):
    """P(T > t) through mpmath's regularized incomplete beta at high
    working precision."""
    import mpmath

    with mpmath.workdps(dps):
        tt = mpmath.mpf(t)
        nu = mpmath.mpf(df)
        x = nu / (nu + tt * tt)
        half = mpmath.betainc(nu / 2, mpmath.mpf(1) / 2, 0, x, regularized=True) / 2
        p = half if t >= 0 else 1 - half
        return float(p)


def mpmath_reg_inc_beta(a, b, x, dps=50):
    import mpmath

    with mpmath.workdps(dps):
        return float(mpmath.betainc(a, b, 0, x, regularized=True))


def exact_paired_t(baseline, treatment):
    """t statistic of the paired test in exact rational arithmetic."""
    d = [Fraction(float(t)) - Fraction(float(b)) for b, t in zip(baseline, treatment)]
    m = len(d)
    mean = sum(d) / m
    ss = sum((v - mean) ** 2 for v in d)
    if ss == 0:
        raise ZeroDivisionError("zero variance")
    # t = mean / sqrt(ss / (m (m-1))); do the square root in floats
    return float(mean) / math.sqrt(float(ss) / (m * (m - 1)))


# ----------------------------------------------------------- spectral oracle


def top_subspace_projector(M, d):
    """Projector onto the top-d left singular subspace, computed from the
    eigendecomposition of M M' (never from an SVD of M)."""
    M = np.asarray(M, dtype=np.float64)
    evals, evecs = np.linalg.eigh(M @ M.T)
    order = np.argsort(evals)[::-1]
    U = evecs[:, order[:d]]
    return U @ U.T


# ------------------------------------------------- finite-difference gradient


def fd_logreg_gradient(loss_fn, w, b, eps=1e-6):
    """Central finite differences of loss_fn(w, b) in every coordinate."""
    w = np.asarray(w, dtype=np.float64)
    gw = np.empty_like(w)
    for i in range(w.size):
        bump = np.zeros_like(w)
        bump[i] = eps
        gw[i] = (loss_fn(w + bump, b) - loss_fn(w - bump, b)) / (2.0 * eps)
    gb = (loss_fn(w, b + eps) - loss_fn(w, b - eps)) / (2.0 * eps)
    return gw, gb
