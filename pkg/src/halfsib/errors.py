"""Exception and warning types shared across the package.

Every error raised on a contract violation is a subclass of
:class:`HalfsibError`, so callers (and the CLI) can catch one type and
map it to a runtime-failure exit code.
"""

from __future__ import annotations


class HalfsibError(Exception):
    """Base class for all package errors."""


# ---------------------------------------------------------------- embedding I/O


class DimensionMismatch(HalfsibError):
    """Vector dimensions disagree (file line vs inferred dim, or u vs v)."""


class NonFiniteValue(HalfsibError):
    """A value is NaN/infinite, or a numeric field failed to parse."""


class EmptyInput(HalfsibError):
    """No usable data lines / empty table where content is required."""


class IoFailure(HalfsibError):
    """A file could not be read or written, or a data row is malformed."""


class EmptyPartition(HalfsibError):
    """Function or content side of a vocabulary partition is empty."""


# ---------------------------------------------------------------- linear algebra


class ShapeMismatch(HalfsibError):
    """Matrix operands have incompatible shapes."""


class NumericalFailure(HalfsibError):
    """A factorization failed; with a positive ridge term this signals
    NaN contamination rather than true singularity."""


class DecompositionFailure(HalfsibError):
    """SVD did not converge."""


class ZeroVector(HalfsibError):
    """Cosine similarity of a zero-norm vector is undefined."""


# ---------------------------------------------------------------- statistics


class LengthMismatch(HalfsibError):
    """Paired sequences have different lengths (or too few samples)."""


class DegenerateInput(HalfsibError):
    """Input admits no meaningful statistic (constant sequence, single
    class, or sample too small)."""


class ZeroVariance(HalfsibError):
    """All paired differences are identical; t statistic undefined."""


# ---------------------------------------------------------------- harness


class EmptySentence(HalfsibError):
    """No token of the sentence is in the vocabulary."""


class TooFewPairs(HalfsibError):
    """Fewer than 3 usable pairs remain after OOV skipping."""


class TooFewExamples(HalfsibError):
    """Not enough labeled examples per class for the requested folds."""


class TaskMismatch(HalfsibError):
    """Two reports do not cover the same task names."""


# ---------------------------------------------------------------- warnings


class DuplicateTokenWarning(UserWarning):
    """Duplicate tokens were dropped (first occurrence kept).

    The number of dropped lines is exposed as ``count``.
    """

    def __init__(self, message: str, count: int) -> None:
        super().__init__(message)
        self.count = count


class DegenerateSpectrum(UserWarning):
    """Singular values d and d+1 nearly tie; the top-d subspace is
    ill-defined up to rotation."""


class NonConvergence(UserWarning):
    """Optimizer hit max_iters before reaching the gradient tolerance;
    the best iterate is returned anyway."""
