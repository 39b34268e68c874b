"""Embedding table I/O and the function/content vocabulary partition.

File format: one word per line, ``token v1 v2 ... vn`` separated by
whitespace, optionally preceded by a ``V n`` count header (two integer
fields). Values are parsed as float64; every stored value must be finite.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import IO, Iterable, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    DuplicateTokenWarning,
    EmptyInput,
    EmptyPartition,
    IoFailure,
    NonFiniteValue,
)


@dataclass(frozen=True, eq=False)
class EmbeddingTable:
    """Vocabulary plus a dense n x V matrix; column j is words[j]'s vector."""

    words: tuple[str, ...]
    vectors: np.ndarray  # shape (dim, len(words)), float64, read-only
    dim: int
    index: dict[str, int] = field(repr=False, compare=False, default_factory=dict)

    def __post_init__(self) -> None:
        if len(self.words) == 0:
            raise EmptyInput("embedding table has no words")
        if self.dim < 1:
            raise DimensionMismatch("vector dimension must be >= 1")
        if self.vectors.shape != (self.dim, len(self.words)):
            raise DimensionMismatch(
                f"vector matrix shape {self.vectors.shape} does not match "
                f"dim {self.dim} x vocab {len(self.words)}"
            )
        if not np.isfinite(self.vectors).all():
            raise NonFiniteValue("embedding table contains non-finite values")
        if len(set(self.words)) != len(self.words):
            raise ValueError("duplicate tokens in embedding table")
        self.vectors.setflags(write=False)
        object.__setattr__(self, "index", {w: j for j, w in enumerate(self.words)})

    def __contains__(self, word: str) -> bool:
        return word in self.index

    def __len__(self) -> int:
        return len(self.words)

    def vector(self, word: str) -> np.ndarray:
        return self.vectors[:, self.index[word]]

    def columns(self, words: Sequence[str]) -> np.ndarray:
        """Dense copy of the columns for `words`, in the given order."""
        idx = [self.index[w] for w in words]
        return self.vectors[:, idx].copy()

    def replace_vectors(self, vectors: np.ndarray) -> "EmbeddingTable":
        """New table, same vocabulary and order, different matrix."""
        fresh = np.array(vectors, dtype=np.float64, order="C", copy=True)
        return EmbeddingTable(self.words, fresh, self.dim)


@dataclass(frozen=True)
class VocabPartition:
    """Disjoint function/content split plus the ordered regressor subset."""

    function_words: frozenset[str]
    content_words: frozenset[str]
    content_features: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.function_words & self.content_words:
            raise ValueError("function and content word sets overlap")
        if not frozenset(self.content_features) <= self.content_words:
            raise ValueError("content_features must be content words")


def _parse_value(tok: str, lineno: int) -> float:
    try:
        v = float(tok)
    except ValueError:
        raise NonFiniteValue(f"line {lineno}: {tok!r} is not a number") from None
    if not np.isfinite(v):
        raise NonFiniteValue(f"line {lineno}: non-finite value {tok!r}")
    return v


def _is_count_header(fields: list[str]) -> bool:
    if len(fields) != 2:
        return False
    try:
        int(fields[0]), int(fields[1])
    except ValueError:
        return False
    return True


def parse_embeddings(
    stream: IO[str] | Iterable[str],
    expect_header: str = "auto",
) -> EmbeddingTable:
    """Parse an embedding text stream into an EmbeddingTable.

    expect_header: "auto" detects a first line of exactly two integer
    fields as a count header; "yes" consumes the first line untested;
    "no" treats every line as data. Dimension is inferred from the first
    data line. Duplicate tokens keep the first occurrence; one
    DuplicateTokenWarning with the dropped count is emitted.
    """
    if expect_header not in ("auto", "yes", "no"):
        raise ValueError(f"expect_header must be auto/yes/no, got {expect_header!r}")
    words: list[str] = []
    seen: dict[str, int] = {}
    rows: list[list[float]] = []
    dim = -1
    dupes = 0
    first = True
    for lineno, raw in enumerate(iter(stream), start=1):
        line = raw.rstrip("\n").rstrip("\r")
        if not line.strip():
            continue
        fields = line.split()
        if first:
            first = False
            if expect_header == "yes" or (expect_header == "auto" and _is_count_header(fields)):
                continue
        token, vals = fields[0], fields[1:]
        if dim < 0:
            if not vals:
                raise DimensionMismatch(f"line {lineno}: no vector values")
            dim = len(vals)
        elif len(vals) != dim:
            raise DimensionMismatch(
                f"line {lineno}: expected {dim} values, found {len(vals)}"
            )
        if token in seen:
            dupes += 1
            continue
        seen[token] = len(words)
        words.append(token)
        rows.append([_parse_value(t, lineno) for t in vals])
    if not words:
        raise EmptyInput("no data lines in embedding input")
    if dupes:
        warnings.warn(
            DuplicateTokenWarning(
                f"dropped {dupes} duplicate token line(s), first occurrences kept",
                count=dupes,
            ),
            stacklevel=2,
        )
    matrix = np.array(rows, dtype=np.float64).T  # (dim, V)
    return EmbeddingTable(tuple(words), np.ascontiguousarray(matrix), dim)


def load_embeddings(path: str, expect_header: str = "auto") -> EmbeddingTable:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_embeddings(fh, expect_header=expect_header)
    except OSError as exc:
        raise IoFailure(f"cannot read embeddings file {path}: {exc}") from exc


def write_embeddings(
    table: EmbeddingTable,
    stream: IO[str],
    header: bool = False,
    precision: int = 6,
) -> None:
    """Write one `token v1 ... vn` line per word, in stored order.

    parse(write(t)) reproduces t to within 10**-precision per value.
    """
    try:
        if header:
            stream.write(f"{len(table.words)} {table.dim}\n")
        for j, word in enumerate(table.words):
            vals = " ".join(f"{v:.{precision}f}" for v in table.vectors[:, j])
            stream.write(f"{word} {vals}\n")
    except OSError as exc:
        raise IoFailure(f"cannot write embeddings: {exc}") from exc


def save_embeddings(table: EmbeddingTable, path: str, header: bool = False, precision: int = 6) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            write_embeddings(table, fh, header=header, precision=precision)
    except OSError as exc:
        raise IoFailure(f"cannot write embeddings file {path}: {exc}") from exc


def lowercase_fold(table: EmbeddingTable) -> EmbeddingTable:
    """Lowercase the vocabulary, keeping the first occurrence on collision.

    Emits one DuplicateTokenWarning carrying the collision count, same
    rule as duplicate lines at parse time.
    """
    words: list[str] = []
    cols: list[int] = []
    seen: set[str] = set()
    dupes = 0
    for j, w in enumerate(table.words):
        lw = w.lower()
        if lw in seen:
            dupes += 1
            continue
        seen.add(lw)
        words.append(lw)
        cols.append(j)
    if dupes:
        warnings.warn(
            DuplicateTokenWarning(
                f"lowercasing merged {dupes} token(s), first occurrences kept",
                count=dupes,
            ),
            stacklevel=2,
        )
    if dupes == 0 and words == list(table.words):
        return table
    return EmbeddingTable(tuple(words), table.vectors[:, cols].copy(), table.dim)


def read_word_list(path: str) -> list[str]:
    """One token per line; blank lines and `#` comments skipped."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            out = []
            for raw in fh:
                tok = raw.strip()
                if tok and not tok.startswith("#"):
                    out.append(tok)
            return out
    except OSError as exc:
        raise IoFailure(f"cannot read word list {path}: {exc}") from exc


def partition_vocab(
    table: EmbeddingTable,
    stoplist: Iterable[str],
    freq_ranking: Sequence[str],
    cap: int,
) -> VocabPartition:
    """Split the vocabulary into function words (stoplist hits) and content
    words, and pick content_features: the first `cap` ranking tokens that
    are content words, order preserved. Ranking tokens that are also in
    the stoplist land on the function side and are skipped here.
    """
    stopset = set(stoplist)
    if not stopset:
        raise EmptyPartition("stop list is empty")
    if cap < 1:
        raise ValueError("cap must be >= 1")
    vocab = set(table.words)
    function_words = frozenset(vocab & stopset)
    content_words = frozenset(vocab - stopset)
    if not function_words:
        raise EmptyPartition("no stop-list word present in the vocabulary")
    if not content_words:
        raise EmptyPartition("no content word present in the vocabulary")
    features: list[str] = []
    seen: set[str] = set()
    for tok in freq_ranking:
        if len(features) >= cap:
            break
        if tok in content_words and tok not in seen:
            features.append(tok)
            seen.add(tok)
    return VocabPartition(function_words, content_words, tuple(features))
