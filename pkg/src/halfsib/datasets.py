"""Benchmark dataset containers and their TSV loaders.

All files are UTF-8, tab-separated, one item per line; lines starting
with `#` and blank lines are skipped. Formats:

- word pairs:      word1 <TAB> word2 <TAB> human_score
- sentence pairs:  sent1 <TAB> sent2 <TAB> human_score
- labeled corpus:  label <TAB> text          (label is 0 or 1)
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from .errors import DegenerateInput, EmptyInput, IoFailure


@dataclass(frozen=True)
class WordPairDataset:
    items: tuple[tuple[str, str, float], ...]
    name: str

    def __post_init__(self) -> None:
        if not self.items:
            raise EmptyInput(f"word-pair dataset {self.name!r} is empty")
        if any(not math.isfinite(s) for _, _, s in self.items):
            raise DegenerateInput(f"non-finite human score in {self.name!r}")


@dataclass(frozen=True)
class SentencePairDataset:
    items: tuple[tuple[str, str, float], ...]
    name: str

    def __post_init__(self) -> None:
        if not self.items:
            raise EmptyInput(f"sentence-pair dataset {self.name!r} is empty")
        if any(not math.isfinite(s) for _, _, s in self.items):
            raise DegenerateInput(f"non-finite human score in {self.name!r}")


@dataclass(frozen=True)
class LabeledCorpus:
    items: tuple[tuple[str, int], ...]
    name: str

    def __post_init__(self) -> None:
        if not self.items:
            raise EmptyInput(f"labeled corpus {self.name!r} is empty")
        labels = {label for _, label in self.items}
        if not labels <= {0, 1}:
            raise DegenerateInput(f"labels outside {{0,1}} in {self.name!r}")
        if labels != {0, 1}:
            raise DegenerateInput(f"corpus {self.name!r} has a single class")


def dataset_name(path: str) -> str:
    """Task name rule: file basename without its extension."""
    return os.path.splitext(os.path.basename(path))[0]


def _data_lines(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.rstrip("\n").rstrip("\r")
                if not line.strip() or line.lstrip().startswith("#"):
                    continue
                yield lineno, line
    except OSError as exc:
        raise IoFailure(f"cannot read dataset {path}: {exc}") from exc


def _parse_score(tok: str, path: str, lineno: int) -> float:
    try:
        score = float(tok)
    except ValueError:
        raise IoFailure(f"{path}:{lineno}: score {tok!r} is not a number") from None
    if not math.isfinite(score):
        raise IoFailure(f"{path}:{lineno}: non-finite score")
    return score


def load_word_pairs(path: str, name: str | None = None) -> WordPairDataset:
    items = []
    for lineno, line in _data_lines(path):
        fields = line.split("\t")
        if len(fields) != 3:
            raise IoFailure(f"{path}:{lineno}: expected 3 tab-separated fields, got {len(fields)}")
        w1, w2, score = fields[0].strip(), fields[1].strip(), _parse_score(fields[2], path, lineno)
        if not w1 or not w2:
            raise IoFailure(f"{path}:{lineno}: empty word field")
        items.append((w1, w2, score))
    return WordPairDataset(tuple(items), name or dataset_name(path))


def load_sentence_pairs(path: str, name: str | None = None) -> SentencePairDataset:
    items = []
    for lineno, line in _data_lines(path):
        fields = line.split("\t")
        if len(fields) != 3:
            raise IoFailure(f"{path}:{lineno}: expected 3 tab-separated fields, got {len(fields)}")
        items.append((fields[0], fields[1], _parse_score(fields[2], path, lineno)))
    return SentencePairDataset(tuple(items), name or dataset_name(path))


def load_labeled_corpus(path: str, name: str | None = None) -> LabeledCorpus:
    items = []
    for lineno, line in _data_lines(path):
        fields = line.split("\t")
        if len(fields) != 2:
            raise IoFailure(f"{path}:{lineno}: expected 2 tab-separated fields, got {len(fields)}")
        label_tok, text = fields[0].strip(), fields[1]
        if label_tok not in ("0", "1"):
            raise IoFailure(f"{path}:{lineno}: label must be 0 or 1, got {label_tok!r}")
        items.append((text, int(label_tok)))
    return LabeledCorpus(tuple(items), name or dataset_name(path))
