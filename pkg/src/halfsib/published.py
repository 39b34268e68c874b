"""Loaders for the reference tables bundled with the package.

These TSVs transcribe previously published per-task benchmark scores and
significance values for the postprocessing methods this package
implements (methods: orig, abtt, cn, sb, hsr). They make the statistics
pipeline testable without multi-gigabyte embeddings: the regression tests
feed the score tables back through the t-test and check the published
p-values, year averages, and headline improvement figures.

Also exposed here: the default stop-word list (179 entries) and the
default frequency-ranked word list used by the vocabulary partition.
"""

from __future__ import annotations

from importlib import resources

EMBEDDINGS = ("word2vec", "glove", "paragram")
METHODS = ("orig", "abtt", "cn", "sb", "hsr")
BASELINES = ("orig", "abtt", "cn", "sb")
SUITES = ("wordsim", "sts", "sentiment")


def _data_lines(relpath: str) -> list[list[str]]:
    text = (
        resources.files("halfsib").joinpath("data").joinpath(relpath).read_text("utf-8")
    )
    rows = []
    for line in text.splitlines():
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        rows.append(line.split("\t"))
    return rows


def _score_table(relpath: str) -> dict[str, dict[str, dict[str, float]]]:
    """-> {embedding: {task: {method: score}}}, task order preserved."""
    out: dict[str, dict[str, dict[str, float]]] = {e: {} for e in EMBEDDINGS}
    for fields in _data_lines(relpath):
        emb, task, *scores = fields
        out[emb][task] = {m: float(s) for m, s in zip(METHODS, scores)}
    return out


def wordsim_scores() -> dict[str, dict[str, dict[str, float]]]:
    """Spearman correlations on the 7 word-similarity tasks."""
    return _score_table("reference/wordsim_scores.tsv")


def sts_scores() -> dict[str, dict[str, dict[str, float]]]:
    """Pearson x 100 on the 20 sentence-similarity tasks."""
    return _score_table("reference/sts_scores.tsv")


def sts_year_averages() -> dict[str, dict[str, dict[str, float]]]:
    """Published per-year average rows of the sentence-similarity table."""
    return _score_table("reference/sts_year_averages.tsv")


def sentiment_scores() -> dict[str, dict[str, dict[str, float]]]:
    """5-fold CV accuracies on the 4 sentiment tasks."""
    return _score_table("reference/sentiment_scores.tsv")


def significance_pvalues() -> dict[str, dict[str, dict[str, float]]]:
    """-> {suite: {embedding: {baseline_method: published_p}}}.

    One-tailed p-values as published. For cells where the new method loses
    on average, the published value is the switched-direction tail (see
    the regression tests that consume this)."""
    out: dict[str, dict[str, dict[str, float]]] = {
        s: {e: {} for e in EMBEDDINGS} for s in SUITES
    }
    for suite, emb, baseline, p in _data_lines("reference/significance_pvalues.tsv"):
        out[suite][emb][baseline] = float(p)
    return out


def headline_improvements() -> dict[str, float]:
    """Published relative improvement (percent) of hsr over orig on the
    sentence-similarity suite, per embedding."""
    return {emb: float(pct) for emb, pct in _data_lines("reference/headline_improvements.tsv")}


def fixture_report_path(name: str) -> str:
    """Filesystem path of a bundled example report (they live in a real
    directory, not a zip, for direct CLI consumption)."""
    if not name.endswith(".tsv"):
        name = f"{name}.tsv"
    path = resources.files("halfsib").joinpath("data").joinpath(f"reports/{name}")
    return str(path)


def default_stopwords() -> list[str]:
    return [
        w
        for w in resources.files("halfsib")
        .joinpath("data/stopwords_english.txt")
        .read_text("utf-8")
        .split()
    ]


def default_freq_ranking() -> list[str]:
    return [
        w
        for w in resources.files("halfsib")
        .joinpath("data/frequent_words_english.txt")
        .read_text("utf-8")
        .split()
    ]


def default_stopwords_path() -> str:
    return str(resources.files("halfsib").joinpath("data/stopwords_english.txt"))


def default_freq_ranking_path() -> str:
    return str(resources.files("halfsib").joinpath("data/frequent_words_english.txt"))
