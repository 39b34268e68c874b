"""Word-embedding postprocessing by half-sibling ridge regression.

The premise: function-word vectors carry almost no lexical meaning, so
whatever part of a content-word vector they can predict is shared corpus
noise. Two ridge regressions remove that predictable part from the
content side and, symmetrically, from the function side; the residuals
are the cleaned embedding. A principal-component-removal baseline, a
word/sentence-similarity and sentiment evaluation harness, report
significance testing, a CLI, and an HTTP service wrap the core.
"""

from .abtt import AbttConfig, abtt_postprocess, mean_center, top_principal_components
from .datasets import (
    LabeledCorpus,
    SentencePairDataset,
    WordPairDataset,
    load_labeled_corpus,
    load_sentence_pairs,
    load_word_pairs,
)
from .embeddings import (
    EmbeddingTable,
    VocabPartition,
    load_embeddings,
    lowercase_fold,
    parse_embeddings,
    partition_vocab,
    read_word_list,
    save_embeddings,
    write_embeddings,
)
from .errors import (
    DecompositionFailure,
    DegenerateInput,
    DegenerateSpectrum,
    DimensionMismatch,
    DuplicateTokenWarning,
    EmptyInput,
    EmptyPartition,
    EmptySentence,
    HalfsibError,
    IoFailure,
    LengthMismatch,
    NonConvergence,
    NonFiniteValue,
    NumericalFailure,
    ShapeMismatch,
    TaskMismatch,
    TooFewExamples,
    TooFewPairs,
    ZeroVariance,
    ZeroVector,
)
from .harness import (
    LogRegConfig,
    LogRegModel,
    SentimentCvResult,
    StsResult,
    WordSimResult,
    eval_sentiment_cv,
    eval_sts,
    eval_word_similarity,
    logreg_gradient,
    logreg_loss,
    sentence_embedding,
    tokenize,
    train_logreg,
)
from .hsr import (
    HsrConfig,
    RegressionWeights,
    denoise,
    hsr_postprocess,
    ridge_weights,
)
from .metrics import (
    TTestResult,
    cosine_similarity,
    paired_t_test_one_tailed,
    pearson,
    regularized_incomplete_beta,
    spearman,
    student_t_cdf,
    student_t_sf,
)
from .reports import RunReport, compare_reports, load_report, parse_report, save_report, write_report

__version__ = "0.1.0"

__all__ = [
    "AbttConfig",
    "DecompositionFailure",
    "DegenerateInput",
    "DegenerateSpectrum",
    "DimensionMismatch",
    "DuplicateTokenWarning",
    "EmbeddingTable",
    "EmptyInput",
    "EmptyPartition",
    "EmptySentence",
    "HalfsibError",
    "HsrConfig",
    "IoFailure",
    "LabeledCorpus",
    "LengthMismatch",
    "LogRegConfig",
    "LogRegModel",
    "NonConvergence",
    "NonFiniteValue",
    "NumericalFailure",
    "RegressionWeights",
    "RunReport",
    "SentencePairDataset",
    "SentimentCvResult",
    "ShapeMismatch",
    "StsResult",
    "TTestResult",
    "TaskMismatch",
    "TooFewExamples",
    "TooFewPairs",
    "VocabPartition",
    "WordPairDataset",
    "WordSimResult",
    "ZeroVariance",
    "ZeroVector",
    "abtt_postprocess",
    "compare_reports",
    "cosine_similarity",
    "denoise",
    "eval_sentiment_cv",
    "eval_sts",
    "eval_word_similarity",
    "hsr_postprocess",
    "load_embeddings",
    "load_labeled_corpus",
    "load_report",
    "load_sentence_pairs",
    "load_word_pairs",
    "logreg_gradient",
    "logreg_loss",
    "lowercase_fold",
    "mean_center",
    "paired_t_test_one_tailed",
    "parse_embeddings",
    "parse_report",
    "partition_vocab",
    "pearson",
    "read_word_list",
    "regularized_incomplete_beta",
    "ridge_weights",
    "save_embeddings",
    "save_report",
    "sentence_embedding",
    "spearman",
    "student_t_cdf",
    "student_t_sf",
    "tokenize",
    "top_principal_components",
    "train_logreg",
    "write_embeddings",
    "write_report",
]
