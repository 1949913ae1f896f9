"""hauwe: a Hausa word embedding toolkit.

Clean raw text dumps into a training corpus, train CBoW or Skip-Gram
embeddings with negative sampling, persist vectors in interchange formats,
query nearest neighbors, and score predictions against human annotations.
"""

from .corpus import (
    CorpusStats,
    RejectReason,
    clean_corpus,
    clean_sentence,
    corpus_stats,
    dedup,
    segment,
)
from .errors import (
    DimensionMismatchError,
    DuplicateWordError,
    EmptyCorpusError,
    FileFormatError,
    HauweError,
    MalformedHeaderError,
    MissingAnnotationError,
    OutOfVocabularyError,
    SamplingExhaustedError,
    TruncatedFileError,
    ZeroVectorError,
)
from .estimators import CorpusCleaner, Word2VecEmbedder
from .lexicon import (
    BUILTIN_EXCLUSIONS,
    CompositionStats,
    classify_word,
    load_wordlist,
    vocabulary_composition,
)
from .similarity import (
    DEFAULT_QUERY_WORDS,
    SimilarityReport,
    cosine,
    evaluate,
    load_annotations,
    load_report,
    most_similar,
    score_annotations,
    write_report,
)
from .store import (
    NormalizedVectors,
    load_binary,
    load_text,
    normalize,
    save_binary,
    save_text,
)
from .training import (
    EmbeddingModel,
    EpochStats,
    Hyperparameters,
    effective_window,
    init_model,
    lr_schedule,
    pair_loss_and_grads,
    train,
    train_window_cbow,
    train_window_sg,
)
from .vocab import (
    Vocabulary,
    build_negative_table,
    build_vocab,
    keep_probabilities,
    keep_probability,
    load_vocab,
    sample_negative,
    save_vocab,
)

__version__ = "0.1.0"
