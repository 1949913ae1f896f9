"""scikit-learn style estimators wrapping the cleaning and training pipeline.

Both classes follow the fit/transform contract and expose their settings
through ``get_params``/``set_params``, so they compose with
:class:`sklearn.pipeline.Pipeline` and the usual model-selection tooling::

    Pipeline([("clean", CorpusCleaner()), ("embed", Word2VecEmbedder(dim=32))])
"""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from .corpus import clean_corpus
from .training import Hyperparameters, train
from .vocab import build_vocab


def _check_documents(X) -> list[str]:
    """Validate an iterable of raw text documents."""
    if isinstance(X, str):
        raise TypeError("expected an iterable of documents, got a single string")
    docs = list(X)
    for i, doc in enumerate(docs):
        if not isinstance(doc, str):
            raise TypeError(f"document {i} is not a string: {type(doc).__name__}")
    return docs


def _check_sentences(X) -> list[list[str]]:
    """Validate an iterable of tokenized sentences (lists of strings)."""
    if isinstance(X, str):
        raise TypeError("expected tokenized sentences, got a single string")
    sentences = list(X)
    for i, sentence in enumerate(sentences):
        if isinstance(sentence, str):
            raise TypeError(
                f"sentence {i} is a raw string; tokenize it first (e.g. CorpusCleaner)"
            )
        if not all(isinstance(token, str) for token in sentence):
            raise TypeError(f"sentence {i} contains non-string tokens")
    return sentences


class CorpusCleaner(TransformerMixin, BaseEstimator):
    """Stateless transformer running the corpus cleaning pipeline.

    ``transform`` maps raw documents to tokenized sentences and records the
    cleaning statistics of the last call in ``stats_``.
    """

    def fit(self, X, y=None):
        return self

    def transform(self, X):
        docs = _check_documents(X)
        sentences, stats = clean_corpus(docs)
        self.stats_ = stats
        return sentences


class Word2VecEmbedder(TransformerMixin, BaseEstimator):
    """Word embedding estimator: fit on tokenized sentences, transform words.

    Parameters mirror the trainer hyperparameters; ``mode`` selects "cbow"
    or "sg". After ``fit`` the trained model is available as ``model_`` and
    the per-epoch loss log as ``history_``.
    """

    def __init__(self, mode="cbow", dim=300, epochs=5, window=5, min_count=1,
                 negatives=5, alpha0=0.025, alpha_min=0.0001, sample=1e-3,
                 ns_exponent=0.75, cbow_mean=True, dynamic_window=True,
                 workers=1, seed=1):
        self.mode = mode
        self.dim = dim
        self.epochs = epochs
        self.window = window
        self.min_count = min_count
        self.negatives = negatives
        self.alpha0 = alpha0
        self.alpha_min = alpha_min
        self.sample = sample
        self.ns_exponent = ns_exponent
        self.cbow_mean = cbow_mean
        self.dynamic_window = dynamic_window
        self.workers = workers
        self.seed = seed

    def _hyperparameters(self) -> Hyperparameters:
        return Hyperparameters(
            dim=self.dim, epochs=self.epochs, window=self.window,
            min_count=self.min_count, negatives=self.negatives,
            alpha0=self.alpha0, alpha_min=self.alpha_min, sample=self.sample,
            ns_exponent=self.ns_exponent, cbow_mean=self.cbow_mean,
            dynamic_window=self.dynamic_window, workers=self.workers,
            seed=self.seed,
        )

    def fit(self, X, y=None):
        sentences = _check_sentences(X)
        hyper = self._hyperparameters()
        vocab = build_vocab(sentences, hyper.min_count)
        self.model_, self.history_ = train(sentences, vocab, hyper, self.mode)
        return self

    def _require_fitted(self):
        if not hasattr(self, "model_"):
            raise NotFittedError(
                "this Word2VecEmbedder is not fitted yet; call fit first"
            )

    def transform(self, X) -> np.ndarray:
        """Map an iterable of words to their vectors, shape (n_words, dim)."""
        self._require_fitted()
        words = list(X)
        if not words:
            return np.empty((0, self.model_.dim), dtype=self.model_.input_matrix.dtype)
        return np.stack([self.model_.vector(word) for word in words])

    def most_similar(self, word, k=10):
        """Top-k cosine neighbors of `word` in the fitted model."""
        from .similarity import most_similar

        self._require_fitted()
        return most_similar(self.model_, word, k)
