"""CBoW and Skip-Gram embedding training with negative-sampling SGD.

The objective for one (h, target, negatives) update is

    L = -log sigmoid(o_t . h) - sum_i log sigmoid(-o_n_i . h)

where o_u is row u of the output matrix. Its gradients are
(sigmoid(o_u . h) - label) * h for each output row and
sum_u (sigmoid(o_u . h) - label_u) * o_u for h.

Skip-Gram runs one update per (context, center) pair with the context
word's input vector as h and the center word as target; CBoW runs one
update per center with h the mean (or sum) of the context input vectors,
redistributing the h-gradient over those vectors.

Matrices are float32; all functions also accept float64 arrays, which the
gradient tests rely on. Training with a fixed seed and a single worker is
bit-reproducible. With several workers, sentences are sharded across
threads that update the shared matrices without locking, so results are
only statistically reproducible.
"""

import logging
import threading
from dataclasses import dataclass

import numpy as np
from scipy.special import expit

from .errors import EmptyCorpusError
from .vocab import (
    NS_EXPONENT,
    Vocabulary,
    build_negative_table,
    keep_probabilities,
)

logger = logging.getLogger(__name__)

_EMPTY_IDS = np.empty(0, dtype=np.int32)


@dataclass
class Hyperparameters:
    """Training configuration. Defaults are the reference training regime."""

    dim: int = 300
    epochs: int = 5
    window: int = 5
    min_count: int = 1
    negatives: int = 5
    alpha0: float = 0.025
    alpha_min: float = 0.0001
    sample: float = 1e-3
    ns_exponent: float = NS_EXPONENT
    cbow_mean: bool = True
    dynamic_window: bool = True
    workers: int = 1
    seed: int = 1

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"dim must be >= 1, got {self.dim}")
        if self.epochs < 1:
            raise ValueError(f"epochs must be >= 1, got {self.epochs}")
        if self.window < 1:
            raise ValueError(f"window must be >= 1, got {self.window}")
        if self.min_count < 1:
            raise ValueError(f"min_count must be >= 1, got {self.min_count}")
        if self.negatives < 0:
            raise ValueError(f"negatives must be >= 0, got {self.negatives}")
        if not 0 < self.alpha_min <= self.alpha0:
            raise ValueError(
                f"need 0 < alpha_min <= alpha0, got {self.alpha_min} / {self.alpha0}"
            )
        if self.sample < 0:
            raise ValueError(f"sample must be >= 0, got {self.sample}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")


@dataclass
class EmbeddingModel:
    """Input (word vector) and output (discriminator) matrices plus metadata.

    `input_matrix` rows are the word vectors; `output_matrix` holds the
    negative-sampling discriminator weights and is None for models loaded
    from interchange files. Treat a model as single-owner while training
    and freely shareable read-only afterwards.
    """

    input_matrix: np.ndarray
    output_matrix: np.ndarray | None
    vocab: Vocabulary
    mode: str | None = None
    hyper: Hyperparameters | None = None

    @property
    def dim(self) -> int:
        return self.input_matrix.shape[1]

    def vector(self, word: str) -> np.ndarray:
        from .errors import OutOfVocabularyError

        if word not in self.vocab:
            raise OutOfVocabularyError(word)
        return self.input_matrix[self.vocab.index[word]]


@dataclass(frozen=True)
class EpochStats:
    """One line of the training progress log."""

    epoch: int
    words: int
    alpha: float
    mean_loss: float


def init_model(vocab: Vocabulary, hyper: Hyperparameters, seed: int | None = None,
               dtype=np.float32) -> EmbeddingModel:
    """Fresh untrained model: uniform input in [-0.5/dim, 0.5/dim], zero output."""
    rng = np.random.default_rng(hyper.seed if seed is None else seed)
    bound = 0.5 / hyper.dim
    shape = (len(vocab), hyper.dim)
    input_matrix = rng.uniform(-bound, bound, size=shape).astype(dtype)
    output_matrix = np.zeros(shape, dtype=dtype)
    return EmbeddingModel(input_matrix, output_matrix, vocab, None, hyper)


def lr_schedule(words_processed: int, total_words: int, hyper: Hyperparameters) -> float:
    """Learning rate after `words_processed` of `total_words` tokens.

    Linear decay from alpha0, clamped at alpha_min.
    """
    return max(hyper.alpha_min, hyper.alpha0 * (1.0 - words_processed / (total_words + 1)))


def effective_window(rng, window: int, dynamic: bool = True) -> int:
    """Window size for one center token: uniform in [1, window] when dynamic."""
    if not dynamic:
        return window
    return int(rng.integers(1, window + 1))


def pair_loss_and_grads(h, target_id: int, negative_ids, output_matrix):
    """Loss and gradients of one negative-sampling update.

    Returns (loss, grad_h, grad_output_rows) where grad_output_rows is
    aligned with [target_id, *negative_ids]. Does not modify anything.
    """
    rows = np.empty(1 + len(negative_ids), dtype=np.intp)
    rows[0] = target_id
    rows[1:] = negative_ids
    vectors = output_matrix[rows]
    scores = vectors @ h
    probs = expit(scores)
    # gradient factor sigmoid(score) - label; only the target has label 1
    g = probs.copy()
    g[0] -= 1.0
    signed = scores.copy()
    signed[0] = -signed[0]
    loss = float(np.logaddexp(0.0, signed).sum())
    grad_h = g @ vectors
    grad_rows = np.outer(g, h)
    return loss, grad_h, grad_rows


def _draw_negatives(table: np.ndarray, rng, n: int, exclude: int, max_rounds: int = 100):
    """Bulk-draw n noise ids, redrawing collisions with `exclude`.

    Returns (draws, dirty). When `dirty` is true some entries are -1 and
    must be dropped by the caller (the skip path for degenerate tables).
    """
    size = table.shape[0]
    draws = table[rng.integers(0, size, size=n)]
    mask = draws == exclude
    if not mask.any():
        return draws, False
    for _ in range(max_rounds):
        draws[mask] = table[rng.integers(0, size, size=int(mask.sum()))]
        mask = draws == exclude
        if not mask.any():
            return draws, False
    draws[mask] = -1
    return draws, True


def _context_ids(sentence: np.ndarray, position: int, reach: int) -> np.ndarray:
    lo = position - reach if position >= reach else 0
    hi = min(len(sentence), position + reach + 1)
    return np.delete(sentence[lo:hi], position - lo)


def _apply_output_grads(output_matrix, target: int, negative_ids, grad_rows, alpha: float):
    rows = np.empty(1 + len(negative_ids), dtype=np.intp)
    rows[0] = target
    rows[1:] = negative_ids
    np.add.at(output_matrix, rows, grad_rows * (-alpha))


def train_window_sg(sentence, position: int, model: EmbeddingModel, alpha: float,
                    rng, table: np.ndarray) -> float:
    """Skip-Gram updates for one center position; returns the summed loss."""
    hyper = model.hyper
    center = int(sentence[position])
    reach = effective_window(rng, hyper.window, hyper.dynamic_window)
    context = _context_ids(sentence, position, reach)
    if context.size == 0:
        return 0.0
    k = hyper.negatives
    dirty = False
    if k:
        negatives, dirty = _draw_negatives(table, rng, context.size * k, center)
        negatives = negatives.reshape(context.size, k)
    input_matrix = model.input_matrix
    output_matrix = model.output_matrix
    loss = 0.0
    for i in range(context.size):
        ctx = int(context[i])
        negative_ids = negatives[i] if k else _EMPTY_IDS
        if dirty:
            negative_ids = negative_ids[negative_ids >= 0]
        h = input_matrix[ctx]
        pair_loss, grad_h, grad_rows = pair_loss_and_grads(h, center, negative_ids, output_matrix)
        _apply_output_grads(output_matrix, center, negative_ids, grad_rows, alpha)
        input_matrix[ctx] -= alpha * grad_h
        loss += pair_loss
    return loss


def train_window_cbow(sentence, position: int, model: EmbeddingModel, alpha: float,
                      rng, table: np.ndarray) -> float:
    """CBoW update for one center position; returns the loss (0 if no context)."""
    hyper = model.hyper
    center = int(sentence[position])
    reach = effective_window(rng, hyper.window, hyper.dynamic_window)
    context = _context_ids(sentence, position, reach)
    if context.size == 0:
        return 0.0
    input_matrix = model.input_matrix
    output_matrix = model.output_matrix
    context_vectors = input_matrix[context]
    h = context_vectors.mean(axis=0) if hyper.cbow_mean else context_vectors.sum(axis=0)
    k = hyper.negatives
    negative_ids = _EMPTY_IDS
    if k:
        negative_ids, dirty = _draw_negatives(table, rng, k, center)
        if dirty:
            negative_ids = negative_ids[negative_ids >= 0]
    loss, grad_h, grad_rows = pair_loss_and_grads(h, center, negative_ids, output_matrix)
    _apply_output_grads(output_matrix, center, negative_ids, grad_rows, alpha)
    if hyper.cbow_mean:
        update = grad_h * (-alpha / context.size)
    else:
        update = grad_h * (-alpha)
    np.add.at(input_matrix, context, update)
    return loss


class _WordCounter:
    """Shared processed-words counter; racy increments are tolerated."""

    __slots__ = ("value",)

    def __init__(self):
        self.value = 0

    def add(self, n: int):
        self.value += n


def _epoch_pass(shard, model, window_fn, keep, table, counter, total_words, rng):
    hyper = model.hyper
    subsample = hyper.sample > 0
    loss_sum = 0.0
    windows = 0
    for ids in shard:
        n = len(ids)
        if n == 0:
            continue
        alpha = lr_schedule(counter.value, total_words, hyper)
        counter.add(n)
        if subsample:
            kept = ids[rng.random(n) < keep[ids]]
        else:
            kept = ids
        for position in range(len(kept)):
            loss_sum += window_fn(kept, position, model, alpha, rng, table)
            windows += 1
    return loss_sum, windows


def train(corpus, vocab: Vocabulary, hyper: Hyperparameters, mode: str):
    """Train an embedding model over the corpus.

    Runs `hyper.epochs` full passes with per-occurrence subsampling, the
    linear learning-rate schedule on a global processed-words counter, and
    the window update of the requested mode ("cbow" or "sg"). Returns
    (model, per-epoch EpochStats list).
    """
    if mode not in ("cbow", "sg"):
        raise ValueError(f"mode must be 'cbow' or 'sg', got {mode!r}")
    corpus = list(corpus)
    if not corpus:
        raise EmptyCorpusError("cannot train on an empty corpus")
    index = vocab.index
    encoded = [
        np.fromiter((index[t] for t in sentence if t in index), dtype=np.int64)
        for sentence in corpus
    ]
    words_per_epoch = sum(len(ids) for ids in encoded)
    if words_per_epoch == 0:
        raise EmptyCorpusError("no corpus token is in the vocabulary")
    total_words = words_per_epoch * hyper.epochs

    model = init_model(vocab, hyper)
    model.mode = mode
    table = build_negative_table(vocab, hyper.ns_exponent)
    keep = keep_probabilities(vocab, hyper.sample)
    window_fn = train_window_sg if mode == "sg" else train_window_cbow
    counter = _WordCounter()
    rngs = [np.random.default_rng(s) for s in np.random.SeedSequence(hyper.seed).spawn(hyper.workers)]
    shards = [encoded[w :: hyper.workers] for w in range(hyper.workers)]

    history = []
    for epoch in range(1, hyper.epochs + 1):
        if hyper.workers == 1:
            results = [_epoch_pass(encoded, model, window_fn, keep, table,
                                   counter, total_words, rngs[0])]
        else:
            results = [None] * hyper.workers

            def run(w):
                results[w] = _epoch_pass(shards[w], model, window_fn, keep, table,
                                         counter, total_words, rngs[w])

            threads = [threading.Thread(target=run, args=(w,)) for w in range(hyper.workers)]
            for thread in threads:
                thread.start()
            for thread in threads:
                thread.join()
        if not np.isfinite(model.input_matrix).all() or not np.isfinite(model.output_matrix).all():
            raise FloatingPointError(f"non-finite parameters after epoch {epoch}")
        loss_sum = sum(r[0] for r in results)
        windows = sum(r[1] for r in results)
        stats = EpochStats(
            epoch=epoch,
            words=counter.value,
            alpha=lr_schedule(counter.value, total_words, hyper),
            mean_loss=loss_sum / windows if windows else 0.0,
        )
        logger.info(
            "epoch=%d words=%d alpha=%.6f mean_loss=%.6f",
            stats.epoch, stats.words, stats.alpha, stats.mean_loss,
        )
        history.append(stats)
    return model, history
