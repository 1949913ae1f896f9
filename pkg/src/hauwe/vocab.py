"""Vocabulary construction, subsampling weights, and the negative-sampling table."""

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import DuplicateWordError, EmptyCorpusError, FileFormatError, SamplingExhaustedError
from .util import atomic_write

#: Default size of the negative-sampling table.
NEGATIVE_TABLE_SIZE = 10_000_000

#: Default exponent flattening the unigram distribution for negative draws.
NS_EXPONENT = 0.75


@dataclass
class Vocabulary:
    """Word/id maps with corpus frequencies.

    Ids are dense 0..V-1, assigned by descending frequency and, among equal
    frequencies, ascending lexicographic order. `total_tokens` is the token
    count of the source corpus, so `counts.sum() <= total_tokens` with
    equality when min_count is 1. Immutable after construction; safe to
    share across threads.
    """

    words: list[str]
    counts: np.ndarray
    total_tokens: int
    index: dict = field(init=False, repr=False)

    def __post_init__(self):
        self.counts = np.asarray(self.counts, dtype=np.int64)
        self.index = {word: i for i, word in enumerate(self.words)}

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word) -> bool:
        return word in self.index


def build_vocab(corpus: Iterable[list[str]], min_count: int = 1) -> Vocabulary:
    """Count words and assign ids to those with frequency >= min_count."""
    if min_count < 1:
        raise ValueError(f"min_count must be >= 1, got {min_count}")
    counter = Counter()
    total_tokens = 0
    for sentence in corpus:
        counter.update(sentence)
        total_tokens += len(sentence)
    if total_tokens == 0:
        raise EmptyCorpusError("corpus contains no tokens")
    pairs = sorted(
        ((word, count) for word, count in counter.items() if count >= min_count),
        key=lambda pair: (-pair[1], pair[0]),
    )
    if not pairs:
        raise EmptyCorpusError(f"no word occurs at least min_count={min_count} times")
    words = [word for word, _ in pairs]
    counts = np.fromiter((count for _, count in pairs), dtype=np.int64, count=len(pairs))
    return Vocabulary(words, counts, total_tokens)


def keep_probability(count: int, total: int, sample: float) -> float:
    """Probability of keeping one occurrence of a word under subsampling.

    p = min(1, (sqrt(f/sample) + 1) * sample/f) with f = count/total.
    Words at or below the `sample` frequency threshold are always kept.
    """
    if count < 1 or total < count:
        raise ValueError("need 1 <= count <= total")
    if sample <= 0:
        raise ValueError("sample must be positive")
    f = count / total
    return min(1.0, (math.sqrt(f / sample) + 1.0) * sample / f)


def keep_probabilities(vocab: Vocabulary, sample: float) -> np.ndarray:
    """Vectorized `keep_probability` over the whole vocabulary.

    sample == 0 disables subsampling (all ones).
    """
    if sample < 0:
        raise ValueError("sample must be >= 0")
    if sample == 0:
        return np.ones(len(vocab))
    f = vocab.counts / vocab.total_tokens
    return np.minimum(1.0, (np.sqrt(f / sample) + 1.0) * sample / f)


def build_negative_table(
    vocab: Vocabulary,
    ns_exponent: float = NS_EXPONENT,
    table_size: int = NEGATIVE_TABLE_SIZE,
) -> np.ndarray:
    """Build the noise-word table for negative sampling.

    Word w fills a round-proportional share of count(w)^ns_exponent over the
    sum of the same power across the vocabulary; drawing a uniform index
    therefore samples the smoothed unigram distribution.
    """
    if len(vocab) == 0:
        raise EmptyCorpusError("cannot build a sampling table for an empty vocabulary")
    if table_size < len(vocab):
        raise ValueError(f"table_size {table_size} < vocabulary size {len(vocab)}")
    weights = vocab.counts.astype(np.float64) ** ns_exponent
    ends = np.rint(np.cumsum(weights) / weights.sum() * table_size).astype(np.int64)
    slots = np.diff(ends, prepend=0)
    return np.repeat(np.arange(len(vocab), dtype=np.int32), slots)


def sample_negative(table: np.ndarray, rng, exclude: int | None = None, max_retries: int = 100):
    """Draw one noise-word id uniformly from the table.

    A draw equal to `exclude` is redrawn up to `max_retries` times; when
    retries run out the draw is skipped (returns None), unless the table
    holds nothing but `exclude`, which raises SamplingExhaustedError.
    """
    size = len(table)
    if size == 0:
        raise ValueError("empty negative-sampling table")
    for _ in range(max_retries + 1):
        drawn = int(table[rng.integers(size)])
        if exclude is None or drawn != exclude:
            return drawn
    if not np.any(table != exclude):
        raise SamplingExhaustedError(f"table contains only the excluded id {exclude}")
    return None


def save_vocab(vocab: Vocabulary, path) -> None:
    """Write "word<TAB>count" lines in id order."""
    with atomic_write(path, "w", encoding="utf-8") as handle:
        for word, count in zip(vocab.words, vocab.counts):
            handle.write(f"{word}\t{count}\n")


def load_vocab(path) -> Vocabulary:
    """Read a vocabulary file written by `save_vocab`.

    The source corpus size is unknown, so total_tokens is the sum of counts.
    """
    words = []
    counts = []
    seen = set()
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            parts = line.rstrip("\n").split("\t")
            if len(parts) != 2:
                raise FileFormatError(f"{path}:{lineno}: expected 'word<TAB>count'")
            word, count_text = parts
            try:
                count = int(count_text)
            except ValueError:
                raise FileFormatError(f"{path}:{lineno}: count is not an integer") from None
            if count < 1:
                raise FileFormatError(f"{path}:{lineno}: count must be positive")
            if word in seen:
                raise DuplicateWordError(f"{path}:{lineno}: duplicate word {word!r}")
            seen.add(word)
            words.append(word)
            counts.append(count)
    if not words:
        raise EmptyCorpusError(f"{path}: vocabulary file is empty")
    return Vocabulary(words, np.array(counts, dtype=np.int64), int(sum(counts)))
