"""Cosine nearest-neighbor queries and annotation-based accuracy scoring.

Neighbor ranking is an exact full scan: every other vocabulary word is
scored by cosine similarity and sorted by descending score, then ascending
word. Human correct/incorrect judgments arrive as an external annotation
file; the toolkit never judges correctness itself.
"""

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    FileFormatError,
    MissingAnnotationError,
    OutOfVocabularyError,
    ZeroVectorError,
)
from .store import normalize
from .training import EmbeddingModel
from .util import atomic_write

#: Default evaluation queries: common Hausa words and person names.
DEFAULT_QUERY_WORDS = (
    "miji", "mata", "makaranta", "gida", "tafiya", "kyau", "ido", "waya",
    "kira", "hadisi", "kara", "godiya", "kuka", "ibrahim", "so", "kallo",
    "unguwa", "dariya", "kaga", "sai", "kuma", "rawa", "kida", "waka",
    "habiba", "zainab", "kalma", "musa", "abdullahi", "littafi",
)


@dataclass
class SimilarityReport:
    """Ranked neighbor lists per query word.

    `entries` maps each query, in query order, to its (neighbor, score)
    list sorted best-first. Out-of-vocabulary queries map to empty lists
    and still count as k misses when scored.
    """

    label: str
    k: int
    entries: dict = field(default_factory=dict)


def cosine(u, v) -> float:
    """Cosine similarity, clamped to [-1, 1] against rounding."""
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if u.shape != v.shape:
        raise ValueError(f"dimension mismatch: {u.shape} vs {v.shape}")
    norm_u = np.linalg.norm(u)
    norm_v = np.linalg.norm(v)
    if norm_u == 0 or norm_v == 0:
        raise ZeroVectorError("cosine similarity is undefined for a zero vector")
    return float(np.clip(u @ v / (norm_u * norm_v), -1.0, 1.0))


def _lexicographic_ranks(words: Sequence[str]) -> np.ndarray:
    order = sorted(range(len(words)), key=words.__getitem__)
    ranks = np.empty(len(words), dtype=np.int64)
    ranks[order] = np.arange(len(words))
    return ranks


def _ranked_neighbors(normed: np.ndarray, lex_ranks: np.ndarray, words: Sequence[str],
                      query_id: int, k: int) -> list:
    query = normed[query_id]
    if not query.any():
        raise ZeroVectorError(f"query word {words[query_id]!r} has a zero vector")
    scores = normed @ query
    np.clip(scores, -1.0, 1.0, out=scores)
    order = np.lexsort((lex_ranks, -scores))
    result = []
    for i in order:
        if i == query_id:
            continue
        result.append((words[i], float(scores[i])))
        if len(result) == k:
            break
    return result


def most_similar(model: EmbeddingModel, word: str, k: int = 10) -> list:
    """Top-k neighbors of `word` by cosine over all other vocabulary words."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if word not in model.vocab:
        raise OutOfVocabularyError(word)
    normed = normalize(model).matrix
    words = model.vocab.words
    return _ranked_neighbors(normed, _lexicographic_ranks(words), words,
                             model.vocab.index[word], k)


def evaluate(model: EmbeddingModel, query_words: Iterable[str] = DEFAULT_QUERY_WORDS,
             k: int = 10, label: str = "model") -> SimilarityReport:
    """Rank the top-k neighbors of every query word.

    Queries missing from the vocabulary are recorded with empty neighbor
    lists (k misses each) instead of aborting the run.
    """
    queries = list(query_words)
    if not queries:
        raise ValueError("query_words must not be empty")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    normed = normalize(model).matrix
    words = model.vocab.words
    lex_ranks = _lexicographic_ranks(words)
    report = SimilarityReport(label=label, k=k)
    for query in queries:
        if query in model.vocab:
            report.entries[query] = _ranked_neighbors(
                normed, lex_ranks, words, model.vocab.index[query], k)
        else:
            report.entries[query] = []
    return report


def score_annotations(report: SimilarityReport, annotations: Mapping):
    """Score a report against human judgments.

    `annotations` maps (query, neighbor) pairs to truthy (correct) or falsy
    (incorrect). Returns (accuracy, per-query correct counts); accuracy is
    total correct over |queries| * k, so unpredicted slots count as misses.
    """
    per_word = {}
    correct_total = 0
    for query, neighbors in report.entries.items():
        correct = 0
        for neighbor, _ in neighbors:
            key = (query, neighbor)
            if key not in annotations:
                raise MissingAnnotationError(query, neighbor)
            if annotations[key]:
                correct += 1
        per_word[query] = correct
        correct_total += correct
    denominator = len(report.entries) * report.k
    if denominator == 0:
        raise ValueError("cannot score an empty report")
    return correct_total / denominator, per_word


def write_report(report: SimilarityReport, path) -> None:
    """Write "query<TAB>rank<TAB>neighbor<TAB>score" lines, ranks 1-based."""
    with atomic_write(path, "w", encoding="utf-8") as handle:
        for query, neighbors in report.entries.items():
            for rank, (neighbor, score) in enumerate(neighbors, start=1):
                handle.write(f"{query}\t{rank}\t{neighbor}\t{score:.9g}\n")


def load_report(path, label: str = "report") -> SimilarityReport:
    """Read a report file written by `write_report`.

    k is recovered as the longest neighbor list present. Queries whose
    every prediction was out of vocabulary do not appear in the file, so
    they are absent from the loaded report.
    """
    entries: dict = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            parts = line.rstrip("\n").split("\t")
            if len(parts) != 4:
                raise FileFormatError(
                    f"{path}:{lineno}: expected 'query<TAB>rank<TAB>neighbor<TAB>score'"
                )
            query, rank_text, neighbor, score_text = parts
            try:
                rank = int(rank_text)
                score = float(score_text)
            except ValueError:
                raise FileFormatError(f"{path}:{lineno}: bad rank or score") from None
            neighbors = entries.setdefault(query, [])
            if rank != len(neighbors) + 1:
                raise FileFormatError(f"{path}:{lineno}: ranks must be 1..n in order")
            neighbors.append((neighbor, score))
    if not entries:
        raise FileFormatError(f"{path}: report file is empty")
    k = max(len(neighbors) for neighbors in entries.values())
    return SimilarityReport(label=label, k=k, entries=entries)


def load_annotations(path) -> dict:
    """Read "query<TAB>neighbor<TAB>0|1" lines into a (query, neighbor) map."""
    annotations = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            parts = line.rstrip("\n").split("\t")
            if len(parts) != 3 or parts[2] not in ("0", "1"):
                raise FileFormatError(
                    f"{path}:{lineno}: expected 'query<TAB>neighbor<TAB>0|1'"
                )
            annotations[(parts[0], parts[1])] = parts[2] == "1"
    return annotations
