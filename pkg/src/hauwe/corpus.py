"""Turn raw UTF-8 text dumps into a cleaned, deduplicated, tokenized corpus.

The cleaning rules, in order:

1. split each input document into sentences on ``. ! ?`` and newlines
2. lowercase
3. delete punctuation and symbol characters (apostrophe and hyphen are
   part of the orthography and survive)
4. split on whitespace
5. drop tokens containing digits or characters outside the Boko alphabet
6. reject sentences with no remaining word, then sentences shorter than
   3 tokens
7. drop exact duplicate sentences, keeping the first occurrence

Input files carry one raw document per line; output files carry one
cleaned sentence per line with tokens joined by single spaces.
"""

import json
import unicodedata
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

from .util import atomic_write

#: Lowercase Boko alphabet: ASCII letters plus the hooked Hausa letters.
BOKO_LETTERS = frozenset("abcdefghijklmnopqrstuvwxyzɓɗƙƴ")

#: Characters allowed inside a cleaned token.
TOKEN_CHARS = BOKO_LETTERS | frozenset("'-")

_SENTENCE_BREAK = re.compile(r"[.!?\n]+")

# Typographic and modifier-letter apostrophes fold to the plain one.
_APOSTROPHE_MAP = {0x2019: "'", 0x02BC: "'"}

# Lazily filled map: character -> replacement under punctuation removal.
_PUNCT_CACHE: dict[str, str] = {}

TokenizedSentence = list


class RejectReason(Enum):
    """Why `clean_sentence` refused a sentence."""

    TOO_SHORT = "too_short"
    NO_WORDS = "no_words"


@dataclass(frozen=True)
class CorpusStats:
    """Counts describing one cleaning run.

    `sentence_count` counts accepted sentences before deduplication;
    `total_tokens` counts tokens of the deduplicated corpus, i.e. the
    corpus that training actually sees.
    """

    sentence_count: int
    total_tokens: int
    unique_sentence_count: int
    duplicate_removed_count: int

    def as_dict(self) -> dict:
        return {
            "sentence_count": self.sentence_count,
            "total_tokens": self.total_tokens,
            "unique_sentence_count": self.unique_sentence_count,
            "duplicate_removed_count": self.duplicate_removed_count,
        }


def segment(doc: str) -> list[str]:
    """Split one document into raw sentence strings.

    Splits on sentence-final punctuation (. ! ?) and newlines; empty
    segments are dropped.
    """
    return [part.strip() for part in _SENTENCE_BREAK.split(doc) if part.strip()]


def _strip_punctuation(text: str) -> str:
    """Delete Unicode punctuation (P*) and symbols (S*), keeping ' and -."""
    out = []
    cache = _PUNCT_CACHE
    for ch in text:
        repl = cache.get(ch)
        if repl is None:
            if ch in "'-" or unicodedata.category(ch)[0] not in "PS":
                repl = ch
            else:
                repl = ""
            cache[ch] = repl
        out.append(repl)
    return "".join(out)


def clean_sentence(raw: str) -> list[str] | RejectReason:
    """Clean one segmented sentence into a token list.

    Returns the token list, or a `RejectReason` when fewer than 3 tokens
    survive (`TOO_SHORT`) or no surviving token contains a letter
    (`NO_WORDS`). Token filtering happens first, then the no-words check,
    then the length check.
    """
    text = unicodedata.normalize("NFC", raw).translate(_APOSTROPHE_MAP).lower()
    tokens = _strip_punctuation(text).split()
    tokens = [t for t in tokens if all(c in TOKEN_CHARS for c in t)]
    if not any(any(c in BOKO_LETTERS for c in t) for t in tokens):
        return RejectReason.NO_WORDS
    if len(tokens) < 3:
        return RejectReason.TOO_SHORT
    return tokens


def dedup(sentences: Iterable[list[str]]) -> Iterator[list[str]]:
    """Yield the first occurrence of each distinct token sequence, in order."""
    seen = set()
    for sentence in sentences:
        key = tuple(sentence)
        if key not in seen:
            seen.add(key)
            yield sentence


def corpus_stats(corpus: Iterable[list[str]]) -> CorpusStats:
    """Count sentences, duplicates, and tokens of the deduplicated corpus."""
    seen = set()
    sentence_count = 0
    total_tokens = 0
    duplicates = 0
    for sentence in corpus:
        sentence_count += 1
        key = tuple(sentence)
        if key in seen:
            duplicates += 1
        else:
            seen.add(key)
            total_tokens += len(sentence)
    return CorpusStats(
        sentence_count=sentence_count,
        total_tokens=total_tokens,
        unique_sentence_count=sentence_count - duplicates,
        duplicate_removed_count=duplicates,
    )


def clean_corpus(docs: Iterable[str]) -> tuple[list[list[str]], CorpusStats]:
    """Run the full pipeline over raw documents.

    Returns the deduplicated corpus and the stats of the run.
    """
    accepted = []
    for doc in docs:
        for raw in segment(doc):
            tokens = clean_sentence(raw)
            if not isinstance(tokens, RejectReason):
                accepted.append(tokens)
    stats = corpus_stats(accepted)
    return list(dedup(accepted)), stats


def read_documents(path) -> list[str]:
    """Read a raw dump: UTF-8, one document per line."""
    with open(path, encoding="utf-8") as handle:
        return [line.rstrip("\n") for line in handle]


def write_corpus(sentences: Iterable[list[str]], path) -> None:
    """Write a cleaned corpus: one sentence per line, space-joined tokens."""
    with atomic_write(path, "w", encoding="utf-8") as handle:
        for sentence in sentences:
            handle.write(" ".join(sentence) + "\n")


def read_corpus(path) -> list[list[str]]:
    """Read a cleaned corpus written by `write_corpus`."""
    with open(path, encoding="utf-8") as handle:
        return [line.split() for line in handle if line.strip()]


def write_stats(stats: CorpusStats, path) -> None:
    """Write stats as JSON."""
    with atomic_write(path, "w", encoding="utf-8") as handle:
        json.dump(stats.as_dict(), handle, indent=2)
        handle.write("\n")


def format_stats(stats: CorpusStats) -> str:
    """Flat key=value report, one line per field."""
    return "\n".join(f"{key}={value}" for key, value in stats.as_dict().items())
