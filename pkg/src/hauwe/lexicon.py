"""Classify vocabulary words as English or other against a reference wordlist.

A word counts as English when it is a member of the reference wordlist and
not on the exclusion list of words that double as Hausa function words.
Matching is exact lowercase membership, no stemming. The reference wordlist
is an input file (one lowercase lemma per line), not a bundled dictionary.
"""

from dataclasses import dataclass
from typing import Container, Iterable

from .vocab import Vocabulary

#: Words found in English wordlists that are used as Hausa words in news
#: text, exempted from English classification by default.
BUILTIN_EXCLUSIONS = frozenset({
    "a", "da", "ta", "ya", "na", "ba", "yi", "su", "ne", "ce", "shi", "ga",
    "za", "sai", "yan", "aka", "wa", "kan", "nan", "ko", "ka", "hau", "mu",
    "masu", "kasa", "kai", "dan", "ake", "sa", "amma", "yana", "yin", "tare",
    "bai", "ita", "ni", "baya", "ana", "masa", "din", "tun", "mun", "kafa",
    "dama", "akan", "ji", "zaman", "fi", "tana", "zo", "abu", "kama", "mana",
    "sha", "kula", "zan", "jin", "kayan", "boko", "ki", "dole", "babu",
    "dace", "gare", "dauke", "damar", "kansa", "kashi", "rana", "dari",
})


@dataclass(frozen=True)
class CompositionStats:
    """Vocabulary- and token-level English counts, with derived ratios."""

    vocab_size: int
    english_vocab_count: int
    total_tokens: int
    english_token_count: int

    @property
    def english_vocab_ratio(self) -> float:
        return self.english_vocab_count / self.vocab_size if self.vocab_size else 0.0

    @property
    def english_token_ratio(self) -> float:
        return self.english_token_count / self.total_tokens if self.total_tokens else 0.0

    @property
    def english_to_other_token_ratio(self) -> float:
        """English tokens per non-English token (the 1:n convention)."""
        other = self.total_tokens - self.english_token_count
        return self.english_token_count / other if other else float("inf")

    def as_dict(self) -> dict:
        return {
            "vocab_size": self.vocab_size,
            "english_vocab_count": self.english_vocab_count,
            "total_tokens": self.total_tokens,
            "english_token_count": self.english_token_count,
        }


def classify_word(word: str, english_wordlist: Container, exclusions: Container = BUILTIN_EXCLUSIONS) -> bool:
    """True when `word` counts as English: listed and not excluded."""
    return word in english_wordlist and word not in exclusions


def vocabulary_composition(vocab: Vocabulary, english_wordlist: Container,
                           exclusions: Container = BUILTIN_EXCLUSIONS) -> CompositionStats:
    """Count English-classified words, unweighted and frequency-weighted."""
    english_vocab = 0
    english_tokens = 0
    for word, count in zip(vocab.words, vocab.counts):
        if classify_word(word, english_wordlist, exclusions):
            english_vocab += 1
            english_tokens += int(count)
    return CompositionStats(
        vocab_size=len(vocab),
        english_vocab_count=english_vocab,
        total_tokens=int(vocab.counts.sum()),
        english_token_count=english_tokens,
    )


def load_wordlist(path) -> set:
    """Read a wordlist file: UTF-8, one word per line, lowercased on load."""
    with open(path, encoding="utf-8") as handle:
        return {line.strip().lower() for line in handle if line.strip()}


def format_composition(stats: CompositionStats) -> str:
    """Key=value report mirroring the four composition rows per model."""
    lines = [
        f"total_tokens={stats.total_tokens}",
        f"english_token_count={stats.english_token_count} ({stats.english_token_ratio:.1%})",
        f"vocab_size={stats.vocab_size}",
        f"english_vocab_count={stats.english_vocab_count} ({stats.english_vocab_ratio:.1%})",
    ]
    return "\n".join(lines)
