"""Persist and load word vectors in the two interchange formats.

Text (.vec): first line "V dim", then one "word f1 ... fdim" line per word,
single-space separated, values printed with 9 significant digits (enough to
round-trip float32 exactly).

Binary (.bin): ASCII header "V dim\\n", then per word its UTF-8 bytes, one
space, and dim little-endian float32 values. Round-trips are bit-exact.

Only the input matrix travels in these formats; loaded models come back
with no output matrix, no counts, and no training metadata.
"""

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatchError,
    DuplicateWordError,
    MalformedHeaderError,
    TruncatedFileError,
)
from .training import EmbeddingModel
from .util import atomic_write
from .vocab import Vocabulary


def _checked_words(model: EmbeddingModel) -> list[str]:
    words = model.vocab.words
    for word in words:
        if not word or " " in word or "\n" in word:
            raise ValueError(f"word not representable in vector files: {word!r}")
    if len(words) != model.input_matrix.shape[0]:
        raise ValueError("vocabulary size does not match the matrix row count")
    return words


def _loaded_model(words: list[str], matrix: np.ndarray) -> EmbeddingModel:
    vocab = Vocabulary(words, np.ones(len(words), dtype=np.int64), len(words))
    return EmbeddingModel(matrix, None, vocab, None, None)


def save_text(model: EmbeddingModel, path) -> None:
    words = _checked_words(model)
    matrix = model.input_matrix
    with atomic_write(path, "w", encoding="utf-8") as handle:
        handle.write(f"{len(words)} {matrix.shape[1]}\n")
        for word, row in zip(words, matrix):
            handle.write(word)
            for value in row:
                handle.write(f" {value:.9g}")
            handle.write("\n")


def load_text(path) -> EmbeddingModel:
    with open(path, encoding="utf-8") as handle:
        header = handle.readline().split()
        if len(header) != 2 or not all(part.isdigit() for part in header):
            raise MalformedHeaderError(f"{path}: expected header 'V dim'")
        size, dim = int(header[0]), int(header[1])
        if size < 1 or dim < 1:
            raise MalformedHeaderError(f"{path}: header sizes must be positive")
        words = []
        seen = set()
        matrix = np.empty((size, dim), dtype=np.float32)
        for i in range(size):
            line = handle.readline()
            if not line:
                raise TruncatedFileError(f"{path}: {size} records declared, {i} found")
            parts = line.split()
            if len(parts) != dim + 1:
                raise DimensionMismatchError(
                    f"{path}: record {i} has {len(parts) - 1} values, header says {dim}"
                )
            word = parts[0]
            if word in seen:
                raise DuplicateWordError(f"{path}: duplicate word {word!r}")
            seen.add(word)
            try:
                matrix[i] = [float(part) for part in parts[1:]]
            except ValueError:
                raise DimensionMismatchError(
                    f"{path}: record {i} has a non-numeric value"
                ) from None
            words.append(word)
        if handle.read().strip():
            raise MalformedHeaderError(f"{path}: more records than the header declares")
    return _loaded_model(words, matrix)


def save_binary(model: EmbeddingModel, path) -> None:
    words = _checked_words(model)
    matrix = np.ascontiguousarray(model.input_matrix, dtype="<f4")
    with atomic_write(path, "wb") as handle:
        handle.write(f"{len(words)} {matrix.shape[1]}\n".encode("ascii"))
        for word, row in zip(words, matrix):
            handle.write(word.encode("utf-8"))
            handle.write(b" ")
            handle.write(row.tobytes())


def load_binary(path) -> EmbeddingModel:
    with open(path, "rb") as handle:
        data = handle.read()
    newline = data.find(b"\n")
    if newline < 0:
        raise MalformedHeaderError(f"{path}: no header line")
    try:
        header = data[:newline].decode("ascii").split()
    except UnicodeDecodeError:
        raise MalformedHeaderError(f"{path}: header is not ASCII") from None
    if len(header) != 2 or not all(part.isdigit() for part in header):
        raise MalformedHeaderError(f"{path}: expected header 'V dim'")
    size, dim = int(header[0]), int(header[1])
    if size < 1 or dim < 1:
        raise MalformedHeaderError(f"{path}: header sizes must be positive")
    record_bytes = 4 * dim
    words = []
    seen = set()
    matrix = np.empty((size, dim), dtype=np.float32)
    position = newline + 1
    for i in range(size):
        space = data.find(b" ", position)
        if space < 0:
            raise TruncatedFileError(f"{path}: file ends inside record {i}")
        try:
            word = data[position:space].decode("utf-8")
        except UnicodeDecodeError:
            raise MalformedHeaderError(f"{path}: record {i} word is not UTF-8") from None
        if word in seen:
            raise DuplicateWordError(f"{path}: duplicate word {word!r}")
        seen.add(word)
        if space + 1 + record_bytes > len(data):
            raise TruncatedFileError(f"{path}: file ends inside record {i}")
        matrix[i] = np.frombuffer(data, dtype="<f4", count=dim, offset=space + 1)
        words.append(word)
        position = space + 1 + record_bytes
    if position != len(data):
        raise MalformedHeaderError(f"{path}: trailing bytes after the declared records")
    return _loaded_model(words, matrix)


@dataclass(frozen=True)
class NormalizedVectors:
    """Unit-norm copy of an input matrix; zero rows stay zero and are flagged."""

    matrix: np.ndarray
    zero_rows: np.ndarray

    @property
    def has_zero_rows(self) -> bool:
        return bool(self.zero_rows.any())


def normalize(model: EmbeddingModel) -> NormalizedVectors:
    """Row-normalize the input matrix into a read-optimized copy."""
    matrix = model.input_matrix
    norms = np.linalg.norm(matrix, axis=1)
    zero_rows = norms == 0
    safe = np.where(zero_rows, 1.0, norms)
    return NormalizedVectors(matrix / safe[:, np.newaxis], zero_rows)
