"""Exception types shared across the toolkit."""


class HauweError(Exception):
    """Base class for all toolkit errors."""


class EmptyCorpusError(HauweError):
    """Raised when an operation needs at least one token and the corpus has none."""


class SamplingExhaustedError(HauweError):
    """Raised when no negative sample other than the excluded word exists."""


class FileFormatError(HauweError):
    """Base class for violations of the toolkit's file formats."""


class MalformedHeaderError(FileFormatError):
    """Vector file header is unparsable or contradicts the file body."""


class DimensionMismatchError(FileFormatError):
    """A vector record does not match the dimensionality the header declares."""


class DuplicateWordError(FileFormatError):
    """The same word appears twice in a vector or vocabulary file."""


class TruncatedFileError(FileFormatError):
    """File ends before the number of records the header declares."""


class ZeroVectorError(HauweError):
    """Cosine similarity is undefined for a zero-norm vector."""


class OutOfVocabularyError(HauweError):
    """A queried word is not in the model vocabulary."""

    def __init__(self, word: str):
        super().__init__(f"word not in vocabulary: {word!r}")
        self.word = word


class MissingAnnotationError(HauweError):
    """A predicted (query, neighbor) pair has no human judgment."""

    def __init__(self, query: str, neighbor: str):
        super().__init__(f"no annotation for pair ({query!r}, {neighbor!r})")
        self.query = query
        self.neighbor = neighbor
