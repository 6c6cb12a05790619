"""Exception types shared across the package."""


class TextRankError(Exception):
    """Base class for all errors raised by this package."""


class EmptyDocumentError(TextRankError, ValueError):
    """The document has no usable sentences."""


class StatsUnavailableError(TextRankError, ValueError):
    """Corpus statistics cannot be built from an empty collection."""


class CorruptedStatsError(TextRankError, ValueError):
    """A term's document frequency exceeds the collection size."""


class UndefinedScoreError(TextRankError, ValueError):
    """Every reference was empty, so no ROUGE score is defined."""


class CorpusIOError(TextRankError, OSError):
    """A corpus file could not be read."""
