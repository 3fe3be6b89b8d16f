"""Exception types shared across the toolkit."""


class WordsigError(Exception):
    """Base class for all toolkit errors."""


class CorpusError(WordsigError):
    """Raised for unreadable, empty or malformed corpus input."""


class VectorFormatError(WordsigError):
    """Raised when a vector file violates the text format contract."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


class TaggedTokenError(WordsigError):
    """Raised when a token<TAB>tag file cannot be parsed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


class DataFileError(WordsigError):
    """Raised when an explorer data file fails validation."""


class MemoryLimitError(WordsigError):
    """Raised when the requested model would exceed the memory bound."""


class TrainingDivergedError(WordsigError):
    """Raised when training produces a non-finite activation."""
