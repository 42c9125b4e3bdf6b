"""Exception hierarchy.

Every error raised on bad user input derives from :class:`SentenceEntropyError`,
so callers (notably the CLI) can separate input problems from bugs.
"""


class SentenceEntropyError(Exception):
    """Base class for all input/usage errors raised by this package."""


class IoError(SentenceEntropyError, OSError):
    """A file is missing or unreadable."""


class EncodingError(SentenceEntropyError, ValueError):
    def __init__(self, path, offset, reason=""):
        self.path = path
        self.offset = offset
        msg = f"{path}: invalid UTF-8 at byte offset {offset}"
        if reason:
            msg += f" ({reason})"
        super().__init__(msg)


class SchemaError(SentenceEntropyError, ValueError):
    """A JSON input does not have the expected structure."""

    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")


class ValidationError(SentenceEntropyError, ValueError):
    """Well-formed input that violates a semantic rule."""

    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")


class EmptyLexiconError(SentenceEntropyError, ValueError):
    pass


class EmptySentenceError(SentenceEntropyError, ValueError):
    pass


class DomainError(SentenceEntropyError, ValueError):
    """Arguments outside the mathematical domain of an entropy function."""


class EmptyInputError(SentenceEntropyError, ValueError):
    pass


class DistributionUnavailableError(SentenceEntropyError, LookupError):
    """Length distribution requested from a profile built from counts only."""


class InvariantViolation(RuntimeError):
    """Internal consistency check failed. Indicates a bug, not bad input."""
