"""Exception hierarchy shared by every module."""


class ParikhError(Exception):
    """Base class for errors raised by this package."""


class InvalidInputError(ParikhError, ValueError):
    """Malformed word, alphabet, rule, counter or system definition."""


class CapExceededError(ParikhError):
    """A search or enumeration outgrew its configured state limit."""

    def __init__(self, message: str, limit: int | None = None):
        super().__init__(message)
        self.limit = limit


class NotRelatedError(ParikhError, ValueError):
    """The two words are not related by the transformation relation."""
