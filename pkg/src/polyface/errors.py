"""Exception types shared across the package."""


class PolyfaceError(Exception):
    """Base class for all errors raised by polyface."""


class UsageError(PolyfaceError, ValueError):
    """A precondition of an operation was violated by the caller."""


class ParseError(PolyfaceError, ValueError):
    """Malformed H-format, V-format or matrix input."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class InvariantError(PolyfaceError, AssertionError):
    """An internal consistency check failed. This is always a bug."""
