"""Shared exception types."""


class BisetCoverError(Exception):
    """Base class for library errors."""


class ParseError(BisetCoverError):
    """Malformed instance file. Carries the 1-based line number."""

    def __init__(self, line_no, message):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class EnumerationCapError(BisetCoverError):
    """Ground set too large for exhaustive biset enumeration."""


class InfeasibleCoverError(BisetCoverError):
    """No cover exists. Carries a witness biset when one is known."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class PreconditionError(BisetCoverError):
    """A documented size/shape precondition of an operation was violated."""


class InvariantError(BisetCoverError):
    """An internal invariant the analysis proves must hold failed at runtime.

    Raised instead of bare assert so the checks survive python -O.
    """


class CoverCheckError(BisetCoverError):
    """A recorded inequality check failed. Carries the report for inspection."""

    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)
