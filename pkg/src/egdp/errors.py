"""Exception hierarchy shared by the engine, the harness and the CLI."""


class EGDPError(Exception):
    """Base class for every error raised by this package."""


class SchemeError(EGDPError):
    """Unknown attribute, constant, relation or scheme, or a scheme mismatch."""


class EmptyTupleSetError(SchemeError):
    """A tuple set with no members was about to be constructed."""


class InconsistentError(EGDPError):
    """An operand is inconsistent where a consistent one is required."""


class NotNormalizedError(InconsistentError):
    """An EGDP relation still contains one of the three conflict situations."""


class BranchLimitError(EGDPError):
    """Mixed-pair expansion (or recombination) would exceed the configured cap."""

    def __init__(self, needed: int, limit: int, what: str = "branches"):
        self.needed = needed
        self.limit = limit
        super().__init__(
            f"this needs {needed} {what}, above the cap of {limit} (raise it with --max-branches)"
        )


class ParseError(EGDPError):
    """Syntax error in a database file or a query string."""

    def __init__(self, message: str, line: int, column: int, expected: str | None = None):
        self.line = line
        self.column = column
        self.expected = expected
        text = f"line {line}, column {column}: {message}"
        if expected:
            text += f" (expected {expected})"
        super().__init__(text)
