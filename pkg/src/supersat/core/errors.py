"""Exception hierarchy for supersat.

Every error carries the process exit code the CLI uses for it:
0 ok, 1 usage, 2 parse, 3 unrealizable or precondition, 4 invariant violation.
"""

from enum import Enum

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_UNREALIZABLE = 3
EXIT_INVARIANT = 4


class SupersatError(Exception):
    """Base class for all library errors."""

    exit_code = EXIT_USAGE

    def __init__(self, message: str) -> None:
        """Initialize the error with a human readable message.

        Args:
            message (str): Error message.

        """
        super().__init__(message)
        self.message = message


class OutOfRange(SupersatError):
    """A vertex index is outside [0, n)."""


class SelfLoop(SupersatError):
    """An edge joins a vertex to itself."""


class DuplicateEdge(SupersatError):
    """The same unordered pair appears twice."""


class EdgeAbsent(SupersatError):
    """The requested edge is not in the graph."""


class TooLarge(SupersatError):
    """The exhaustive search is beyond its vertex cap."""


class BudgetExceeded(SupersatError):
    """The exhaustive search would examine more graphs than allowed."""


class ParseError(SupersatError):
    """Malformed graph file."""

    exit_code = EXIT_PARSE

    def __init__(
        self, message: str, line: int | None = None, offset: int | None = None
    ) -> None:
        """Initialize a parse error.

        Args:
            message (str): What went wrong.
            line (int | None): 1-based line number for text formats.
            offset (int | None): 0-based byte offset for binary formats.

        """
        where = ""
        if line is not None:
            where = f"line {line}: "
        elif offset is not None:
            where = f"byte {offset}: "
        super().__init__(where + message)
        self.line = line
        self.offset = offset


class UnsupportedHeader(SupersatError):
    """The input announces a format we do not read."""

    exit_code = EXIT_PARSE


class TooSmall(SupersatError):
    """The vertex count is below the range where the result is known."""

    exit_code = EXIT_UNREALIZABLE


class PreconditionViolated(SupersatError):
    """A construction was called outside its parameter range."""

    exit_code = EXIT_UNREALIZABLE


class UnrealizableReason(str, Enum):
    """Why a degree profile could not be built."""

    PARITY = "parity"
    DENSITY = "density"
    UNSUPPORTED = "unsupported"


class Unrealizable(SupersatError):
    """No construction is available for the requested parameters."""

    exit_code = EXIT_UNREALIZABLE

    def __init__(self, message: str, reason: UnrealizableReason) -> None:
        """Initialize with the reason code reported by the CLI."""
        super().__init__(f"{message} ({reason.value})")
        self.reason = reason


class RegimeViolated(SupersatError):
    """A bound was evaluated outside the range where it is valid."""

    exit_code = EXIT_UNREALIZABLE


class Infeasible(SupersatError):
    """No part sizes and edge split can hold the required edges."""

    exit_code = EXIT_UNREALIZABLE


class InvariantViolation(SupersatError):
    """A hard consistency check failed."""

    exit_code = EXIT_INVARIANT
