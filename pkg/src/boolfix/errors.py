"""Error types and constants for consistent error handling across the application."""

from __future__ import annotations

from enum import Enum
from typing import Any, Dict, Iterable, Optional


class ErrorCode(str, Enum):
    """Standardized error codes for consistent error handling."""

    # Network file errors
    PARSE_ERROR = "parse_error"
    UNDEFINED_IDENTIFIER = "undefined_identifier"
    DUPLICATE_DEFINITION = "duplicate_definition"
    NO_INPUT = "no_input"

    # Invalid inputs to the algorithms
    INVALID_NETWORK = "invalid_network"
    INVALID_PFVS = "invalid_pfvs"
    INVALID_FVS = "invalid_fvs"
    INVALID_SCHEDULE = "invalid_schedule"
    INVALID_SETS = "invalid_sets"

    # Guards
    RESOURCE_LIMIT = "resource_limit"

    # Oracle / generator
    PRECONDITION_FAILED = "precondition_failed"
    GENERATION_ERROR = "generation_error"

    # Generic errors
    INTERNAL_ERROR = "internal_error"


# Process exit status per error code; anything unlisted exits with 1
EXIT_CODES: Dict[ErrorCode, int] = {
    ErrorCode.PARSE_ERROR: 1,
    ErrorCode.UNDEFINED_IDENTIFIER: 1,
    ErrorCode.DUPLICATE_DEFINITION: 1,
    ErrorCode.NO_INPUT: 1,
    ErrorCode.INVALID_NETWORK: 2,
    ErrorCode.INVALID_PFVS: 2,
    ErrorCode.INVALID_FVS: 2,
    ErrorCode.INVALID_SCHEDULE: 2,
    ErrorCode.INVALID_SETS: 2,
    ErrorCode.RESOURCE_LIMIT: 3,
    ErrorCode.PRECONDITION_FAILED: 4,
    ErrorCode.GENERATION_ERROR: 4,
}


class BoolFixError(Exception):
    """Base exception class for boolfix errors."""

    def __init__(
        self,
        code: ErrorCode,
        message: str,
        details: Optional[Dict[str, Any]] = None,
        cause: Optional[Exception] = None,
    ):
        """Initialize the error.

        Args:
            code: Error code identifier
            message: Human-readable error message
            details: Additional error context and data
            cause: Original exception that caused this error
        """
        super().__init__(message)
        self.code = code
        self.message = message
        self.details = details or {}
        self.cause = cause

    @property
    def exit_code(self) -> int:
        """Return the CLI exit status for this error."""
        return EXIT_CODES.get(self.code, 1)

    def to_dict(self) -> Dict[str, Any]:
        """Convert error to dictionary for JSON output."""
        return {
            "code": self.code.value,
            "message": self.message,
            "details": self.details,
        }


def _fmt_set(vertices: Iterable[int]) -> list[int]:
    return sorted(int(v) for v in vertices)


# Specific error classes
class NetworkSyntaxError(BoolFixError):
    """Raised when a network document cannot be parsed."""

    def __init__(self, message: str, line: int, column: int):
        """Initialize syntax error.

        Args:
            message: What the parser expected or found
            line: 1-based line number
            column: 1-based column number
        """
        super().__init__(
            ErrorCode.PARSE_ERROR,
            f"line {line}, column {column}: {message}",
            details={"line": line, "column": column},
        )
        self.line = line
        self.column = column


class UndefinedIdentifierError(BoolFixError):
    """Raised when an expression references a component that is never defined."""

    def __init__(self, name: str, line: int):
        """Initialize undefined identifier error.

        Args:
            name: The identifier that has no definition
            line: Line of the first reference
        """
        super().__init__(
            ErrorCode.UNDEFINED_IDENTIFIER,
            f"line {line}: undefined identifier '{name}'",
            details={"name": name, "line": line},
        )
        self.name = name


class DuplicateDefinitionError(BoolFixError):
    """Raised when a component is defined twice."""

    def __init__(self, name: str, line: int, first_line: int):
        """Initialize duplicate definition error.

        Args:
            name: The component defined more than once
            line: Line of the repeated definition
            first_line: Line of the original definition
        """
        super().__init__(
            ErrorCode.DUPLICATE_DEFINITION,
            f"line {line}: duplicate definition of '{name}' (first defined on line {first_line})",
            details={"name": name, "line": line, "first_line": first_line},
        )
        self.name = name


class InvalidNetworkError(BoolFixError):
    """Raised when a network violates its structural invariants."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(ErrorCode.INVALID_NETWORK, message, details)


class InvalidPfvsError(BoolFixError):
    """Raised when a vertex set leaves a positive cycle behind."""

    def __init__(self, vertices: Iterable[int], cycle: Optional[Iterable[int]] = None):
        """Initialize invalid PFVS error.

        Args:
            vertices: The rejected vertex set
            cycle: A surviving positive cycle, when one is known
        """
        details: Dict[str, Any] = {"vertices": _fmt_set(vertices)}
        message = f"{details['vertices']} is not a positive feedback vertex set"
        if cycle is not None:
            details["cycle"] = [int(v) for v in cycle]
            message += f": positive cycle {details['cycle']} survives"
        super().__init__(ErrorCode.INVALID_PFVS, message, details)


class InvalidFvsError(BoolFixError):
    """Raised when a vertex set is not a (minimal) feedback vertex set."""

    def __init__(self, vertices: Iterable[int], reason: str = "graph minus the set is cyclic"):
        details = {"vertices": _fmt_set(vertices), "reason": reason}
        super().__init__(
            ErrorCode.INVALID_FVS,
            f"{details['vertices']} is not a valid feedback vertex set: {reason}",
            details,
        )


class InvalidScheduleError(BoolFixError):
    """Raised when a schedule is not a permutation or violates compatibility."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(ErrorCode.INVALID_SCHEDULE, message, details)


class InvalidSetError(BoolFixError):
    """Raised when vertex sets are malformed (out of range, P not inside F)."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(ErrorCode.INVALID_SETS, message, details)


class ResourceLimitError(BoolFixError):
    """Raised when a guard (in-degree, cycle count, state space) is exceeded."""

    def __init__(self, limit: str, value: int, cap: int):
        """Initialize resource limit error.

        Args:
            limit: Name of the guard that tripped
            value: The size that was requested or reached
            cap: The configured maximum
        """
        super().__init__(
            ErrorCode.RESOURCE_LIMIT,
            f"{limit} exceeded: {value} > {cap}",
            details={"limit": limit, "value": value, "cap": cap},
        )
        self.limit = limit
        self.value = value
        self.cap = cap


class PreconditionError(BoolFixError):
    """Raised when an oracle check is called outside its hypotheses."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(ErrorCode.PRECONDITION_FAILED, message, details)


class GenerationError(BoolFixError):
    """Raised when a random network specification cannot be realised."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(ErrorCode.GENERATION_ERROR, message, details)
