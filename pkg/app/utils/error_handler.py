"""
Error Handling Module

Provides the classified exception hierarchy and standardized error results
for the torsion bounds library and its command line.

Every computational failure is raised as a subclass of TorsionBoundsError
carrying an ErrorType and the exit status the CLI reports for it.
"""

import time
from typing import Any, Dict, Optional

from ..enums import ErrorType, ExitCode


class TorsionBoundsError(Exception):
    """Base class for all classified failures."""

    error_type: ErrorType = ErrorType.DOMAIN_ERROR
    exit_code: ExitCode = ExitCode.DOMAIN

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def __reduce__(self):
        return (_rebuild, (type(self), self.message, dict(self.details), dict(self.__dict__)))


def _rebuild(cls, message, details, state):
    """Restore a classified error raised inside a worker process."""
    error = Exception.__new__(cls)
    Exception.__init__(error, message)
    error.__dict__.update(state)
    error.message, error.details = message, details
    return error


class DomainError(TorsionBoundsError, ValueError):
    """Input outside the mathematical domain of an operation."""


class SingularCurveError(DomainError):
    """Weierstrass model with vanishing discriminant."""

    error_type = ErrorType.SINGULAR_CURVE


class UnsupportedRangeError(TorsionBoundsError):
    """Valid input that lies outside the supported parameter range."""

    error_type = ErrorType.UNSUPPORTED_RANGE
    exit_code = ExitCode.UNSUPPORTED


class UndecidedError(TorsionBoundsError):
    """Bounds that failed to meet within the search budget."""

    error_type = ErrorType.UNDECIDED
    exit_code = ExitCode.UNDECIDED

    def __init__(
        self,
        message: str,
        lower: Any = None,
        upper: Any = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        merged = {"lower": str(lower), "upper": str(upper)}
        merged.update(details or {})
        super().__init__(message, merged)
        self.lower = lower
        self.upper = upper


class EliminationError(TorsionBoundsError):
    """Resultant elimination stayed degenerate after every retry."""

    error_type = ErrorType.ELIMINATION_FAILURE
    exit_code = ExitCode.UNDECIDED


class GoldenMismatchError(TorsionBoundsError):
    """Recomputed values differ from a golden fixture."""

    error_type = ErrorType.GOLDEN_MISMATCH
    exit_code = ExitCode.GOLDEN_MISMATCH


class UsageError(TorsionBoundsError):
    """Invalid command line flags or parameters."""

    error_type = ErrorType.USAGE_ERROR
    exit_code = ExitCode.USAGE


class ConfigurationError(UsageError):
    """Missing or unusable configuration such as a fixture directory."""

    error_type = ErrorType.CONFIGURATION_ERROR


def create_error_result(
    error: BaseException,
    command: Optional[str] = None,
    start_time: Optional[float] = None,
    additional_details: Optional[Dict[str, Any]] = None,
) -> Dict[str, Any]:
    """Create a standardized error result dictionary.

    Unclassified exceptions are reported as domain errors so that every
    failure maps onto a nonzero exit status.
    """
    if start_time is None:
        start_time = time.time()

    if isinstance(error, TorsionBoundsError):
        error_type = error.error_type
        exit_code = error.exit_code
        details = dict(error.details)
        message = error.message
    else:
        error_type = ErrorType.DOMAIN_ERROR
        exit_code = ExitCode.DOMAIN
        details = {"exception": type(error).__name__}
        message = str(error)

    if additional_details:
        details.update(additional_details)

    return {
        "command": command or "none",
        "error_type": error_type.value,
        "message": message,
        "exit_code": exit_code.value,
        "details": details,
        "elapsed": round(time.time() - start_time, 3),
    }


def require(condition: bool, message: str, **details: Any) -> None:
    """Raise DomainError with ``message`` unless ``condition`` holds."""
    if not condition:
        raise DomainError(message, details or None)
