"""
Utility modules.

This package contains the classified error hierarchy and error logging.
"""

from .error_handler import (
    ConfigurationError,
    DomainError,
    EliminationError,
    GoldenMismatchError,
    SingularCurveError,
    TorsionBoundsError,
    UndecidedError,
    UnsupportedRangeError,
    UsageError,
    create_error_result,
    require,
)
from .error_logger import debug_log, get_error_logs, log_computation_error

__all__ = [
    "ConfigurationError",
    "DomainError",
    "EliminationError",
    "GoldenMismatchError",
    "SingularCurveError",
    "TorsionBoundsError",
    "UndecidedError",
    "UnsupportedRangeError",
    "UsageError",
    "create_error_result",
    "require",
    "debug_log",
    "get_error_logs",
    "log_computation_error",
]
