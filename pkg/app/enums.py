"""
Enumerations for the Torsion Bounds System

Defines standardized enums for commands, output formats, isogeny-class
types, census modes and error classification.
"""

from enum import Enum


class Command(Enum):
    """Enumeration for CLI commands."""

    BOUND = "bound"
    CENSUS = "census"
    COLLATE = "collate"
    DEGSEQ = "degseq"
    TORSION = "torsion"
    REPORT = "report"
    VERIFY = "verify-goldens"


class OutputFormat(Enum):
    """Enumeration for output formats."""

    RECORDS = "records"
    CSV = "csv"
    TABLE = "table"


class WeilType(Enum):
    """Enumeration for abelian-surface isogeny-class types over F_p."""

    TYPE_I = "I"
    TYPE_II = "II"
    TYPE_III = "III"


class CensusMode(Enum):
    """Enumeration for Type III search ranges.

    ``published`` searches squarefree d < 4p, ``complete`` uses the
    full range d < 16p forced by |b| >= 1/2 and is the default.
    """

    PUBLISHED = "published"
    COMPLETE = "complete"


class ErrorType(Enum):
    """Enumeration for error types."""

    DOMAIN_ERROR = "domain_error"
    SINGULAR_CURVE = "singular_curve"
    UNSUPPORTED_RANGE = "unsupported_range"
    UNDECIDED = "undecided"
    ELIMINATION_FAILURE = "elimination_failure"
    GOLDEN_MISMATCH = "golden_mismatch"
    USAGE_ERROR = "usage_error"
    CONFIGURATION_ERROR = "configuration_error"


class ExitCode(Enum):
    """Process exit statuses returned by the command line."""

    SUCCESS = 0
    USAGE = 2
    DOMAIN = 3
    UNSUPPORTED = 4
    UNDECIDED = 5
    GOLDEN_MISMATCH = 6
