"""
User interface and presentation modules.

This package contains the human-readable table renderers.
"""

from .tables import (
    format_bound_report,
    format_candidates,
    format_census,
    format_degree_row,
    format_table,
    format_torsion,
)

__all__ = [
    "format_bound_report",
    "format_candidates",
    "format_census",
    "format_degree_row",
    "format_table",
    "format_torsion",
]
