"""
Data processing and storage modules.

This package contains the computation cache, the structured-text record
codec with CSV export, curve specifications and golden fixtures.
"""

from .cache import cache_stats, clear_cache, get_cache, memoize, set_cache
from .curve_specs import curve_from_spec, read_specs, spec_record, specs_from_text
from .goldens import compare_fixture, fixture_dir, load_fixture, summarize
from .records import (
    export_to_csv,
    format_records,
    parse_ranges,
    parse_records,
    read_records,
    render_ranges,
    render_value,
    write_atomic,
)

__all__ = [
    "cache_stats",
    "clear_cache",
    "get_cache",
    "memoize",
    "set_cache",
    "curve_from_spec",
    "read_specs",
    "spec_record",
    "specs_from_text",
    "compare_fixture",
    "fixture_dir",
    "load_fixture",
    "summarize",
    "export_to_csv",
    "format_records",
    "parse_ranges",
    "parse_records",
    "read_records",
    "render_ranges",
    "render_value",
    "write_atomic",
]
