"""
Golden fixtures: loading and byte-exact comparison.

Every fixture is a record file whose records carry ``key`` and ``value``;
the recomputed value for each key is compared against it.
"""

from pathlib import Path
from typing import Callable, Dict, List, Optional

from ..config.goldens import GOLDEN_FIXTURES, SILVERBERG_TOLERANCE
from ..models import GoldenResult
from ..utils.error_handler import ConfigurationError, DomainError
from .records import read_records


def fixture_dir(path) -> Path:
    directory = Path(path)
    if not directory.is_dir():
        raise ConfigurationError(f"golden fixture directory not found: {directory}")
    return directory


def load_fixture(directory, name: str) -> Dict[str, str]:
    """key -> expected value for one fixture file."""
    path = fixture_dir(directory) / name
    if not path.is_file():
        raise ConfigurationError(f"golden fixture missing: {path}")
    kind, records = read_records(str(path))
    expected_kind = GOLDEN_FIXTURES.get(name)
    if expected_kind is not None and kind != expected_kind:
        raise DomainError("fixture holds the wrong record kind", {"fixture": name, "kind": kind})
    values = {}
    for record in records:
        if "key" not in record or "value" not in record:
            raise DomainError("fixture records need key and value", {"fixture": name})
        values[record["key"]] = record["value"]
    return values


def compare_fixture(
    name: str,
    expected: Dict[str, str],
    compute: Callable[[str], Optional[str]],
) -> List[GoldenResult]:
    """
    Recompute every key of a fixture.

    Args:
        name: Fixture file name
        expected: key -> expected value
        compute: Returns the current value for a key, or None to skip it

    Returns:
        One GoldenResult per key that was not skipped, in fixture order
    """
    results = []
    for key, value in expected.items():
        got = compute(key)
        if got is None:
            continue
        tolerance = SILVERBERG_TOLERANCE if key.startswith("silverberg") else 0.0
        results.append(
            GoldenResult(fixture=name, key=key, expected=value, got=got, tolerance=tolerance)
        )
    return results


def summarize(results: List[GoldenResult]) -> Dict[str, object]:
    failures = [result for result in results if not result.passed]
    return {
        "checked": len(results),
        "passed": len(results) - len(failures),
        "failed": len(failures),
        "failures": [
            {"fixture": r.fixture, "key": r.key, "expected": r.expected, "got": r.got}
            for r in failures
        ],
    }
