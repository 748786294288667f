"""
Record Codec & Export

Line-oriented structured text used for every machine-readable output and
golden fixture, plus CSV export and atomic file writes.

Key Features:
- Header line ``#torsion-bounds records v1 kind=<kind>``
- One record per line of space-separated key=value pairs in stable order
- Value rendering for ints, rationals, lists, ranges and NumPy scalars
- CSV export with a header row of keys
- Write-to-temporary-then-rename so failed runs leave no partial files
"""

import csv
import io
import os
import tempfile
from decimal import Decimal
from typing import Any, Dict, Iterable, List, Mapping, Tuple

import numpy as np

from ..utils.error_handler import DomainError

HEADER_PREFIX = "#torsion-bounds records v1 kind="

Record = Dict[str, str]


def render_value(x: Any) -> str:
    """Render a value without spaces: lists comma-separated, scalars as text."""
    if isinstance(x, np.ndarray):
        x = x.tolist()
    if isinstance(x, np.generic):
        x = x.item()
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, Decimal):
        return format(x, "f")
    if isinstance(x, Mapping):
        return ",".join(f"{k}:{render_value(v)}" for k, v in x.items())
    if isinstance(x, (list, tuple, set)):
        items = sorted(x) if isinstance(x, set) else x
        return ",".join(render_value(v) for v in items)
    text = str(x)
    if any(ch.isspace() for ch in text) or "=" in text:
        raise DomainError("record values may not contain spaces or '='", {"value": text})
    return text


def render_ranges(values: Iterable[int]) -> str:
    """1,2,3,5,7,8 -> '1-3,5,7-8'."""
    values = sorted(set(values))
    parts = []
    k = 0
    while k < len(values):
        end = k
        while end + 1 < len(values) and values[end + 1] == values[end] + 1:
            end += 1
        parts.append(str(values[k]) if end == k else f"{values[k]}-{values[end]}")
        k = end + 1
    return ",".join(parts)


def parse_ranges(text: str) -> List[int]:
    """Inverse of render_ranges."""
    values: List[int] = []
    if not text:
        return values
    for part in text.split(","):
        try:
            if "-" in part[1:]:
                split = part.index("-", 1)
                low, high = int(part[:split]), int(part[split + 1 :])
                values.extend(range(low, high + 1))
            else:
                values.append(int(part))
        except ValueError as exc:
            raise DomainError(f"malformed range list: {text!r}") from exc
    return values


def format_records(kind: str, records: Iterable[Mapping[str, Any]]) -> str:
    lines = [HEADER_PREFIX + kind]
    for record in records:
        lines.append(" ".join(f"{key}={render_value(value)}" for key, value in record.items()))
    return "\n".join(lines) + "\n"


def parse_records(text: str) -> Tuple[str, List[Record]]:
    """
    Parse structured text.

    Returns:
        (kind, records) with every value left as a string. Blank lines and
        further ``#`` comment lines are ignored.
    """
    lines = text.splitlines()
    if not lines or not lines[0].startswith(HEADER_PREFIX):
        raise DomainError("missing torsion-bounds records header")
    kind = lines[0][len(HEADER_PREFIX) :].strip()
    records = []
    for number, line in enumerate(lines[1:], start=2):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        record = {}
        for token in line.split():
            key, sep, value = token.partition("=")
            if not sep or not key:
                raise DomainError("malformed record field", {"line": number, "field": token})
            record[key] = value
        records.append(record)
    return kind, records


def read_records(path: str) -> Tuple[str, List[Record]]:
    try:
        with open(path, encoding="utf-8") as handle:
            return parse_records(handle.read())
    except OSError as exc:
        raise DomainError(f"cannot read record file {path}: {exc}") from exc


def export_to_csv(records: List[Mapping[str, Any]]) -> str:
    """Records as CSV: a header row of keys, then one row per record."""
    if not records:
        return ""
    output = io.StringIO()
    fieldnames = list(records[0].keys())
    writer = csv.DictWriter(output, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for record in records:
        writer.writerow({key: render_value(value) for key, value in record.items()})
    content = output.getvalue()
    output.close()
    return content


def write_atomic(path: str, content: str) -> str:
    """Write ``content`` to a sibling temporary file and rename it over ``path``."""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, temporary = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".part")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(content)
        os.replace(temporary, path)
    except BaseException:
        if os.path.exists(temporary):
            os.remove(temporary)
        raise
    return path
