"""
Human-readable tables.

Renders results in the row layout used in the literature:
``#A(F_2) = 1-16, 19, 20, 25`` for censuses and
``Z/7Z: (2,6), (12), (6,18)^2, ...`` for degree-sequence rows.
"""

from typing import Any, Dict, List, Mapping, Sequence

from ..curves.modular import compress_row
from ..data.records import render_ranges
from ..models import BoundReport, CandidateList, CountCensus, DegreeSequence, TorsionGroup


def _ranges(values) -> str:
    return render_ranges(values).replace(",", ", ")


def format_bound_report(report: BoundReport) -> str:
    ctx = report.context
    lines = [
        f"local bound for d={ctx.d} over a field with p={ctx.p}, f={ctx.f}, e={ctx.e}",
        f"  prime-to-p part      {report.prime_to_p_bound}",
        f"  formal group factor  {report.formal_group_factor}",
        f"  component factor     {report.component_factor}",
        f"  special fibre factor {report.special_fiber_factor}",
        f"  total                {report.total_bound}",
        f"  additive primes      {', '.join(str(p) for p in report.additive_prime_support)}",
    ]
    return "\n".join(lines)


def format_census(census: CountCensus) -> str:
    return f"#A(F_{census.p}) = {_ranges(census.counts)}"


def format_candidates(title: str, candidates: CandidateList) -> str:
    lines = [f"{title} (N <= {candidates.cap}): {_ranges(candidates.admissible_orders)}"]
    for order, note in sorted(candidates.annotations.items()):
        lines.append(f"  {order}: {note}")
    return "\n".join(lines)


def format_degree_row(label: str, sequences: Sequence[DegreeSequence]) -> str:
    return f"{label}Z: {compress_row(sequences)}"


def format_torsion(name: str, group: TorsionGroup) -> str:
    orders = ", ".join(str(order) for order in group.generator_orders)
    return f"{name}: E(K)_tors = {group.label()} (generator orders {orders})"


def format_table(records: List[Mapping[str, Any]]) -> str:
    """Left-aligned columns for arbitrary records."""
    if not records:
        return ""
    keys = list(records[0].keys())
    cells: List[Dict[str, str]] = [{k: str(r.get(k, "")) for k in keys} for r in records]
    widths = {k: max(len(k), *(len(row[k]) for row in cells)) for k in keys}
    header = "  ".join(k.ljust(widths[k]) for k in keys).rstrip()
    rule = "  ".join("-" * widths[k] for k in keys)
    body = ["  ".join(row[k].ljust(widths[k]) for k in keys).rstrip() for row in cells]
    return "\n".join([header, rule, *body])
