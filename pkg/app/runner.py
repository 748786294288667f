"""
Command Orchestration

Turns a validated RunConfig into records, renders them in the requested
format and writes the output atomically. Golden fixtures are recomputed
through the same key registry that backs the ``report`` command, so a
report and a fixture file never disagree on a value.

Key Features:
- One handler per command returning (kind, records, human table)
- Structured text, CSV and human-table output
- Key registry for bounds, censuses, collation lists, degree rows, torsion
- Golden verification with per-key results and a mismatch error
- Degree rows computed through the order-stable parallel map
"""

import re
import time
from typing import Any, Callable, Dict, List, Optional, Tuple

from .config.attained_orders import attained_surface_orders
from .config.cm_invariants import CM_J_INVARIANTS
from .config.goldens import EXAMPLE_CURVES, GOLDEN_FIXTURES
from .config.settings import get_settings
from .core.collation import (
    COLLATION_PRIMES,
    admissible_orders,
    dimension_one_input,
    dimension_one_report,
    surface_input,
    surface_report,
    two_adic_decomposition,
    undecided_report,
    weil_interval_input,
)
from .core.honda_tate import census, census_records
from .core.local_bounds import (
    cm_exponent_bound,
    cm_prime_bound,
    corollary_prime_bound,
    global_collation_bound,
    local_bound,
    m_p,
    silverberg_bound_log10,
    weil_cap,
)
from .curves.modular import compress_row, degree_table, expected_degree_sum
from .curves.torsion import torsion_of_spec
from .data.curve_specs import read_specs
from .data.goldens import compare_fixture, fixture_dir, load_fixture, summarize
from .data.records import export_to_csv, format_records, render_ranges, write_atomic
from .enums import CensusMode, Command, ExitCode, OutputFormat
from .models import CurveSpec, GoldenResult, LocalContext, RunConfig
from .ui.tables import (
    format_bound_report,
    format_candidates,
    format_census,
    format_degree_row,
    format_table,
    format_torsion,
)
from .utils.error_handler import DomainError, GoldenMismatchError, UsageError
from .utils.error_logger import debug_log

Records = List[Dict[str, Any]]
Outcome = Tuple[str, Records, str]

_KEY = re.compile(r"^([a-z_0-9]+)\(([^)]*)\)$")
_ROW = re.compile(r"^Z/(\d+)$")
_TWO_ROW = re.compile(r"^Z/2xZ/(\d+)$")


def _mode(parameters: Dict[str, Any]) -> CensusMode:
    try:
        return CensusMode(parameters.get("mode") or CensusMode.COMPLETE.value)
    except ValueError as exc:
        raise UsageError(f"unknown census mode {parameters.get('mode')!r}") from exc


def _row_key(label: str) -> str:
    return label.replace(" ", "")


# Key registry
def _scalar_value(name: str, args: List[int]) -> Optional[str]:
    if name == "weil_cap":
        return str(weil_cap(*args))
    if name == "global_collation_bound":
        return str(global_collation_bound(*args))
    if name == "corollary_prime_bound":
        return str(corollary_prime_bound(*args))
    if name == "silverberg":
        mantissa, exponent = silverberg_bound_log10(*args)
        return f"{mantissa}e{exponent}"
    if name == "local_bound":
        p, f, e, d = args
        return str(local_bound(LocalContext(p=p, f=f, e=e, d=d)).total_bound)
    if name == "m_p":
        return str(m_p(*args))
    if name == "cm_exponent_bound":
        n, mu, flag = args
        return str(cm_exponent_bound(n, mu, bool(flag)))
    if name == "cm_prime_bound":
        n, mu, flag = args
        return str(cm_prime_bound(n, mu, bool(flag)))
    if name == "elliptic":
        return render_ranges(census(args[0], 1).counts)
    if name == "surface":
        return render_ranges(census(args[0], 2, CensusMode.PUBLISHED).counts)
    if name == "surface_complete":
        return render_ranges(census(args[0], 2, CensusMode.COMPLETE).counts)
    return None


def _collation_value(name: str) -> Optional[str]:
    if name == "dimension1":
        return render_ranges(dimension_one_report().admissible_orders)
    if name == "dimension1_excluded":
        return render_ranges(dimension_one_report().annotations)
    if name == "weil_interval":
        candidates = admissible_orders(
            weil_interval_input(COLLATION_PRIMES[:2], 2), global_collation_bound(2, 1)
        )
        max_a, odd = two_adic_decomposition(candidates)
        return f"{max_a}:{render_ranges(odd)}"
    if name == "surfaces":
        return render_ranges(surface_report(mode=CensusMode.PUBLISHED).admissible_orders)
    if name == "surfaces_complete":
        return render_ranges(surface_report(mode=CensusMode.COMPLETE).admissible_orders)
    if name == "undecided":
        return render_ranges(undecided_report(surface_report(), attained_surface_orders()))
    return None


def _example_specs() -> Dict[str, CurveSpec]:
    return {entry["name"]: CurveSpec(**entry) for entry in EXAMPLE_CURVES}


def golden_value(key: str, max_level: Optional[int] = None, workers: int = 1) -> Optional[str]:
    """
    Current value of a fixture key, or None when the key is skipped.

    Args:
        key: e.g. ``weil_cap(2,2)``, ``surface(3)``, ``undecided``, ``Z/7``,
            ``Z/2xZ/8`` or an example curve name
        max_level: Skip degree rows with N above this level
        workers: Worker processes for degree rows
    """
    match = _KEY.match(key)
    if match:
        args = [int(a) for a in match.group(2).split(",") if a.strip()]
        value = _scalar_value(match.group(1), args)
        if value is None:
            raise DomainError(f"unknown fixture key {key!r}")
        return value
    row = _ROW.match(key)
    two_row = _TWO_ROW.match(key)
    if row or two_row:
        N = int((row or two_row).group(1))
        if max_level is not None and N > max_level:
            return None
        if row:
            sequences = degree_table(N, workers=workers)
        else:
            sequences = degree_table(N // 2, workers=workers, full_two_torsion=True)
        return compress_row(sequences).replace(" ", "")
    specs = _example_specs()
    if key in specs:
        return _row_key(torsion_of_spec(specs[key]).label())
    value = _collation_value(key)
    if value is None:
        raise DomainError(f"unknown fixture key {key!r}")
    return value


def verify_goldens(
    directory=None, max_level: Optional[int] = None, workers: int = 1
) -> List[GoldenResult]:
    """Recompute every fixture in the golden directory."""
    directory = fixture_dir(directory or get_settings().goldens_dir)
    results: List[GoldenResult] = []
    for name in GOLDEN_FIXTURES:
        expected = load_fixture(directory, name)
        debug_log(f"verify-goldens: {name} ({len(expected)} keys)")
        results.extend(
            compare_fixture(name, expected, lambda key: golden_value(key, max_level, workers))
        )
    return results


# Command handlers
def _bound(config: RunConfig) -> Outcome:
    params = config.parameters
    ctx = LocalContext(
        p=int(params["p"]), f=int(params.get("f") or 1), e=int(params.get("e") or 1), d=int(params["d"])
    )
    report = local_bound(ctx)
    record = {
        "p": ctx.p,
        "f": ctx.f,
        "e": ctx.e,
        "d": ctx.d,
        "prime_to_p": report.prime_to_p_bound,
        "formal": report.formal_group_factor,
        "component": report.component_factor,
        "special": report.special_fiber_factor,
        "total": report.total_bound,
        "additive_primes": report.additive_prime_support,
    }
    records = [record]
    table = format_bound_report(report)
    n = params.get("n")
    if n:
        n = int(n)
        mantissa, exponent = silverberg_bound_log10(ctx.d, n)
        extra = {
            "d": ctx.d,
            "n": n,
            "collation_bound": global_collation_bound(ctx.d, n),
            "largest_prime": corollary_prime_bound(ctx.d, n),
            "silverberg": f"{mantissa}e{exponent}",
        }
        records.append(extra)
        table += (
            f"\nglobal bound over degree {n}: {extra['collation_bound']}"
            f" (largest prime {extra['largest_prime']}); comparison bound {mantissa} x 10^{exponent}"
        )
    return "bound", records, table


def _census(config: RunConfig) -> Outcome:
    params = config.parameters
    p, dimension, mode = int(params["p"]), int(params.get("dim") or 2), _mode(params)
    result = census(p, dimension, mode)
    return "census", census_records(p, dimension, mode), format_census(result)


def _collate(config: RunConfig) -> Outcome:
    params = config.parameters
    primes = [int(p) for p in params.get("primes") or COLLATION_PRIMES]
    dimension = int(params.get("dim") or 2)
    mode = _mode(params)
    if params.get("weil_only"):
        data = weil_interval_input(primes, dimension)
        title = f"Weil-interval candidates over p in {primes}"
    elif dimension == 1:
        data = dimension_one_input(primes)
        title = "elliptic curves over Q with integral j"
    elif dimension == 2:
        data = surface_input(primes, mode)
        title = f"abelian surfaces with potentially good reduction, p in {primes}"
    else:
        raise UsageError("collate supports --dim 1 or 2", {"dim": dimension})
    annotations = dimension_one_report().annotations if dimension == 1 else None
    candidates = admissible_orders(data, global_collation_bound(dimension, 1), annotations)
    records = [
        {
            "N": N,
            "witnesses": ",".join(f"{p}:{w}" for p, w in candidates.witnesses[N].items()),
        }
        for N in candidates.admissible_orders
    ]
    lines = [format_candidates(title, candidates)]
    max_a, odd = two_adic_decomposition(candidates)
    lines.append(f"N = 2^a * y with a <= {max_a}, y in {render_ranges(odd).replace(',', ', ')}")
    if dimension == 2 and not params.get("weil_only"):
        undecided = undecided_report(candidates, attained_surface_orders())
        lines.append(f"undecided: {render_ranges(undecided).replace(',', ', ')}")
    return "collation", records, "\n".join(lines)


def _degseq(config: RunConfig) -> Outcome:
    params = config.parameters
    N = int(params["N"])
    js = params.get("js") or CM_J_INVARIANTS
    two_torsion = bool(params.get("two_torsion"))
    sequences = degree_table(N, js, workers=config.workers, full_two_torsion=two_torsion)
    records = []
    for sequence in sequences:
        level = sequence.level
        records.append(
            {
                "label": _row_key(sequence.label),
                "j": sequence.j,
                "degrees": sequence.degrees,
                "total": sequence.total,
                "expected_total": expected_degree_sum(level, sequence.j) if not two_torsion else "-",
                "shift": sequence.shift,
            }
        )
    label = sequences[0].label if sequences else f"Z/{N}"
    return "degseq", records, format_degree_row(label, sequences)


def _torsion(config: RunConfig) -> Outcome:
    path = config.parameters.get("spec")
    specs = read_specs(path) if path else list(_example_specs().values())
    records, lines = [], []
    for spec in specs:
        group = torsion_of_spec(spec)
        name = spec.name or spec.modulus
        records.append(
            {
                "name": name,
                "structure": _row_key(group.label()),
                "orders": list(group.generator_orders),
            }
        )
        lines.append(format_torsion(name, group))
    return "torsion", records, "\n".join(lines)


def report_keys(max_level: int) -> List[str]:
    keys = [
        "weil_cap(2,1)",
        "weil_cap(3,1)",
        "weil_cap(5,1)",
        "weil_cap(2,2)",
        "weil_cap(3,2)",
        "weil_cap(8,1)",
        "global_collation_bound(2,1)",
        "global_collation_bound(1,1)",
        "silverberg(2,1)",
        "surface(2)",
        "surface(3)",
        "surface(5)",
        "dimension1",
        "dimension1_excluded",
        "weil_interval",
        "surfaces",
        "undecided",
    ]
    keys += [f"Z/{N}" for N in range(4, max_level + 1)]
    keys += [f"Z/2xZ/{2 * M}" for M in range(2, 5) if 2 * M <= max_level]
    keys += [entry["name"] for entry in EXAMPLE_CURVES]
    return keys


def _report(config: RunConfig) -> Outcome:
    max_level = int(config.parameters.get("max_n") or 7)
    records = [
        {"key": key, "value": golden_value(key, workers=config.workers)}
        for key in report_keys(max_level)
    ]
    table = format_table(records)
    table += "\n\nimported facts (not computed here):\n"
    table += "\n".join(f"  {order}: {source}" for order, source in attained_surface_orders().items())
    return "report", records, table


def _verify(config: RunConfig) -> Outcome:
    params = config.parameters
    max_level = params.get("max_n")
    results = verify_goldens(
        params.get("goldens_dir"),
        int(max_level) if max_level else None,
        config.workers,
    )
    records = [
        {"fixture": r.fixture, "key": r.key, "status": "pass" if r.passed else "FAIL"}
        for r in results
    ]
    summary = summarize(results)
    if summary["failed"]:
        raise GoldenMismatchError(
            f"{summary['failed']} of {summary['checked']} golden values differ",
            {"failures": summary["failures"]},
        )
    return "verify", records, f"{summary['passed']} of {summary['checked']} golden values match"


_HANDLERS: Dict[Command, Callable[[RunConfig], Outcome]] = {
    Command.BOUND: _bound,
    Command.CENSUS: _census,
    Command.COLLATE: _collate,
    Command.DEGSEQ: _degseq,
    Command.TORSION: _torsion,
    Command.REPORT: _report,
    Command.VERIFY: _verify,
}


def render(kind: str, records: Records, table: str, output_format: OutputFormat) -> str:
    if output_format is OutputFormat.CSV:
        return export_to_csv(records)
    if output_format is OutputFormat.TABLE:
        return table + "\n"
    return format_records(kind, records)


def run(config: RunConfig) -> Dict[str, Any]:
    """
    Execute one command.

    Returns:
        Dictionary with ``exit_code``, the rendered ``output`` and the
        ``output_path`` written (if any). Classified errors propagate.
    """
    start_time = time.time()
    kind, records, table = _HANDLERS[config.command](config)
    output = render(kind, records, table, config.format)
    if config.output_path:
        write_atomic(config.output_path, output)
    debug_log(f"{config.command.value}: {len(records)} records in {time.time() - start_time:.2f}s")
    return {
        "exit_code": ExitCode.SUCCESS.value,
        "output": output,
        "output_path": config.output_path,
    }
