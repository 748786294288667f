"""
Command Line Interface

Entry point for ``python -m app.main <command> ...``. Parses flags into a
validated RunConfig, runs it, prints the output and maps every failure
onto its exit status.

Key Features:
- Sub-commands bound, census, collate, degseq, torsion, report, verify-goldens
- Global --format, --output and --workers options
- Standardized error results on stderr, JSONL error log for failed runs
- Exit codes: 0 success, 2 usage, 3 domain, 4 unsupported, 5 undecided, 6 golden mismatch
"""

import argparse
import json
import sys
import time
from typing import Any, Dict, List, Optional

from pydantic import ValidationError

from .config.settings import get_settings
from .enums import Command, OutputFormat
from .models import RunConfig
from .runner import run
from .utils.error_handler import UsageError, create_error_result
from .utils.error_logger import log_computation_error


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting."""

    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="torsion-bounds", description="Torsion bounds for abelian varieties")
    parser.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.RECORDS.value,
        help="output format",
    )
    parser.add_argument("--output", help="write the output to this file")
    parser.add_argument("--workers", type=int, help="worker processes (default: TORSION_WORKERS or cores)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    bound = sub.add_parser(Command.BOUND.value, help="local and global torsion bounds")
    bound.add_argument("--d", type=int, required=True, help="dimension")
    bound.add_argument("--p", type=int, required=True, help="residue characteristic")
    bound.add_argument("--f", type=int, default=1, help="residue degree")
    bound.add_argument("--e", type=int, default=1, help="absolute ramification index")
    bound.add_argument("--n", type=int, help="also report global bounds over fields of degree n")

    census = sub.add_parser(Command.CENSUS.value, help="point counts over F_p")
    census.add_argument("--p", type=int, required=True)
    census.add_argument("--dim", type=int, default=2, choices=[1, 2])
    census.add_argument("--mode", default="complete", choices=["complete", "published"])

    collate = sub.add_parser(Command.COLLATE.value, help="candidate global torsion orders")
    collate.add_argument("--primes", type=_int_list, default=None)
    collate.add_argument("--dim", type=int, default=2, choices=[1, 2])
    collate.add_argument("--mode", default="complete", choices=["complete", "published"])
    collate.add_argument("--weil-only", action="store_true", help="use bare Weil intervals")

    degseq = sub.add_parser(Command.DEGSEQ.value, help="degree sequences of X_1(N) fibers")
    degseq.add_argument("--N", type=int, required=True)
    degseq.add_argument("--j", type=int, action="append", help="j-invariant (repeatable)")
    degseq.add_argument("--all-cm-j", action="store_true", help="all 13 CM j-invariants (default)")
    degseq.add_argument(
        "--two-torsion", action="store_true", help="Z/2 x Z/2N instead of Z/N"
    )

    torsion = sub.add_parser(Command.TORSION.value, help="torsion of Kubert curves over number fields")
    torsion.add_argument("--spec", help="curve specification file (default: built-in examples)")

    report = sub.add_parser(Command.REPORT.value, help="full reproduction report")
    report.add_argument("--max-n", type=int, default=7)

    verify = sub.add_parser(Command.VERIFY.value, help="recompute golden fixtures")
    verify.add_argument("--goldens-dir", help="fixture directory (default: TORSION_GOLDENS_DIR)")
    verify.add_argument("--max-n", type=int, help="skip degree rows above this level")
    return parser


def _parameters(args: argparse.Namespace) -> Dict[str, Any]:
    command = Command(args.command)
    if command is Command.BOUND:
        return {"d": args.d, "p": args.p, "f": args.f, "e": args.e, "n": args.n}
    if command is Command.CENSUS:
        return {"p": args.p, "dim": args.dim, "mode": args.mode}
    if command is Command.COLLATE:
        return {"primes": args.primes, "dim": args.dim, "mode": args.mode, "weil_only": args.weil_only}
    if command is Command.DEGSEQ:
        return {"N": args.N, "js": None if args.all_cm_j else args.j, "two_torsion": args.two_torsion}
    if command is Command.TORSION:
        return {"spec": args.spec}
    if command is Command.REPORT:
        return {"max_n": args.max_n}
    return {"goldens_dir": args.goldens_dir, "max_n": args.max_n}


def parse_config(argv: Optional[List[str]] = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    workers = args.workers if args.workers is not None else get_settings().workers
    try:
        return RunConfig(
            command=Command(args.command),
            parameters=_parameters(args),
            output_path=args.output,
            format=OutputFormat(args.format),
            workers=workers,
        )
    except ValidationError as exc:
        raise UsageError(str(exc)) from exc


def main(argv: Optional[List[str]] = None) -> int:
    start_time = time.time()
    command = None
    config = None
    try:
        config = parse_config(argv)
        command = config.command.value
        result = run(config)
        if not config.output_path:
            sys.stdout.write(result["output"])
        return result["exit_code"]
    except Exception as e:
        error = create_error_result(e, command, start_time)
        log_computation_error(
            command or "parse",
            error["message"],
            error["error_type"],
            parameters=config.parameters if config else {"argv": argv},
        )
        print(json.dumps(error, indent=2, default=str), file=sys.stderr)
        return error["exit_code"]


if __name__ == "__main__":
    sys.exit(main())
