import json

import pytest

from app.data.records import HEADER_PREFIX, format_records, parse_records
from app.enums import Command, OutputFormat
from app.main import main, parse_config
from app.models import RunConfig
from app.runner import golden_value, report_keys, run
from app.utils import error_logger
from app.utils.error_handler import UsageError
from app.utils.error_logger import get_error_logs, log_computation_error


def _records(text):
    return parse_records(text)


# Configuration
def test_parse_config_bound():
    config = parse_config(["--workers", "2", "bound", "--d", "2", "--p", "3", "--f", "2"])
    assert config.command is Command.BOUND
    assert config.parameters == {"d": 2, "p": 3, "f": 2, "e": 1, "n": None}
    assert config.workers == 2
    assert config.format is OutputFormat.RECORDS


def test_parse_config_usage_errors():
    with pytest.raises(UsageError):
        parse_config([])
    with pytest.raises(UsageError):
        parse_config(["bound", "--d", "1"])
    with pytest.raises(UsageError):
        parse_config(["census", "--p", "2", "--dim", "3"])


@pytest.mark.parametrize("command", ["census --p 7", "collate"])
def test_census_mode_defaults_to_complete(command):
    assert parse_config(command.split()).parameters["mode"] == "complete"
    published = parse_config(command.split() + ["--mode", "published"])
    assert published.parameters["mode"] == "published"


def test_run_config_requires_parameters():
    with pytest.raises(ValueError):
        RunConfig(command=Command.DEGSEQ, parameters={})


# Commands
def test_bound_command(capsys):
    assert main(["bound", "--d", "1", "--p", "7"]) == 0
    kind, records = _records(capsys.readouterr().out)
    assert kind == "bound"
    assert records[0]["total"] == "91"
    assert records[0]["additive_primes"] == "2,3"


def test_bound_command_with_global_bounds(capsys):
    assert main(["bound", "--d", "2", "--p", "2", "--n", "1"]) == 0
    _, records = _records(capsys.readouterr().out)
    assert records[1]["collation_bound"] == "1815"
    assert records[1]["silverberg"].endswith("e1275357349")


def test_census_table(capsys):
    assert main(["--format", "table", "census", "--p", "2"]) == 0
    assert capsys.readouterr().out.strip() == "#A(F_2) = 1-16, 19, 20, 25"


def test_census_records_parse(capsys):
    assert main(["census", "--p", "3", "--dim", "1"]) == 0
    kind, records = _records(capsys.readouterr().out)
    assert kind == "census"
    assert sorted(int(r["count"]) for r in records) == list(range(1, 8))


def test_collate_csv(capsys):
    assert main(["--format", "csv", "collate", "--dim", "1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "N,witnesses"
    assert [line.split(",")[0] for line in lines[1:]] == ["1", "2", "3", "4", "5", "6"]


def test_collate_table_lists_undecided(capsys):
    assert main(["--format", "table", "collate"]) == 0
    out = capsys.readouterr().out
    assert "undecided: 11, 13-15, 22, 25, 28, 30, 48, 60, 72" in out


def test_degseq_command(capsys):
    assert main(["--format", "table", "--workers", "1", "degseq", "--N", "5", "--j", "0", "--j", "1728"]) == 0
    assert capsys.readouterr().out.strip() == "Z/5Z: (4), (2,4)"


def test_output_file(tmp_path, capsys):
    path = tmp_path / "collation.txt"
    assert main(["--output", str(path), "collate", "--dim", "1"]) == 0
    assert capsys.readouterr().out == ""
    assert path.read_text().startswith(HEADER_PREFIX + "collation")


# Exit statuses
@pytest.mark.parametrize(
    "argv,status",
    [
        (["bound", "--d", "1"], 2),
        (["census", "--p", "4"], 3),
        (["--workers", "1", "degseq", "--N", "14", "--j", "0"], 4),
        (["bound", "--d", "0", "--p", "2"], 3),
    ],
)
def test_exit_statuses(argv, status, capsys):
    assert main(argv) == status
    error = json.loads(capsys.readouterr().err)
    assert error["exit_code"] == status


def test_failures_are_logged(capsys):
    main(["census", "--p", "4"])
    logs = get_error_logs()
    assert logs[-1]["command"] == "census"
    assert logs[-1]["error_type"] == "domain_error"


def test_error_log_rotation(tmp_path, monkeypatch):
    monkeypatch.setattr(error_logger, "MAX_LOG_BYTES", 0)
    log_dir = str(tmp_path / "rotating")
    log_computation_error("bound", "first", log_dir=log_dir)
    log_computation_error("bound", "second", log_dir=log_dir)
    assert len(list((tmp_path / "rotating").glob("errors.jsonl.*"))) == 1
    assert [entry["error_message"] for entry in get_error_logs(log_dir=log_dir)] == ["second"]


# Golden fixtures
def _write_fixtures(directory, weil_cap_value="5"):
    directory.mkdir()
    fixtures = {
        "bounds.txt": (
            "bound",
            [
                {"key": "weil_cap(2,1)", "value": weil_cap_value},
                {"key": "global_collation_bound(2,1)", "value": "1815"},
            ],
        ),
        "census.txt": ("census", [{"key": "surface(2)", "value": "1-16,19,20,25"}]),
        "collation.txt": ("collation", [{"key": "dimension1", "value": "1-6"}]),
        "degree_sequences.txt": (
            "degseq",
            [
                {"key": "Z/4", "value": "(2),(1,2),(2,4),(6),(1,1,4),(2,2,2),(2,4)^2,(6)^5"},
                {"key": "Z/7", "value": "(2,6)"},
            ],
        ),
        "torsion.txt": ("torsion", []),
    }
    for name, (kind, records) in fixtures.items():
        (directory / name).write_text(format_records(kind, records))
    return directory


def test_verify_goldens_passes(tmp_path, capsys):
    directory = _write_fixtures(tmp_path / "goldens")
    argv = ["--workers", "1", "verify-goldens", "--goldens-dir", str(directory), "--max-n", "4"]
    assert main(argv) == 0
    kind, records = _records(capsys.readouterr().out)
    assert kind == "verify"
    assert [r["key"] for r in records] == [
        "weil_cap(2,1)",
        "global_collation_bound(2,1)",
        "surface(2)",
        "dimension1",
        "Z/4",
    ]
    assert {r["status"] for r in records} == {"pass"}


def test_verify_goldens_reports_one_failure(tmp_path, capsys):
    directory = _write_fixtures(tmp_path / "goldens", weil_cap_value="6")
    argv = ["--workers", "1", "verify-goldens", "--goldens-dir", str(directory), "--max-n", "4"]
    assert main(argv) == 6
    error = json.loads(capsys.readouterr().err)
    assert error["error_type"] == "golden_mismatch"
    (failure,) = error["details"]["failures"]
    assert failure["key"] == "weil_cap(2,1)"
    assert failure["got"] == "5"


def test_verify_goldens_missing_directory(tmp_path):
    assert main(["verify-goldens", "--goldens-dir", str(tmp_path / "missing")]) == 2


# Key registry
def test_golden_value_keys():
    assert golden_value("weil_cap(3,2)") == "55"
    assert golden_value("m_p(2,2)") == "4"
    assert golden_value("local_bound(13,1,1,1)") == "273"
    assert golden_value("Z/9", max_level=7) is None
    assert golden_value("dimension1_excluded") == "5"
    assert golden_value("surface(5)").startswith("4,6-50")


def test_report_keys_cover_rows():
    keys = report_keys(8)
    assert "Z/8" in keys and "Z/2xZ/8" in keys and "Z/9" not in keys
    assert keys[-3:] == ["cubic14a", "cubic14b", "cubic9"]


def test_run_returns_exit_code_and_output():
    result = run(RunConfig(command=Command.BOUND, parameters={"d": 1, "p": 2}))
    assert result["exit_code"] == 0
    assert result["output"].startswith(HEADER_PREFIX + "bound")
    assert result["output_path"] is None


@pytest.mark.slow
def test_verify_repository_goldens(goldens_dir, capsys):
    assert main(["--workers", "2", "verify-goldens", "--goldens-dir", str(goldens_dir)]) == 0
