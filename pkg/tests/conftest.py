import os
from pathlib import Path

import pytest

from app.config.goldens import EXAMPLE_CURVES
from app.data.cache import clear_cache
from app.models import CurveSpec

REPO_ROOT = Path(__file__).resolve().parents[1]


# Configure pytest to ignore temp directory
def pytest_ignore_collect(collection_path):
    """Ignore collection of test files in temp directory."""
    return str(collection_path).endswith("temp")


def pytest_addoption(parser):
    parser.addoption(
        "--runslow",
        action="store_true",
        default=False,
        help="run the long modular-curve and torsion computations",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def _isolated_logs(tmp_path, monkeypatch):
    monkeypatch.setenv("TORSION_LOG_DIR", str(tmp_path / "logs"))
    monkeypatch.delenv("DEBUG", raising=False)


@pytest.fixture(scope="session")
def goldens_dir() -> Path:
    return Path(os.getenv("TORSION_GOLDENS_DIR", REPO_ROOT / "goldens"))


@pytest.fixture(scope="session")
def example_specs():
    return {entry["name"]: CurveSpec(**entry) for entry in EXAMPLE_CURVES}


@pytest.fixture
def fresh_cache():
    clear_cache()
    yield
    clear_cache()
