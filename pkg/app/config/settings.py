"""
Runtime settings loaded from the environment.

Reads an optional ``.env`` file (python-dotenv) and exposes the fixture
directory, default worker count and log directory as a validated model.
"""

import os
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field

try:
    from dotenv import load_dotenv

    load_dotenv()
except ImportError:
    # .env support is optional; plain environment variables still apply
    pass

REPO_ROOT = Path(__file__).resolve().parents[2]
DEFAULT_GOLDENS_DIR = REPO_ROOT / "goldens"


class Settings(BaseModel):
    goldens_dir: Path = DEFAULT_GOLDENS_DIR
    workers: int = Field(default=1, ge=1)
    log_dir: str = "logs"
    debug: bool = False


def _default_workers() -> int:
    return max(1, os.cpu_count() or 1)


def get_settings(goldens_dir: Optional[str] = None) -> Settings:
    """Build settings from the environment; an explicit directory wins."""
    env_dir = os.getenv("TORSION_GOLDENS_DIR")
    workers = os.getenv("TORSION_WORKERS")
    return Settings(
        goldens_dir=Path(goldens_dir or env_dir or DEFAULT_GOLDENS_DIR),
        workers=int(workers) if workers else _default_workers(),
        log_dir=os.getenv("TORSION_LOG_DIR", "logs"),
        debug=os.getenv("DEBUG", "false").lower() == "true",
    )
