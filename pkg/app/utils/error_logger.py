"""
Computation Error Logging

Structured logging of failed computations for later analysis.

Key Features:
- JSONL error log plus a human-readable companion log
- Automatic log rotation with cleanup of old rotated files
- Console echo and progress messages only when DEBUG is enabled
- Logging failures never interrupt a computation
"""

import glob
import json
import os
import sys
from datetime import datetime
from typing import Any, Dict, Optional

from ..config.settings import get_settings
from ..enums import ErrorType


def debug_enabled() -> bool:
    return os.getenv("DEBUG", "false").lower() == "true"


def debug_log(message: str) -> None:
    """Print a progress message to stderr when DEBUG is enabled."""
    if debug_enabled():
        print(message, file=sys.stderr)


MAX_LOG_BYTES = 10 * 1024 * 1024
KEEP_ROTATED = 5


def _rotate(log_file: str) -> None:
    """Move an oversized log aside as <name>.<stamp> and keep only the newest rotations."""
    if not os.path.exists(log_file) or os.path.getsize(log_file) <= MAX_LOG_BYTES:
        return
    stamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    os.replace(log_file, f"{log_file}.{stamp}")
    debug_log(f"rotated {log_file} ({stamp})")
    stale = sorted(glob.glob(glob.escape(log_file) + ".*"), reverse=True)[KEEP_ROTATED:]
    for path in stale:
        try:
            os.remove(path)
        except OSError as exc:
            debug_log(f"could not remove {path}: {exc}")


def log_computation_error(
    command: str,
    error_message: str,
    error_type: str = ErrorType.DOMAIN_ERROR.value,
    parameters: Optional[Dict[str, Any]] = None,
    log_dir: Optional[str] = None,
) -> Optional[str]:
    """
    Append a failed computation to the error logs.

    Args:
        command: CLI command or library operation that failed
        error_message: The error message
        error_type: ErrorType value used for categorization
        parameters: Parameters of the failed run
        log_dir: Override for the configured log directory

    Returns:
        Path of the JSONL log file, or None when logging itself failed
    """
    try:
        log_dir = log_dir or get_settings().log_dir
        os.makedirs(log_dir, exist_ok=True)

        log_entry = {
            "timestamp": datetime.now().isoformat(),
            "error_type": error_type,
            "command": command,
            "error_message": str(error_message),
            "parameters": parameters or {},
        }

        log_file = os.path.join(log_dir, "errors.jsonl")
        _rotate(log_file)
        with open(log_file, "a", encoding="utf-8") as f:
            f.write(json.dumps(log_entry, ensure_ascii=False, default=str) + "\n")

        readable = [
            "=" * 80,
            f"{log_entry['timestamp']}  {error_type}  command={command}",
            str(error_message),
        ]
        if parameters:
            readable.append(json.dumps(parameters, indent=2, default=str))
        with open(os.path.join(log_dir, "errors.log"), "a", encoding="utf-8") as f:
            f.write("\n".join(readable) + "\n")

        debug_log(f"Error logged: {error_type} - {error_message}")
        return log_file

    except Exception as e:
        debug_log(f"Failed to log computation error: {e}")
        return None


def get_error_logs(limit: int = 50, log_dir: Optional[str] = None) -> list:
    """Return the most recent ``limit`` JSONL error entries."""
    log_file = os.path.join(log_dir or get_settings().log_dir, "errors.jsonl")
    if not os.path.exists(log_file):
        return []

    logs = []
    with open(log_file, "r", encoding="utf-8") as f:
        for line in f.readlines()[-limit:]:
            try:
                logs.append(json.loads(line.strip()))
            except json.JSONDecodeError:
                continue
    return logs
