"""
Process-parallel map for independent table cells.

Each task is a top-level callable applied to a picklable argument; the
results come back in input order, so tables rendered from them are
byte-identical for any worker count.
"""

import multiprocessing
from typing import Callable, Iterable, List, TypeVar

from .error_logger import debug_log

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(func: Callable[[T], R], items: Iterable[T], workers: int = 1) -> List[R]:
    """
    Apply ``func`` to every item, in a process pool when ``workers > 1``.

    Args:
        func: Module-level function (must be picklable)
        items: Task arguments
        workers: Number of worker processes

    Returns:
        Results in the order of ``items``. A classified error raised by any
        task is re-raised in the caller.
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    processes = min(workers, len(items), multiprocessing.cpu_count())
    debug_log(f"parallel_map: {len(items)} tasks on {processes} workers")
    with multiprocessing.Pool(processes=processes) as pool:
        return pool.map(func, items, chunksize=1)
