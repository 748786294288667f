"""
Computation Cache

Process-local memo for expensive exact computations: division values,
order-N relations and fiber decompositions. Entries are keyed by a
namespace and the call arguments, never expire, and are dropped FIFO past
a size cap.

Key Features:
- Namespaced keys built from hashable call arguments
- FIFO size cap
- Hit/miss counters for profiling long table runs
- ``memoize`` decorator for pure functions
"""

from functools import wraps
from typing import Any, Callable, Dict, Hashable, Tuple

# (namespace, args) -> value
_store: Dict[Tuple[str, Hashable], Any] = {}
_MAX_SIZE = 1000
_stats = {"hits": 0, "misses": 0}
_MISSING = object()


def _prune():
    while len(_store) > _MAX_SIZE:
        _store.pop(next(iter(_store)))


def get_cache(namespace: str, key: Hashable, default: Any = None):
    value = _store.get((namespace, key), _MISSING)
    if value is _MISSING:
        _stats["misses"] += 1
        return default
    _stats["hits"] += 1
    return value


def set_cache(namespace: str, key: Hashable, value: Any) -> bool:
    _store[(namespace, key)] = value
    _prune()
    return True


def clear_cache():
    _store.clear()
    _stats.update(hits=0, misses=0)


def delete_cache(namespace: str, key: Hashable) -> bool:
    """Delete a specific key from the cache."""
    return _store.pop((namespace, key), None) is not None


def cache_stats() -> Dict[str, int]:
    return {"entries": len(_store), **_stats}


def memoize(namespace: str) -> Callable:
    """Cache a pure function's results under ``namespace`` keyed by its arguments."""

    def decorator(func: Callable) -> Callable:
        @wraps(func)
        def wrapper(*args):
            value = get_cache(namespace, args, _MISSING)
            if value is _MISSING:
                value = func(*args)
                set_cache(namespace, args, value)
            return value

        return wrapper

    return decorator
