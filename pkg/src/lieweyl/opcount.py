"""Per-thread counter of exact rational arithmetic operations.

The count is approximate at the granularity of whole polynomial or operator
operations (a product of an ``r``-term and an ``s``-term polynomial counts
``2 r s``), which is enough to compare workloads between configurations.
"""
import threading
from contextlib import contextmanager

_state = threading.local()


def count(k: int = 1) -> None:
    _state.ops = getattr(_state, "ops", 0) + k


def current() -> int:
    return getattr(_state, "ops", 0)


def reset() -> None:
    _state.ops = 0


@contextmanager
def counting():
    """Yield a callable returning the ops performed inside the block."""
    start = current()
    yield lambda: current() - start
