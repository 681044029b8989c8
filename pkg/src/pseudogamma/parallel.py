"""Order-preserving parallel map capped by ``PSEUDOGAMMA_THREADS``."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

A = TypeVar("A")
B = TypeVar("B")


def thread_cap() -> int:
    raw = os.environ.get("PSEUDOGAMMA_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)


def ordered_map(fn: Callable[[A], B], items: Iterable[A]) -> list[B]:
    """``[fn(x) for x in items]``, possibly on worker threads; results keep input order."""
    items = list(items)
    workers = min(thread_cap(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
