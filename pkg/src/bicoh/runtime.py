"""Process-wide execution knobs.

BICOH_THREADS caps the size of the pool used for independent table cells
(0 = auto).  Cells are pure and keyed, so evaluation order never affects
results.
"""

import os
from concurrent.futures import ThreadPoolExecutor


def thread_count() -> int:
    raw = os.environ.get("BICOH_THREADS", "1")
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"BICOH_THREADS must be an integer, got {raw!r}") \
            from exc
    if value < 0:
        raise ValueError("BICOH_THREADS must be >= 0")
    if value == 0:
        return min(4, os.cpu_count() or 1)
    return value


def parallel_map(fn, items):
    """Apply fn to items, in a thread pool when more than one thread is
    configured; results come back in input order either way."""
    items = list(items)
    threads = thread_count()
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))
