"""
Bounded fan-out for member-level work.
"""
from concurrent.futures import ThreadPoolExecutor

from .conf import worker_count


def ordered_map(fn, items, workers=None) -> list:
    """Apply ``fn`` to every item, in a thread pool when configured, keeping input order."""
    items = list(items)
    workers = worker_count() if workers is None else max(1, int(workers))
    if workers == 1 or len(items) < 2:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(workers, len(items))) as pool:
        return list(pool.map(fn, items))
