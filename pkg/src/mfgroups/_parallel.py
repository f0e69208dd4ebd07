from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor


def run_branches(fn, payload, n_items: int, workers: int) -> list:
    """Call ``fn(payload, indices)`` over top-level branch indices.

    Indices are dealt round-robin to ``workers`` processes; each call owns
    its scratch state. Returns the per-chunk results in chunk order.
    """
    if workers <= 1 or n_items <= 1:
        return [fn(payload, list(range(n_items)))]
    workers = min(workers, n_items)
    chunks = [list(range(i, n_items, workers)) for i in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, [payload] * len(chunks), chunks))
