"""
Fixed-chunk dispatch over a multiprocessing pool.

Chunk boundaries depend only on the problem size and CHUNK_SIZE, never on the worker
count, and results come back in task order, so merged totals are identical for any
number of workers.
"""
import os
from multiprocessing import Pool
from typing import Callable, List, Sequence, Tuple

from config import CHUNK_SIZE
from constants import get_constants
from logger import logger_experiment


def resolve_workers(workers: int = None) -> int:
    if workers is None:
        workers = get_constants()["WORKERS"]
    if not workers or workers < 1:
        workers = os.cpu_count() or 1
    return workers


def chunk_ranges(total: int, chunk_size: int = CHUNK_SIZE) -> List[Tuple[int, int]]:
    return [(start, min(start + chunk_size, total)) for start in range(0, total, chunk_size)]


def run_chunks(worker: Callable, tasks: Sequence, workers: int = None, label: str = "chunks") -> list:
    """
    Map a top-level function over tasks, in order.

    Args:
        worker (Callable): picklable function of one task.
        tasks (Sequence): task arguments.
        workers (int, optional): process count; None reads the run constants, 0 means all cores.
        label (str, optional): name used in progress logs.

    Returns:
        list: worker(task) for every task.
    """
    workers = max(1, min(resolve_workers(workers), len(tasks)))
    results = []
    if workers == 1:
        for i, task in enumerate(tasks):
            results.append(worker(task))
            logger_experiment.debug(f"{label}: chunk {i + 1}/{len(tasks)} done")
        return results
    with Pool(processes=workers) as pool:
        for i, result in enumerate(pool.imap(worker, tasks)):
            results.append(result)
            logger_experiment.debug(f"{label}: chunk {i + 1}/{len(tasks)} done ({workers} workers)")
    return results
