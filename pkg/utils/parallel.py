"""
Worker pool helpers; TORSIONLAB_WORKERS caps parallelism.

@Time ： 2026-10-18
"""
from joblib import Parallel, delayed

from utils.settings import get_settings


def worker_count(requested=None):
    cap = get_settings().workers
    if requested is None:
        return cap
    return max(1, min(int(requested), cap))


def ordered_map(func, items, workers=None):
    """
    Apply func to every item, preserving input order regardless of worker count.
    :param func: picklable callable
    :param items: iterable of arguments
    :param workers: optional request, clipped to the configured cap
    """
    items = list(items)
    n_jobs = worker_count(workers)
    if n_jobs == 1 or len(items) <= 1:
        return [func(item) for item in items]
    return Parallel(n_jobs=n_jobs, prefer="processes")(delayed(func)(item) for item in items)
