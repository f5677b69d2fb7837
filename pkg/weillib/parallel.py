"""Chunked enumeration sweeps, in one process or in a pool of workers."""
from __future__ import absolute_import, division, print_function

import logging
import os
from contextlib import contextmanager
from concurrent import futures

from . import params


class InlineExecutor(object):
    """Run mapped calls in the current process, in order.

    Stands in for `concurrent.futures.ProcessPoolExecutor` when a single
    worker is requested, so chunk functions need not be picklable.
    """

    def map(self, func, *iterables):
        return [func(*args) for args in zip(*iterables)]


def worker_count(nprocs):
    """Number of workers for a -j/--processes value; 0 or less means all."""
    if nprocs is None or nprocs < 1:
        return os.cpu_count() or 1
    return nprocs


@contextmanager
def pick_pool(nprocs):
    """Yield an executor with `nprocs` workers (inline when there is one)."""
    nworkers = worker_count(nprocs)
    if nworkers == 1:
        yield InlineExecutor()
    else:
        logging.info("Sweeping with %d worker processes", nworkers)
        with futures.ProcessPoolExecutor(max_workers=nworkers) as pool:
            yield pool


def to_chunks(total, chunk_size=params.SWEEP_CHUNK_SIZE):
    """Split the index range [0, total) into (start, stop) chunks.

    The chunks are contiguous and cover the range exactly once, so any
    reduction that is associative and exact gives the same result however
    the chunks are distributed among workers.
    """
    if chunk_size < 1:
        raise ValueError("Chunk size must be positive; got %d" % chunk_size)
    start = 0
    while start < total:
        stop = min(start + chunk_size, total)
        yield start, stop
        start = stop


def sweep(func, total, processes=1, chunk_size=params.SWEEP_CHUNK_SIZE):
    """Apply `func(start, stop)` over chunks of [0, total) and sum the results.

    `func` must be picklable (a module-level function or a partial of one)
    when more than one process is used.
    """
    chunks = list(to_chunks(total, chunk_size))
    if not chunks:
        return None
    starts, stops = zip(*chunks)
    with pick_pool(min(worker_count(processes), len(chunks))) as pool:
        parts = list(pool.map(func, starts, stops))
    result = parts[0]
    for part in parts[1:]:
        result = result + part
    return result
