# -*- coding: utf-8 -*-
"""Compiled BFS kernels over CSR arrays (indptr, indices)."""

import numba
import numpy as np
import psutil
from numba import njit, prange

from proxrem.util.config import active_config
from proxrem.util.log import debug


@njit(cache=True)
def _sweep(indptr, indices, source, epoch, seen, dist, queue):
    # seen[w] == epoch marks w visited in this sweep; queue is reused across sweeps
    head = 0
    tail = 1
    queue[0] = source
    seen[source] = epoch
    dist[source] = 0
    total = 0
    ecc = 0
    while head < tail:
        v = queue[head]
        head += 1
        dw = dist[v] + 1
        for p in range(indptr[v], indptr[v + 1]):
            w = indices[p]
            if seen[w] != epoch:
                seen[w] = epoch
                dist[w] = dw
                total += dw
                if dw > ecc:
                    ecc = dw
                queue[tail] = w
                tail += 1
    return total, ecc, tail


def _all_sources_impl(indptr, indices, n_chunks):
    n = indptr.shape[0] - 1
    totals = np.empty(n, np.int64)
    eccs = np.empty(n, np.int64)
    reached = np.empty(n, np.int64)
    for c in prange(n_chunks):
        lo = c * n // n_chunks
        hi = (c + 1) * n // n_chunks
        seen = np.zeros(n, np.int64)
        dist = np.empty(n, np.int64)
        queue = np.empty(n, np.int64)
        for s in range(lo, hi):
            t, e, r = _sweep(indptr, indices, s, s + 1, seen, dist, queue)
            totals[s] = t
            eccs[s] = e
            reached[s] = r
    return totals, eccs, reached


_all_sources_serial = njit(_all_sources_impl)
_all_sources_parallel = njit(parallel=True)(_all_sources_impl)


@njit(cache=True)
def _bfs_levels(indptr, indices, source):
    n = indptr.shape[0] - 1
    dist = np.full(n, -1, np.int64)
    queue = np.empty(n, np.int64)
    head = 0
    tail = 1
    queue[0] = source
    dist[source] = 0
    while head < tail:
        v = queue[head]
        head += 1
        for p in range(indptr[v], indptr[v + 1]):
            w = indices[p]
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue[tail] = w
                tail += 1
    return dist


@njit(cache=True)
def _ball_sizes(indptr, indices, radius):
    n = indptr.shape[0] - 1
    sizes = np.empty(n, np.int64)
    seen = np.zeros(n, np.int64)
    dist = np.empty(n, np.int64)
    queue = np.empty(n, np.int64)
    for s in range(n):
        epoch = s + 1
        head = 0
        tail = 1
        queue[0] = s
        seen[s] = epoch
        dist[s] = 0
        while head < tail:
            v = queue[head]
            head += 1
            if dist[v] == radius:
                continue
            for p in range(indptr[v], indptr[v + 1]):
                w = indices[p]
                if seen[w] != epoch:
                    seen[w] = epoch
                    dist[w] = dist[v] + 1
                    queue[tail] = w
                    tail += 1
        sizes[s] = tail
    return sizes


def resolve_workers(workers=None) -> int:
    """Number of BFS threads: explicit value, else config bfs.workers, 0 = physical cores."""
    if workers is None:
        workers = int(active_config().get_value("bfs.workers", 0) or 0)
    if workers <= 0:
        workers = psutil.cpu_count(logical=False) or psutil.cpu_count() or 1
    return max(1, min(int(workers), numba.config.NUMBA_NUM_THREADS))


def bfs_levels(indptr: np.ndarray, indices: np.ndarray, source: int) -> np.ndarray:
    """Distances from source; -1 marks unreached vertices."""
    return _bfs_levels(indptr, indices, source)


def ball_sizes(indptr: np.ndarray, indices: np.ndarray, radius: int) -> np.ndarray:
    """|N_{<=radius}(v)| for every v, the vertex itself included."""
    return _ball_sizes(indptr, indices, radius)


def all_source_sweeps(indptr: np.ndarray, indices: np.ndarray, workers=None):
    """
    One BFS per source vertex.

    Returns three int64 arrays indexed by source: total distance to the
    reached vertices, eccentricity within the reached part, and the number
    of vertices reached (n for every source iff the graph is connected).
    """
    n = indptr.shape[0] - 1
    workers = resolve_workers(workers)
    min_order = int(active_config().get_value("bfs.parallel_min_order", 2048))
    if workers == 1 or n < min_order:
        return _all_sources_serial(indptr, indices, 1)
    numba.set_num_threads(workers)
    n_chunks = min(n, workers * 8)
    debug(f"all-source BFS on n={n} with {workers} threads, {n_chunks} chunks")
    return _all_sources_parallel(indptr, indices, n_chunks)
