# -*- coding: utf-8 -*-
"""Exact distance invariants: total distance, proximity, remoteness, eccentricity."""

import dataclasses
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Tuple, Union

import numpy as np

from proxrem.graph.core import Graph, VertexId
from proxrem.graph.kernels import all_source_sweeps, bfs_levels
from proxrem.util.errors import DisconnectedGraphError, GraphError


def _raise_unreached(g: Graph, source: int, dist: np.ndarray):
    unreached = int(np.flatnonzero(dist < 0)[0])
    raise DisconnectedGraphError(
        f"graph of order {g.order} is disconnected: vertex {unreached} "
        f"is unreachable from vertex {source}", unreached)


def bfs_distances(g: Graph, v: VertexId) -> np.ndarray:
    """d(v, w) for every w, as an int64 vector."""
    v = g.check_vertex(v)
    dist = bfs_levels(g.indptr, g.indices, v)
    if (dist < 0).any():
        _raise_unreached(g, v, dist)
    return dist


def total_distance(g: Graph, v: VertexId) -> int:
    return int(bfs_distances(g, v).sum())


def partial_total_distance(g: Graph, v: VertexId, X: Iterable[VertexId]) -> int:
    """Sum of d(v, x) over x in X."""
    members = [g.check_vertex(x, "member of X") for x in X]
    if not members:
        return 0
    dist = bfs_distances(g, v)
    return int(dist[np.asarray(sorted(set(members)), dtype=np.int64)].sum())


class RingMode(str, Enum):
    EXACT = "exact"
    AT_MOST = "at_most"
    AT_LEAST = "at_least"


def neighborhood_ring(g: Graph, v: VertexId, i: int,
                      mode: Union[RingMode, str] = RingMode.EXACT) -> frozenset:
    """Vertices at distance exactly / at most / at least i from v."""
    mode = RingMode(mode)
    if i < 0:
        raise GraphError(f"ring radius must be non-negative, got {i}", i)
    dist = bfs_distances(g, v)
    if mode == RingMode.EXACT:
        mask = dist == i
    elif mode == RingMode.AT_MOST:
        mask = dist <= i
    else:
        mask = dist >= i
    return frozenset(int(w) for w in np.flatnonzero(mask))


def all_pairs_distances(g: Graph) -> np.ndarray:
    """Stacked bfs_distances rows, an n x n matrix."""
    return np.vstack([bfs_distances(g, v) for v in range(g.order)])


@dataclass(frozen=True)
class InvariantReport:
    """Exact distance invariants of one connected graph.

    Class flags (triangle_free, c4_free, min_ball2_size) are None until
    the forbidden-subgraph module fills them in.
    """

    order: int
    edge_count: int
    min_degree: int
    total_distance: Tuple[int, ...]
    eccentricity: Tuple[int, ...]
    proximity: Fraction
    remoteness: Fraction
    average_distance: Fraction
    diameter: int
    radius: int
    median_vertices: Tuple[int, ...]
    margin_vertices: Tuple[int, ...]
    center_vertices: Tuple[int, ...]
    triangle_free: Optional[bool] = None
    c4_free: Optional[bool] = None
    min_ball2_size: Optional[int] = None

    @property
    def median(self) -> int:
        """Lowest-index median vertex."""
        return self.median_vertices[0]

    @property
    def margin(self) -> int:
        return self.margin_vertices[0]

    def with_flags(self, **flags) -> "InvariantReport":
        return dataclasses.replace(self, **flags)


def invariant_report(g: Graph, workers: Optional[int] = None) -> InvariantReport:
    """All invariants from one BFS per vertex; raises on disconnected graphs or order 1."""
    n = g.order
    if n < 2:
        raise GraphError("average distance is undefined for a graph of order 1", n)
    totals, eccs, reached = all_source_sweeps(g.indptr, g.indices, workers)
    short = np.flatnonzero(reached < n)
    if short.shape[0]:
        s = int(short[0])
        _raise_unreached(g, s, bfs_levels(g.indptr, g.indices, s))
    t_min, t_max = int(totals.min()), int(totals.max())
    e_min, e_max = int(eccs.min()), int(eccs.max())

    def where(arr, value):
        return tuple(int(x) for x in np.flatnonzero(arr == value))

    return InvariantReport(
        order=n,
        edge_count=g.edge_count,
        min_degree=int(g.degrees.min()),
        total_distance=tuple(int(x) for x in totals),
        eccentricity=tuple(int(x) for x in eccs),
        proximity=Fraction(t_min, n - 1),
        remoteness=Fraction(t_max, n - 1),
        average_distance=Fraction(int(totals.sum()), n * (n - 1)),
        diameter=e_max,
        radius=e_min,
        median_vertices=where(totals, t_min),
        margin_vertices=where(totals, t_max),
        center_vertices=where(eccs, e_min),
    )
