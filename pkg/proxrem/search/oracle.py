# -*- coding: utf-8 -*-
"""Brute-force all-pairs distances, an independent check on the BFS kernels."""

import numpy as np

from proxrem.graph.core import Graph
from proxrem.util.config import active_config
from proxrem.util.errors import DisconnectedGraphError, GraphError

DEFAULT_MAX_ORDER = 256


def oracle_apsp(g: Graph) -> np.ndarray:
    """Floyd-Warshall over a dense n x n matrix; int64 distances."""
    n = g.order
    cap = int(active_config().get_value("oracle.max_order", DEFAULT_MAX_ORDER))
    if n > cap:
        raise GraphError(f"oracle is capped at order {cap}, got {n}", n)
    dist = np.full((n, n), np.inf)
    np.fill_diagonal(dist, 0.0)
    edges = g.edge_array()
    if edges.shape[0]:
        dist[edges[:, 0], edges[:, 1]] = 1.0
        dist[edges[:, 1], edges[:, 0]] = 1.0
    for k in range(n):
        np.minimum(dist, dist[:, k:k + 1] + dist[k:k + 1, :], out=dist)
    bad = np.argwhere(np.isinf(dist))
    if bad.shape[0]:
        u, v = (int(x) for x in bad[0])
        raise DisconnectedGraphError(f"vertex {v} is unreachable from vertex {u}", v)
    return dist.astype(np.int64)
