# -*- coding: utf-8 -*-
"""Immutable simple graphs in CSR form, basic builders and composition operators."""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, List, NamedTuple, Sequence, Tuple, Union

import numpy as np

from proxrem.graph.kernels import bfs_levels
from proxrem.util.errors import GraphError

VertexId = int


class Graph:
    """Undirected simple graph with vertices 0..n-1.

    Adjacency is stored as read-only CSR arrays: the neighbors of v are
    ``indices[indptr[v]:indptr[v+1]]``, sorted ascending, symmetric, without
    loops or repeats. Instances are never mutated; operators return new graphs.
    """

    def __init__(self, order: int, indptr: np.ndarray, indices: np.ndarray):
        self._order = int(order)
        self._indptr = np.ascontiguousarray(indptr, dtype=np.int64)
        self._indices = np.ascontiguousarray(indices, dtype=np.int64)
        self._indptr.setflags(write=False)
        self._indices.setflags(write=False)

    @property
    def order(self) -> int:
        return self._order

    @property
    def edge_count(self) -> int:
        return int(self._indices.shape[0]) // 2

    @property
    def indptr(self) -> np.ndarray:
        return self._indptr

    @property
    def indices(self) -> np.ndarray:
        return self._indices

    def check_vertex(self, v: VertexId, what: str = "vertex") -> int:
        if not isinstance(v, (int, np.integer)) or not 0 <= v < self._order:
            raise GraphError(f"{what} {v} out of range [0, {self._order})", v)
        return int(v)

    def neighbors(self, v: VertexId) -> np.ndarray:
        v = self.check_vertex(v)
        return self._indices[self._indptr[v]:self._indptr[v + 1]]

    def degree(self, v: VertexId) -> int:
        v = self.check_vertex(v)
        return int(self._indptr[v + 1] - self._indptr[v])

    @cached_property
    def degrees(self) -> np.ndarray:
        d = np.diff(self._indptr)
        d.setflags(write=False)
        return d

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        """Sorted neighbor tuples, one per vertex."""
        ip, ix = self._indptr, self._indices
        return tuple(tuple(int(w) for w in ix[ip[v]:ip[v + 1]]) for v in range(self._order))

    @cached_property
    def neighbor_sets(self) -> Tuple[frozenset, ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        nb = self.neighbors(u)
        i = int(np.searchsorted(nb, v))
        return i < nb.shape[0] and int(nb[i]) == v

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges (u, v) with u < v in ascending order."""
        for u, nb in enumerate(self.adjacency):
            for v in nb:
                if v > u:
                    yield (u, v)

    def edge_array(self) -> np.ndarray:
        """Edges as an (m, 2) array with u < v per row."""
        src = np.repeat(np.arange(self._order, dtype=np.int64), self.degrees)
        mask = src < self._indices
        return np.stack([src[mask], self._indices[mask]], axis=1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self._order == other._order
                and np.array_equal(self._indptr, other._indptr)
                and np.array_equal(self._indices, other._indices))

    def __hash__(self) -> int:
        return hash((self._order, self._indices.tobytes(), self._indptr.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(order={self._order}, edges={self.edge_count})"


def _csr_from_pairs(n: int, us: np.ndarray, vs: np.ndarray) -> Graph:
    # us < vs elementwise, already range-checked
    if us.shape[0]:
        keys = np.unique(us * n + vs)
        us, vs = keys // n, keys % n
    src = np.concatenate([us, vs])
    dst = np.concatenate([vs, us])
    perm = np.lexsort((dst, src))
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return Graph(n, indptr, dst[perm])


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on n vertices from unordered pairs; duplicates are dropped."""
    if n < 1:
        raise GraphError(f"graph order must be at least 1, got {n}", n)
    arr = np.asarray([tuple(e) for e in edges], dtype=np.int64).reshape(-1, 2)
    bad = np.nonzero((arr < 0).any(axis=1) | (arr >= n).any(axis=1))[0]
    if bad.shape[0]:
        pair = tuple(int(x) for x in arr[bad[0]])
        raise GraphError(f"edge {pair} has an endpoint out of range [0, {n})", pair)
    loops = np.nonzero(arr[:, 0] == arr[:, 1])[0]
    if loops.shape[0]:
        pair = tuple(int(x) for x in arr[loops[0]])
        raise GraphError(f"edge {pair} is a self-loop", pair)
    return _csr_from_pairs(n, arr.min(axis=1), arr.max(axis=1))


class BasicKind(str, Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    EDGELESS = "edgeless"


def basic_generator(kind: Union[BasicKind, str], n: int) -> Graph:
    """P_n, C_n, K_n or the edgeless graph on vertices 0..n-1."""
    try:
        kind = BasicKind(kind)
    except ValueError:
        raise GraphError(f"unknown basic graph kind '{kind}', expected one of "
                         f"{[k.value for k in BasicKind]}", kind) from None
    if n < 1:
        raise GraphError(f"graph order must be at least 1, got {n}", n)
    if kind == BasicKind.CYCLE and n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}", n)
    idx = np.arange(n, dtype=np.int64)
    if kind == BasicKind.EDGELESS:
        us = vs = np.empty(0, dtype=np.int64)
    elif kind == BasicKind.PATH:
        us, vs = idx[:-1], idx[1:]
    elif kind == BasicKind.CYCLE:
        us = np.concatenate([idx[:-1], [0]])
        vs = np.concatenate([idx[1:], [n - 1]])
    else:
        us, vs = np.triu_indices(n, k=1)
    return _csr_from_pairs(n, np.asarray(us, np.int64), np.asarray(vs, np.int64))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}: part one is 0..a-1, part two a..a+b-1."""
    if a < 1 or b < 1:
        raise GraphError(f"both parts of K_(a,b) need a vertex, got a={a}, b={b}", (a, b))
    us, vs = np.meshgrid(np.arange(a), np.arange(a, a + b), indexing="ij")
    return _csr_from_pairs(a + b, us.ravel().astype(np.int64), vs.ravel().astype(np.int64))


def petersen() -> Graph:
    """Outer 5-cycle 0..4, spokes i - i+5, inner pentagram on 5..9."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, edges)


@dataclass(frozen=True)
class LayerPlan:
    """Sizes of the edgeless layers of a sequential sum, in order."""

    layers: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple(int(s) for s in self.layers))
        if not self.layers:
            raise GraphError("layer plan is empty", self.layers)
        for i, s in enumerate(self.layers):
            if s < 1:
                raise GraphError(f"layer {i} has size {s}, sizes must be positive", (i, s))

    @property
    def order(self) -> int:
        return sum(self.layers)


class LayeredGraph(NamedTuple):
    graph: Graph
    layer_of: Tuple[int, ...]


def sequential_sum(plan: Union[LayerPlan, Sequence[int]]) -> LayeredGraph:
    """Join every vertex of layer i to every vertex of layer i+1, numbering layer by layer."""
    if not isinstance(plan, LayerPlan):
        plan = LayerPlan(tuple(plan))
    sizes = np.asarray(plan.layers, dtype=np.int64)
    starts = np.concatenate([[0], np.cumsum(sizes)])
    us_parts: List[np.ndarray] = []
    vs_parts: List[np.ndarray] = []
    for i in range(len(sizes) - 1):
        a = np.arange(starts[i], starts[i + 1])
        b = np.arange(starts[i + 1], starts[i + 2])
        ua, vb = np.meshgrid(a, b, indexing="ij")
        us_parts.append(ua.ravel())
        vs_parts.append(vb.ravel())
    empty = np.empty(0, dtype=np.int64)
    us = np.concatenate(us_parts).astype(np.int64) if us_parts else empty
    vs = np.concatenate(vs_parts).astype(np.int64) if vs_parts else empty
    layer_of = np.repeat(np.arange(len(sizes)), sizes)
    return LayeredGraph(_csr_from_pairs(plan.order, us, vs), tuple(int(x) for x in layer_of))


def add_twins(g: Graph, w: VertexId, t: int) -> Graph:
    """Append t new vertices, each adjacent to exactly the neighbors of w."""
    w = g.check_vertex(w)
    if t < 0:
        raise GraphError(f"twin count must be non-negative, got {t}", t)
    nb = g.neighbors(w)
    if nb.shape[0] == 0:
        raise GraphError(f"vertex {w} is isolated, its twins would be isolated too", w)
    if t == 0:
        return g
    n = g.order
    old = g.edge_array()
    new_vertices = np.repeat(np.arange(n, n + t, dtype=np.int64), nb.shape[0])
    new_nbrs = np.tile(nb, t)
    us = np.concatenate([old[:, 0], new_nbrs])
    vs = np.concatenate([old[:, 1], new_vertices])
    return _csr_from_pairs(n + t, us, vs)


Link = Tuple[int, int, int, int]


class LinkedUnion(NamedTuple):
    graph: Graph
    offsets: Tuple[int, ...]


def disjoint_union_with_links(parts: Sequence[Graph], links: Iterable[Link] = ()) -> LinkedUnion:
    """Disjoint union, part i shifted by offsets[i], plus bridges (part, vertex, part, vertex)."""
    if not parts:
        raise GraphError("disjoint union needs at least one part", parts)
    offsets = [0]
    for p in parts:
        offsets.append(offsets[-1] + p.order)
    chunks = [p.edge_array() + off for p, off in zip(parts, offsets)]
    bridges = []
    for link in links:
        pi, vi, pj, vj = link
        for part, vertex in ((pi, vi), (pj, vj)):
            if not 0 <= part < len(parts):
                raise GraphError(f"link {tuple(link)} names part {part}, only {len(parts)} parts", tuple(link))
            parts[part].check_vertex(vertex, f"link {tuple(link)} vertex")
        bridges.append((offsets[pi] + vi, offsets[pj] + vj))
    n = offsets[-1]
    if bridges:
        chunks.append(np.asarray(bridges, dtype=np.int64))
    allp = np.concatenate(chunks) if chunks else np.empty((0, 2), np.int64)
    if (allp[:, 0] == allp[:, 1]).any():
        pair = tuple(int(x) for x in allp[allp[:, 0] == allp[:, 1]][0])
        raise GraphError(f"link joins vertex {pair[0]} to itself", pair)
    g = _csr_from_pairs(n, allp.min(axis=1), allp.max(axis=1))
    return LinkedUnion(g, tuple(offsets[:-1]))


def is_connected(g: Graph) -> bool:
    """True iff a BFS from vertex 0 reaches every vertex."""
    if g.order == 1:
        return True
    return bool((bfs_levels(g.indptr, g.indices, 0) >= 0).all())


def min_degree(g: Graph) -> int:
    return int(g.degrees.min())
