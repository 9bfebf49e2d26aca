# -*- coding: utf-8 -*-
"""Triangle and 4-cycle detection (not necessarily induced) and the C4-free ball lemma."""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from proxrem.graph.core import Graph, VertexId, is_connected, min_degree
from proxrem.graph.kernels import ball_sizes, bfs_levels
from proxrem.graph.metrics import InvariantReport
from proxrem.util.errors import DisconnectedGraphError, ForbiddenSubgraphError, GraphError
from proxrem.util.log import error


class WitnessKind(str, Enum):
    TRIANGLE = "triangle"
    C4 = "c4"


@dataclass(frozen=True)
class ForbiddenWitness:
    """A cycle in the host graph; consecutive vertices (cyclically) are adjacent."""

    kind: WitnessKind
    vertices: Tuple[int, ...]

    def validate(self, g: Graph) -> bool:
        size = 3 if self.kind == WitnessKind.TRIANGLE else 4
        vs = self.vertices
        if len(vs) != size or len(set(vs)) != size:
            return False
        return all(g.has_edge(vs[i], vs[(i + 1) % size]) for i in range(size))

    def __str__(self):
        return f"{self.kind.value}{self.vertices}"


def find_triangle(g: Graph) -> Optional[ForbiddenWitness]:
    """Smallest (a, b, c) with a < b < c pairwise adjacent, or None."""
    adj = g.adjacency
    sets = g.neighbor_sets
    for a in range(g.order):
        for b in adj[a]:
            if b <= a:
                continue
            common = [c for c in adj[b] if c > b and c in sets[a]]
            if common:
                return ForbiddenWitness(WitnessKind.TRIANGLE, (a, b, common[0]))
    return None


def find_c4(g: Graph) -> Optional[ForbiddenWitness]:
    """A 4-cycle (a, b1, c, b2) where a is its smallest vertex, or None.

    Scans a ascending and counts, for every c > a, the neighbors of a that
    reach c; the second hit closes the cycle.
    """
    adj = g.adjacency
    for a in range(g.order):
        via = {}
        for b in adj[a]:
            for c in adj[b]:
                if c <= a:
                    continue
                first = via.get(c)
                if first is not None:
                    return ForbiddenWitness(WitnessKind.C4, (a, first, c, b))
                via[c] = b
    return None


def is_triangle_free(g: Graph) -> bool:
    return find_triangle(g) is None


def is_c4_free(g: Graph) -> bool:
    return find_c4(g) is None


def epp_ball_bound(delta: int) -> int:
    """Lower bound on |N_{<=2}(v)| in a C4-free graph of minimum degree delta."""
    return delta * delta - 2 * (delta // 2) + 1


def ball2_size(g: Graph, v: VertexId) -> int:
    """|N_{<=2}(v)|, v included."""
    v = g.check_vertex(v)
    dist = bfs_levels(g.indptr, g.indices, v)
    return int(((dist >= 0) & (dist <= 2)).sum())


@dataclass(frozen=True)
class BallLemmaReport:
    min_degree: int
    bound: int
    min_ball: int
    min_vertex: int
    ball_sizes: Tuple[int, ...]

    @property
    def slack(self) -> int:
        return self.min_ball - self.bound

    @property
    def holds(self) -> bool:
        return self.slack >= 0


def check_epp_lemma(g: Graph) -> BallLemmaReport:
    """Compare every |N_{<=2}(v)| against the C4-free lower bound."""
    if not is_connected(g):
        dist = bfs_levels(g.indptr, g.indices, 0)
        unreached = int(np.flatnonzero(dist < 0)[0])
        raise DisconnectedGraphError(f"ball lemma needs a connected graph, vertex {unreached} "
                                     f"is unreachable from 0", unreached)
    witness = find_c4(g)
    if witness is not None:
        raise ForbiddenSubgraphError(f"ball lemma needs a C4-free graph, found {witness}", witness)
    delta = min_degree(g)
    sizes = ball_sizes(g.indptr, g.indices, 2)
    v = int(np.argmin(sizes))
    rep = BallLemmaReport(
        min_degree=delta,
        bound=epp_ball_bound(delta),
        min_ball=int(sizes[v]),
        min_vertex=v,
        ball_sizes=tuple(int(s) for s in sizes),
    )
    if not rep.holds:
        error(f"ball lemma violated at vertex {v}: |N<=2| = {rep.min_ball} < {rep.bound}")
    return rep


def annotate_class_flags(g: Graph, report: InvariantReport) -> InvariantReport:
    """Fill triangle_free, c4_free and (for C4-free graphs) min_ball2_size."""
    if report.order != g.order:
        raise GraphError(f"report is for order {report.order}, graph has order {g.order}",
                         (report.order, g.order))
    tf = is_triangle_free(g)
    c4f = is_c4_free(g)
    ball = check_epp_lemma(g).min_ball if c4f else None
    return report.with_flags(triangle_free=tf, c4_free=c4f, min_ball2_size=ball)
