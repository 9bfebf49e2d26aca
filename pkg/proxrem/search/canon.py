# -*- coding: utf-8 -*-
"""Canonical forms of small graphs by individualization and refinement.

Graphs are given as adjacency bitmasks (bit j of masks[i] set iff ij is an
edge). The canonical key is the adjacency bit-string in graph6 pair order
(0,1),(0,2),(1,2),(0,3),... read as an integer, minimized over the leaves
of the refinement search tree. Interchangeable twins are explored once.
"""

from functools import lru_cache
from typing import List, Sequence, Tuple

from proxrem.graph.core import Graph, from_edge_list

Masks = Tuple[int, ...]
Partition = List[List[int]]


def graph_to_masks(g: Graph) -> Masks:
    masks = [0] * g.order
    for u, v in g.edges():
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return tuple(masks)


def masks_to_graph(masks: Sequence[int]) -> Graph:
    n = len(masks)
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n) if masks[i] >> j & 1])


def _refine(masks: Masks, cells: Partition) -> Partition:
    """Coarsest equitable refinement; subcells ordered by neighbor count."""
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        for s in range(len(cells)):
            splitter = 0
            for v in cells[s]:
                splitter |= 1 << v
            out = []
            for c in cells:
                if len(c) == 1:
                    out.append(c)
                    continue
                groups = {}
                for v in c:
                    groups.setdefault(bin(masks[v] & splitter).count("1"), []).append(v)
                if len(groups) == 1:
                    out.append(c)
                else:
                    out.extend(groups[k] for k in sorted(groups))
                    changed = True
            cells = out
            if changed:
                break
    return cells


def _key(masks: Masks, order: Sequence[int]) -> int:
    n = len(order)
    key = 0
    for j in range(1, n):
        mj = masks[order[j]]
        for i in range(j):
            key = (key << 1) | (mj >> order[i] & 1)
    return key


def _twins(masks: Masks, u: int, v: int) -> bool:
    return (masks[u] & ~(1 << v)) == (masks[v] & ~(1 << u))


def _search(masks: Masks, cells: Partition) -> Tuple[int, Tuple[int, ...]]:
    cells = _refine(masks, cells)
    target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
    if target is None:
        order = tuple(c[0] for c in cells)
        return _key(masks, order), order
    best = None
    tried: List[int] = []
    for v in cells[target]:
        if any(_twins(masks, v, t) for t in tried):
            continue
        tried.append(v)
        rest = [w for w in cells[target] if w != v]
        branch = cells[:target] + [[v], rest] + cells[target + 1:]
        cand = _search(masks, branch)
        if best is None or cand[0] < best[0]:
            best = cand
    return best


@lru_cache(maxsize=1 << 16)
def canonical_labeling(masks: Masks) -> Tuple[int, Tuple[int, ...]]:
    """(key, order) where order[i] is the vertex placed at position i."""
    n = len(masks)
    if n == 0:
        return 0, ()
    return _search(masks, [list(range(n))])


def canonical_key(masks: Masks) -> Tuple[int, int]:
    """Isomorphism-invariant key (order, bit-string)."""
    return len(masks), canonical_labeling(tuple(masks))[0]


def canonical_masks(masks: Masks) -> Masks:
    """The graph relabelled into its canonical order."""
    _, order = canonical_labeling(tuple(masks))
    pos = {v: i for i, v in enumerate(order)}
    out = [0] * len(order)
    for i, v in enumerate(order):
        m = masks[v]
        for w in range(len(order)):
            if m >> w & 1:
                out[i] |= 1 << pos[w]
    return tuple(out)


def canonical_form(g: Graph) -> Graph:
    return masks_to_graph(canonical_masks(graph_to_masks(g)))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.edge_count != h.edge_count:
        return False
    return canonical_key(graph_to_masks(g)) == canonical_key(graph_to_masks(h))
