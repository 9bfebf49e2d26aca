# -*- coding: utf-8 -*-
"""Isomorph-free enumeration of small connected graphs.

Every connected graph on n vertices has a non-cut vertex, so the connected
graphs of order n arise from those of order n-1 by adding one vertex joined
to a nonempty neighborhood. Triangle- and C4-freeness are hereditary, so a
filtered level only ever extends filtered graphs.
"""

from enum import Enum
from functools import lru_cache
from typing import Dict, Iterator, Tuple, Union

from proxrem.graph.core import Graph
from proxrem.search.canon import Masks, canonical_key, canonical_masks, masks_to_graph
from proxrem.util.config import active_config
from proxrem.util.errors import CorpusError
from proxrem.util.log import info

MIN_ORDER = 2
BUILTIN_MAX_ORDER = 9


class GraphFilter(str, Enum):
    ALL = "all"
    TRIANGLE_FREE = "triangle_free"
    C4_FREE = "c4_free"
    BOTH = "both"

    @classmethod
    def parse(cls, value: Union["GraphFilter", str, None]) -> "GraphFilter":
        if value is None:
            return cls.ALL
        if isinstance(value, cls):
            return value
        aliases = {"tf": cls.TRIANGLE_FREE, "c4": cls.C4_FREE}
        try:
            return aliases.get(value) or cls(value)
        except ValueError:
            raise CorpusError(f"unknown filter '{value}', expected one of "
                              f"all, tf, c4, both") from None

    @property
    def triangle_free(self) -> bool:
        return self in (GraphFilter.TRIANGLE_FREE, GraphFilter.BOTH)

    @property
    def c4_free(self) -> bool:
        return self in (GraphFilter.C4_FREE, GraphFilter.BOTH)


def max_order() -> int:
    return min(BUILTIN_MAX_ORDER, int(active_config().get_value("enumeration.max_order", BUILTIN_MAX_ORDER)))


def _admissible(masks: Masks, nbrs: int, flt: GraphFilter) -> bool:
    """Would joining a new vertex to `nbrs` keep the filtered class?"""
    members = [v for v in range(len(masks)) if nbrs >> v & 1]
    if flt.triangle_free and any(masks[v] & nbrs for v in members):
        return False
    if flt.c4_free:
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                if masks[a] & masks[b]:
                    return False
    return True


def _extend(masks: Masks, nbrs: int) -> Masks:
    n = len(masks)
    out = [m | ((nbrs >> v & 1) << n) for v, m in enumerate(masks)]
    out.append(nbrs)
    return tuple(out)


@lru_cache(maxsize=None)
def _level(n: int, flt: GraphFilter) -> Tuple[Masks, ...]:
    """Canonical representatives of order n, sorted by canonical key."""
    if n == 1:
        return ((0,),)
    found: Dict[Tuple[int, int], Masks] = {}
    for masks in _level(n - 1, flt):
        for nbrs in range(1, 1 << (n - 1)):
            if not _admissible(masks, nbrs, flt):
                continue
            grown = _extend(masks, nbrs)
            key = canonical_key(grown)
            if key not in found:
                found[key] = canonical_masks(grown)
    if n >= 7:
        info(f"enumerated {len(found)} connected graphs of order {n} ({flt.value})")
    return tuple(found[k] for k in sorted(found))


def enumerate_connected(n: int, flt: Union[GraphFilter, str, None] = GraphFilter.ALL) -> Iterator[Graph]:
    """One graph per isomorphism class of connected graphs of order n passing the filter."""
    flt = GraphFilter.parse(flt)
    top = max_order()
    if not MIN_ORDER <= n <= top:
        raise CorpusError(f"built-in enumeration covers orders {MIN_ORDER}..{top}, got {n}; "
                          f"feed larger corpora as graph6 files")
    for masks in _level(n, flt):
        yield masks_to_graph(masks)


def count_connected(n: int, flt: Union[GraphFilter, str, None] = GraphFilter.ALL) -> int:
    return sum(1 for _ in enumerate_connected(n, flt))
