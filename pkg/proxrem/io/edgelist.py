# -*- coding: utf-8 -*-
"""Plain edge lists: an `n m` header line, then one `u v` pair per line."""

import os
from typing import List, Tuple

from proxrem.graph.core import Graph, from_edge_list
from proxrem.util.errors import GraphError

EDGELIST_SUFFIXES = (".edges", ".el", ".txt")


def parse_edge_list(text: str, source: str = "<text>") -> Graph:
    rows: List[Tuple[int, List[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise GraphError(f"{source}: empty edge list, expected an 'n m' header")
    lineno, head = rows[0]
    try:
        n, m = (int(x) for x in head)
    except ValueError:
        raise GraphError(f"{source}:{lineno}: header must be 'n m', got {' '.join(head)!r}") from None
    edges = []
    for lineno, parts in rows[1:]:
        if len(parts) != 2:
            raise GraphError(f"{source}:{lineno}: expected 'u v', got {' '.join(parts)!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"{source}:{lineno}: vertex ids must be integers") from None
    if len(edges) != m:
        raise GraphError(f"{source}: header announces {m} edges, found {len(edges)}", (m, len(edges)))
    return from_edge_list(n, edges)


def read_edge_list(path: str) -> Graph:
    if not os.path.isfile(path):
        raise GraphError(f"edge list file not found: {path}", path)
    with open(path, "r", encoding="utf-8") as f:
        return parse_edge_list(f.read(), path)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.order} {g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def write_edge_list(path: str, g: Graph):
    dirname = os.path.dirname(path)
    if dirname:
        os.makedirs(dirname, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_edge_list(g))
