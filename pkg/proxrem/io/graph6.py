# -*- coding: utf-8 -*-
"""graph6 lines and files.

Decoding goes through networkx after the line has been checked here:
characters in [63, 126], a one- or four-byte size prefix, the exact
number of data bytes, and zero padding bits.
"""

import os
from typing import Iterable, Iterator, Tuple, Union

import networkx as nx

from proxrem.graph.core import Graph, from_edge_list
from proxrem.util.errors import Graph6Error

HEADER = b">>graph6<<"
MAX_ORDER = 258047


def _as_bytes(line: Union[bytes, str]) -> bytes:
    if isinstance(line, str):
        try:
            line = line.encode("ascii")
        except UnicodeEncodeError:
            raise Graph6Error(f"graph6 line is not ASCII: {line!r}") from None
    line = line.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    return line


def _decode_order(data: bytes) -> Tuple[int, int]:
    """(n, length of the size prefix)."""
    if not data:
        raise Graph6Error("empty graph6 line")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        raise Graph6Error(f"graph6 orders above {MAX_ORDER} are not supported")
    if len(data) < 4:
        raise Graph6Error(f"truncated graph6 size field: {data!r}")
    n = 0
    for c in data[1:4]:
        n = (n << 6) | (c - 63)
    return n, 4


def validate_graph6(line: Union[bytes, str]) -> bytes:
    """Return the bare graph6 payload, raising Graph6Error if malformed."""
    data = _as_bytes(line)
    bad = next((i for i, c in enumerate(data) if not 63 <= c <= 126), None)
    if bad is not None:
        raise Graph6Error(f"byte {data[bad]} at position {bad} is outside [63, 126]")
    n, head = _decode_order(data)
    bits = n * (n - 1) // 2
    need = (bits + 5) // 6
    got = len(data) - head
    if got != need:
        raise Graph6Error(f"graph6 of order {n} needs {need} data bytes, got {got}")
    pad = need * 6 - bits
    if pad and (data[-1] - 63) & ((1 << pad) - 1):
        raise Graph6Error(f"graph6 padding bits are not zero in {data!r}")
    return data


def parse_graph6(line: Union[bytes, str]) -> Graph:
    data = validate_graph6(line)
    try:
        g = nx.from_graph6_bytes(data)
    except (nx.NetworkXError, ValueError) as e:
        raise Graph6Error(f"cannot decode graph6 {data!r}: {e}") from e
    n = g.number_of_nodes()
    if n < 1:
        raise Graph6Error("graph6 encodes an empty graph")
    return from_edge_list(n, g.edges())


def emit_graph6(g: Graph) -> bytes:
    """graph6 of g under its current labeling, no header and no newline."""
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).rstrip(b"\n")


def graph6_str(g: Graph) -> str:
    return emit_graph6(g).decode("ascii")


def read_graph6_file(path: str) -> Iterator[Graph]:
    """One graph per line; blank lines and lines starting with '#' are skipped."""
    if not os.path.isfile(path):
        raise Graph6Error(f"graph6 file not found: {path}")
    with open(path, "rb") as f:
        for lineno, raw in enumerate(f, 1):
            line = raw.strip()
            if not line or line.startswith(b"#"):
                continue
            try:
                yield parse_graph6(line)
            except Graph6Error as e:
                raise Graph6Error(f"{path}:{lineno}: {e}") from e


def write_graph6_file(path: str, graphs: Iterable[Graph], header: bool = False) -> int:
    count = 0
    dirname = os.path.dirname(path)
    if dirname:
        os.makedirs(dirname, exist_ok=True)
    with open(path, "wb") as f:
        if header:
            f.write(HEADER)
        for g in graphs:
            f.write(emit_graph6(g) + b"\n")
            count += 1
    return count
