#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Test cases for graph6 and edge-list I/O."""

import os
current_dir = os.path.dirname(os.path.abspath(__file__))
import sys
sys.path.append(os.path.abspath(os.path.join(current_dir, "..")))

import pytest

from proxrem.graph import basic_generator, from_edge_list, petersen, sequential_sum
from proxrem.io import (emit_graph6, format_edge_list, graph6_str, parse_edge_list, parse_graph6,
                        read_edge_list, read_graph6_file, validate_graph6, write_edge_list,
                        write_graph6_file)
from proxrem.util.errors import Graph6Error, GraphError


def test_parse_known_lines():
    assert parse_graph6("A_") == basic_generator("path", 2)
    assert parse_graph6("Bw") == basic_generator("complete", 3)
    p3 = parse_graph6(b"Bg\n")
    assert list(p3.edges()) == [(0, 1), (1, 2)]
    assert parse_graph6(">>graph6<<Bw") == basic_generator("complete", 3)
    assert parse_graph6("A?").edge_count == 0


def test_emit_known_lines():
    assert emit_graph6(basic_generator("path", 2)) == b"A_"
    assert graph6_str(basic_generator("complete", 3)) == "Bw"
    assert graph6_str(from_edge_list(3, [(0, 1), (1, 2)])) == "Bg"


def test_graph6_round_trip_on_families():
    for g in [petersen(), basic_generator("cycle", 11), sequential_sum([1, 4, 3, 1, 1, 3, 4, 1]).graph]:
        assert parse_graph6(graph6_str(g)) == g


def test_graph6_errors():
    for bad in ["", "?", "A", "Aa", "A`", "A ", "B_?", "@?", "~~??????", "Cw?"]:
        with pytest.raises(Graph6Error):
            parse_graph6(bad)
    with pytest.raises(Graph6Error):
        validate_graph6("Bwé")
    assert validate_graph6(" Bw \n") == b"Bw"
    k1 = parse_graph6("@")
    assert k1.order == 1 and k1.edge_count == 0


def test_graph6_files(tmp_path):
    path = str(tmp_path / "sub" / "graphs.g6")
    graphs = [basic_generator("path", 2), basic_generator("complete", 3), petersen()]
    assert write_graph6_file(path, graphs, header=True) == 3
    assert list(read_graph6_file(path)) == graphs
    commented = tmp_path / "c.g6"
    commented.write_text("# comment\n\nA_\nBg\n")
    assert [g.order for g in read_graph6_file(str(commented))] == [2, 3]
    broken = tmp_path / "broken.g6"
    broken.write_text("A_\nB?x\n")
    with pytest.raises(Graph6Error) as e:
        list(read_graph6_file(str(broken)))
    assert "broken.g6:2" in str(e.value)
    with pytest.raises(Graph6Error):
        list(read_graph6_file(str(tmp_path / "missing.g6")))


def test_edge_list(tmp_path):
    c5 = basic_generator("cycle", 5)
    text = format_edge_list(c5)
    assert text.splitlines()[0] == "5 5"
    assert parse_edge_list(text) == c5
    assert parse_edge_list("3 2  # P3\n0 1\n\n1 2\n") == basic_generator("path", 3)
    path = str(tmp_path / "out" / "c5.edges")
    write_edge_list(path, c5)
    assert read_edge_list(path) == c5
    for bad in ["", "3\n0 1", "3 2\n0 1", "3 1\n0 1 2", "3 1\n0 x", "2 1\n0 2"]:
        with pytest.raises(GraphError):
            parse_edge_list(bad)
    with pytest.raises(GraphError):
        read_edge_list(str(tmp_path / "nope.edges"))
