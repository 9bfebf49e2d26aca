#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Test cases for canonical forms, enumeration, the distance oracle and corpus scans."""

import os
current_dir = os.path.dirname(os.path.abspath(__file__))
import sys
sys.path.append(os.path.abspath(os.path.join(current_dir, "..")))

import itertools
import random
from fractions import Fraction

import numpy as np
import pytest

from proxrem.constructions import build_family
from proxrem.graph import (add_twins, all_pairs_distances, basic_generator, complete_bipartite,
                           from_edge_list, is_c4_free, is_connected, is_triangle_free, petersen,
                           sequential_sum)
from proxrem.io.graph6 import emit_graph6, graph6_str, parse_graph6
from proxrem.search import (BoundTally, GraphFilter, ScanSummary, canonical_form, canonical_key,
                            count_connected, enumerate_connected, graph_to_masks, is_isomorphic,
                            masks_to_graph, oracle_apsp, scan)
from proxrem.search.scan import _init_worker
from proxrem.util.config import active_config, get_config, set_active_config
from proxrem.util.errors import CorpusError, DisconnectedGraphError, GraphError


def relabel(g, perm):
    return from_edge_list(g.order, [(perm[u], perm[v]) for u, v in g.edges()])


def test_masks_round_trip():
    g = petersen()
    assert masks_to_graph(graph_to_masks(g)) == g
    assert graph_to_masks(basic_generator("path", 3)) == (0b010, 0b101, 0b010)


def test_canonical_form_is_invariant():
    rng = random.Random(7)
    for g in [petersen(), basic_generator("path", 7), complete_bipartite(3, 4),
              sequential_sum([1, 3, 2, 1, 1, 2, 3, 1]).graph]:
        c = canonical_form(g)
        for _ in range(5):
            perm = list(range(g.order))
            rng.shuffle(perm)
            h = relabel(g, perm)
            assert canonical_form(h) == c
            assert is_isomorphic(g, h)


def test_is_isomorphic_distinguishes():
    assert not is_isomorphic(basic_generator("path", 4), complete_bipartite(1, 3))
    assert not is_isomorphic(basic_generator("cycle", 6),
                             from_edge_list(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))
    assert not is_isomorphic(basic_generator("path", 4), basic_generator("path", 5))
    c6 = basic_generator("cycle", 6)
    assert canonical_key(graph_to_masks(c6)) != canonical_key(graph_to_masks(complete_bipartite(3, 3)))


@pytest.mark.parametrize("n,count", [(2, 1), (3, 2), (4, 6), (5, 21), (6, 112)])
def test_count_connected(n, count):
    assert count_connected(n) == count


@pytest.mark.slow
@pytest.mark.parametrize("n,count", [(7, 853), (8, 11117)])
def test_count_connected_slow(n, count):
    assert count_connected(n) == count


def test_enumeration_is_isomorph_free():
    graphs = list(enumerate_connected(5))
    assert all(is_connected(g) and g.order == 5 for g in graphs)
    keys = {canonical_key(graph_to_masks(g)) for g in graphs}
    assert len(keys) == len(graphs)
    assert list(enumerate_connected(5)) == graphs


def test_filtered_enumeration():
    tf5 = list(enumerate_connected(5, "tf"))
    assert len(tf5) == 6
    assert all(is_triangle_free(g) for g in tf5)
    assert any(is_isomorphic(g, basic_generator("cycle", 5)) for g in tf5)
    assert any(is_isomorphic(g, basic_generator("path", 5)) for g in tf5)
    assert count_connected(6, GraphFilter.TRIANGLE_FREE) == 19
    c4 = list(enumerate_connected(4, "c4"))
    assert len(c4) == 3
    assert all(is_c4_free(g) for g in c4)
    both = list(enumerate_connected(5, "both"))
    assert all(is_c4_free(g) and is_triangle_free(g) for g in both)
    # trees on 5 vertices plus C5
    assert len(both) == 4


def test_enumeration_errors():
    with pytest.raises(CorpusError):
        list(enumerate_connected(1))
    with pytest.raises(CorpusError):
        list(enumerate_connected(10))
    with pytest.raises(CorpusError):
        GraphFilter.parse("bipartite")
    assert GraphFilter.parse(None) == GraphFilter.ALL
    assert GraphFilter.parse("c4").c4_free and not GraphFilter.parse("c4").triangle_free
    set_active_config(get_config(cfg_override={"enumeration.max_order": 4}))
    try:
        with pytest.raises(CorpusError):
            list(enumerate_connected(5))
    finally:
        set_active_config(None)


@pytest.mark.parametrize("seed", range(5))
def test_oracle_matches_bfs(seed):
    rng = np.random.default_rng(seed)
    n = 25 + 5 * seed
    edges = [(int(rng.integers(0, v)), v) for v in range(1, n)]
    edges += [tuple(int(x) for x in rng.choice(n, size=2, replace=False)) for _ in range(n // 2)]
    g = from_edge_list(n, edges)
    assert np.array_equal(oracle_apsp(g), all_pairs_distances(g))


def test_oracle_on_families():
    g, _ = sequential_sum([1, 3, 2, 1, 1, 2, 3, 1])
    h = add_twins(g, 4, 6)
    assert np.array_equal(oracle_apsp(h), all_pairs_distances(h))
    assert np.array_equal(oracle_apsp(petersen()), all_pairs_distances(petersen()))
    with pytest.raises(DisconnectedGraphError):
        oracle_apsp(from_edge_list(3, [(0, 1)]))
    set_active_config(get_config(cfg_override={"oracle.max_order": 8}))
    try:
        with pytest.raises(GraphError):
            oracle_apsp(petersen())
    finally:
        set_active_config(None)


def test_bound_tally():
    t = BoundTally("X")
    t.record(Fraction(1), "Dhc")
    t.record(Fraction(0), "C~")
    t.record(Fraction(0), "Bw")
    assert t.applicable == 3 and t.violations == 0
    assert t.min_slack == 0 and t.min_slack_witness == "Bw"
    u = BoundTally("X")
    u.record(Fraction(-1, 2), "A_")
    m = t.merge(u)
    assert m.violations == 1
    assert m.min_slack == Fraction(-1, 2) and m.min_slack_witness == "A_"
    assert m.tight == ["Bw", "C~"]


def test_scan_order_five():
    summary = scan(enumerate_connected(5), ["AH-diam-pi", "AH-rho-pi"], workers=1, label="n=5")
    assert summary.ok
    assert summary.scanned == 21 and summary.skipped == 0
    tally = summary.tallies["AH-diam-pi"]
    assert tally.applicable == 21
    assert len(tally.tight) == 1
    assert is_isomorphic(parse_graph6(tally.tight[0]), basic_generator("path", 5))
    d = summary.as_dict()
    assert d["bounds"]["AH-diam-pi"]["min_slack"] == 0
    assert "n=5" in summary.render()


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_scan_finds_no_violation(n):
    summary = scan(enumerate_connected(n), workers=1)
    assert summary.ok, summary.violations


def test_scan_skips_disconnected():
    summary = ScanSummary("mixed", ("AH-rho-pi",))
    summary.add(from_edge_list(4, [(0, 1), (2, 3)]))
    summary.add(basic_generator("path", 1))
    summary.add(basic_generator("cycle", 4))
    assert (summary.scanned, summary.skipped) == (1, 2)
    with pytest.raises(ValueError):
        summary.merge(ScanSummary("other", ("AH-diam-pi",)))


def test_scan_parallel_matches_serial():
    corpus = [g for g in itertools.chain(enumerate_connected(4), enumerate_connected(5))]
    serial = scan(corpus, workers=1)
    parallel = scan(corpus, workers=2)
    assert serial.as_dict()["bounds"] == parallel.as_dict()["bounds"]
    assert serial.scanned == parallel.scanned == 27
    assert graph6_str(corpus[0]) == graph6_str(parse_graph6(graph6_str(corpus[0])))


def is_cut_vertex(g, c):
    rest = [v for v in range(g.order) if v != c]
    index = {v: i for i, v in enumerate(rest)}
    h = from_edge_list(len(rest), [(index[u], index[v]) for u, v in g.edges() if c not in (u, v)])
    return not is_connected(h)


def has_pendant_path(g, m):
    """A path of m vertices from a leaf through degree-2 vertices to a cut vertex."""
    for leaf in range(g.order):
        if g.degree(leaf) != 1:
            continue
        prev, cur, path = None, leaf, [leaf]
        while len(path) < m:
            if len(path) > 1 and g.degree(cur) != 2:
                break
            prev, cur = cur, next(w for w in g.adjacency[cur] if w != prev)
            path.append(cur)
        if len(path) == m and is_cut_vertex(g, cur):
            return True
    return False


@pytest.mark.parametrize("n", [5, 6, pytest.param(7, marks=pytest.mark.slow)])
def test_diam_pi_tight_only_on_paths(n):
    summary = scan(enumerate_connected(n), ["AH-diam-pi"], workers=1)
    assert summary.ok
    tight = summary.tallies["AH-diam-pi"].tight
    assert len(tight) == 1
    assert is_isomorphic(parse_graph6(tight[0]), basic_generator("path", n))


@pytest.mark.parametrize("n", [5, pytest.param(7, marks=pytest.mark.slow)])
def test_rho_pi_tight_cases_have_pendant_path(n):
    summary = scan(enumerate_connected(n), ["AH-rho-pi"], workers=1)
    assert summary.ok
    tight = [parse_graph6(s) for s in summary.tallies["AH-rho-pi"].tight]
    assert tight
    assert any(is_isomorphic(g, basic_generator("path", n)) for g in tight)
    m = (n + 1) // 2
    for g in tight:
        print(graph6_str(g))
        assert has_pendant_path(g, m)


def test_pendant_path_helper():
    assert has_pendant_path(basic_generator("path", 5), 3)
    assert not has_pendant_path(basic_generator("cycle", 5), 3)
    assert not has_pendant_path(complete_bipartite(1, 4), 3)


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 8])
def test_scan_full_catalog_slow(n):
    summary = scan(enumerate_connected(n), workers=1)
    assert summary.ok, summary.violations
    assert summary.scanned == count_connected(n)
    assert len(summary.bound_ids) == 19


def random_connected(rng, n):
    edges = [(int(rng.integers(0, v)), v) for v in range(1, n)]
    for _ in range(int(rng.integers(0, 2 * n))):
        u, v = (int(x) for x in rng.choice(n, size=2, replace=False))
        edges.append((u, v))
    return from_edge_list(n, edges)


def test_oracle_on_random_corpus():
    rng = np.random.default_rng(20240611)
    for _ in range(100):
        g = random_connected(rng, int(rng.integers(2, 65)))
        assert np.array_equal(oracle_apsp(g), all_pairs_distances(g))


@pytest.mark.parametrize("name,params", [
    ("layered", {"delta": 3, "k": 2}), ("layered", {"delta": 4, "k": 4}),
    ("layered", {"delta": 5, "k": 4}), ("layered", {"delta": 3, "k": 3}),
    ("layered-padded", {"delta": 3, "k": 2, "n": 20}),
    ("polarity", {"q": 3}), ("polarity", {"q": 5}), ("polarity", {"q": 7}),
    ("puncture", {"q": 4}), ("puncture", {"q": 7}),
    ("chain", {"q": 3, "k": 2}), ("chain", {"q": 4, "k": 2}), ("chain", {"q": 3, "k": 4}),
    ("petersen", {}), ("complete-bipartite", {"a": 3, "b": 5}),
])
def test_oracle_on_families_up_to_64(name, params):
    g = build_family(name, **params).graph
    assert g.order <= 64
    assert np.array_equal(oracle_apsp(g), all_pairs_distances(g))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, pytest.param(7, marks=pytest.mark.slow)])
def test_graph6_round_trip_on_corpus(n):
    for g in enumerate_connected(n):
        line = emit_graph6(g)
        assert parse_graph6(line) == g
        assert emit_graph6(parse_graph6(line)) == line


def test_scan_parallel_in_small_chunks():
    corpus = list(enumerate_connected(5))
    serial = scan(corpus, workers=1)
    set_active_config(get_config(cfg_override={"scan.chunk_size": 2, "scan.chunks_per_worker": 1}))
    try:
        parallel = scan(iter(corpus), workers=2)
    finally:
        set_active_config(None)
    assert parallel.scanned == serial.scanned == 21
    assert parallel.as_dict()["bounds"] == serial.as_dict()["bounds"]


def test_worker_initializer_installs_parent_settings():
    parent = get_config(cfg_override={"oracle.max_order": 8})
    _init_worker(parent.as_dict())
    try:
        assert active_config().get_value("oracle.max_order") == 8
        with pytest.raises(RuntimeError):
            active_config().set_value("oracle.max_order", 9)
        with pytest.raises(GraphError):
            oracle_apsp(petersen())
    finally:
        set_active_config(None)
