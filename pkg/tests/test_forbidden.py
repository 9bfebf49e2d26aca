#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Test cases for triangle / 4-cycle detection and the C4-free ball lemma."""

import os
current_dir = os.path.dirname(os.path.abspath(__file__))
import sys
sys.path.append(os.path.abspath(os.path.join(current_dir, "..")))

import pytest

from proxrem.graph import (WitnessKind, annotate_class_flags, ball2_size, basic_generator,
                           check_epp_lemma, complete_bipartite, epp_ball_bound, find_c4,
                           find_triangle, from_edge_list, invariant_report, is_c4_free,
                           is_triangle_free, petersen)
from proxrem.util.errors import DisconnectedGraphError, ForbiddenSubgraphError, GraphError


def test_find_triangle():
    k4 = basic_generator("complete", 4)
    w = find_triangle(k4)
    assert w.kind == WitnessKind.TRIANGLE
    assert w.vertices == (0, 1, 2)
    assert w.validate(k4)
    assert find_triangle(basic_generator("cycle", 5)) is None
    assert find_triangle(petersen()) is None
    assert not is_triangle_free(basic_generator("cycle", 3))


def test_find_c4():
    c4 = basic_generator("cycle", 4)
    w = find_c4(c4)
    assert w.vertices == (0, 1, 2, 3)
    assert w.validate(c4)
    k23 = complete_bipartite(2, 3)
    w = find_c4(k23)
    assert w.vertices == (0, 2, 1, 3)
    assert w.validate(k23)
    assert str(w) == "c4(0, 2, 1, 3)"
    # K4 has 4-cycles that are not induced
    assert find_c4(basic_generator("complete", 4)) is not None
    assert is_c4_free(basic_generator("cycle", 5))
    assert is_c4_free(petersen())
    assert is_c4_free(basic_generator("path", 6))


def test_witness_validate_rejects_non_cycles():
    from proxrem.graph import ForbiddenWitness
    c5 = basic_generator("cycle", 5)
    assert not ForbiddenWitness(WitnessKind.C4, (0, 1, 2, 3)).validate(c5)
    assert not ForbiddenWitness(WitnessKind.TRIANGLE, (0, 1, 1)).validate(c5)


def test_epp_ball_bound():
    assert epp_ball_bound(1) == 2
    assert epp_ball_bound(2) == 3
    assert epp_ball_bound(3) == 8
    assert epp_ball_bound(4) == 13


def test_check_epp_lemma_petersen():
    rep = check_epp_lemma(petersen())
    assert rep.min_degree == 3
    assert rep.bound == 8
    assert rep.min_ball == 10
    assert rep.slack == 2
    assert rep.holds
    assert ball2_size(petersen(), 0) == 10


def test_check_epp_lemma_errors():
    with pytest.raises(ForbiddenSubgraphError) as e:
        check_epp_lemma(basic_generator("cycle", 4))
    assert e.value.witness.kind == WitnessKind.C4
    with pytest.raises(DisconnectedGraphError):
        check_epp_lemma(from_edge_list(4, [(0, 1), (2, 3)]))


def test_annotate_class_flags():
    c5 = basic_generator("cycle", 5)
    r = annotate_class_flags(c5, invariant_report(c5))
    assert r.triangle_free and r.c4_free
    assert r.min_ball2_size == 5
    k4 = basic_generator("complete", 4)
    r = annotate_class_flags(k4, invariant_report(k4))
    assert r.triangle_free is False and r.c4_free is False
    assert r.min_ball2_size is None
    with pytest.raises(GraphError):
        annotate_class_flags(k4, invariant_report(c5))
