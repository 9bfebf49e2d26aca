#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Test cases for the JSON report documents."""

import os
current_dir = os.path.dirname(os.path.abspath(__file__))
import sys
sys.path.append(os.path.abspath(os.path.join(current_dir, "..")))

import json
from fractions import Fraction

import pytest
from pydantic import ValidationError

from proxrem.bounds import CheckResult, check_report
from proxrem.constructions import build_family
from proxrem.io.report import (GraphDescriptor, RationalModel, ReportDocument, build_report,
                               decimal_str, render_table)
from proxrem.util.functions import yam_str


def layered_doc():
    c = build_family("layered", delta=3, k=2)
    desc = GraphDescriptor(family=c.family, params=c.params)
    return c, build_report(desc, c.report, check_report(c.report), c.notes, digits=6)


def test_rational_model():
    r = RationalModel.of(Fraction(29, 13), 6)
    assert (r.numerator, r.denominator) == (29, 13)
    assert r.decimal == "2.23077"
    assert r.value == Fraction(29, 13)
    assert str(r) == "29/13"
    assert RationalModel.of(3, 6).decimal == "3"
    assert decimal_str(Fraction(-1, 3), 3) == "-0.333"
    with pytest.raises(ValidationError):
        RationalModel(numerator=2, denominator=4)
    with pytest.raises(ValidationError):
        RationalModel(numerator=1, denominator=0)


def test_report_json_round_trip():
    c, doc = layered_doc()
    text = doc.to_json()
    data = json.loads(text)
    assert data["invariants"]["proximity"] == {"numerator": 29, "denominator": 13, "decimal": "2.23077"}
    assert data["graph"]["params"] == {"delta": 3, "k": 2}
    back = ReportDocument.from_json(text)
    assert back == doc
    assert back.invariants.to_report() == c.report
    assert not back.violations
    print(yam_str({"proximity": back.invariants.proximity.value, "checks": len(back.checks)}))


def test_not_applicable_check_serializes_without_values():
    _, doc = layered_doc()
    ball = next(ch for ch in doc.checks if ch.bound_id == "EPP-ball")
    assert not ball.applicable
    assert ball.lhs is None and ball.slack is None and ball.holds is None
    assert ball.reason == "not c4_free"


def test_violations_property():
    _, doc = layered_doc()
    bad = build_report(doc.graph, doc.invariants.to_report(),
                       [CheckResult("AH-rho-pi", True, Fraction(3), Fraction(2), Fraction(-1))])
    assert [v.bound_id for v in bad.violations] == ["AH-rho-pi"]
    assert "VIOLATED" in render_table(bad)


def test_render_table():
    _, doc = layered_doc()
    text = render_table(doc)
    assert "layered(delta=3,k=2)" in text
    assert "29/13 (2.23077)" in text
    assert "triangle-free" in text
    assert "validation notes:" in text
    assert "TF-rho-pi" in text


def test_descriptor_label():
    assert GraphDescriptor(source="in.g6", index=3, graph6="Bw").label() == "in.g6#3"
    assert GraphDescriptor(graph6="Bw").label() == "Bw"
    assert GraphDescriptor(family="chain", params={"q": 4, "k": 2}).label() == "chain(q=4,k=2)"
