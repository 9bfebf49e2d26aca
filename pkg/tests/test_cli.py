#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Test cases for the proxrem command line."""

import os
current_dir = os.path.dirname(os.path.abspath(__file__))
import sys
sys.path.append(os.path.abspath(os.path.join(current_dir, "..")))

import argparse
import json
import time

import pytest

from proxrem.cli import get_override_dict, main, run
from proxrem.constructions import build_layered
from proxrem.io.graph6 import graph6_str, read_graph6_file
from proxrem.util.config import set_active_config
from proxrem.util.log import set_verbose
from proxrem.util.errors import EXIT_IO, EXIT_OK, EXIT_USAGE


@pytest.fixture(autouse=True)
def reset_config():
    yield
    set_active_config(None)
    set_verbose(False)


def exit_code(argv):
    with pytest.raises(SystemExit) as e:
        main(argv)
    return e.value.code


def test_override_dict():
    assert get_override_dict(None) == {}
    assert get_override_dict("scan.workers=4,report.significant_digits=3") == \
        {"scan.workers": 4, "report.significant_digits": 3}
    assert get_override_dict("log.file='x.log'") == {"log.file": "x.log"}
    with pytest.raises(argparse.ArgumentTypeError):
        get_override_dict("scan.workers")


def test_gen_layered(capsys):
    assert run(["-q", "gen", "layered", "--delta", "3", "--k", "2"]) == EXIT_OK
    out = capsys.readouterr().out.splitlines()
    assert out[0] == graph6_str(build_layered(3, 2).graph)
    assert out[1] == "# layered(delta=3,k=2): order 14, edges 23"
    assert any("median total distance" in line for line in out[2:])


def test_gen_to_file(tmp_path, capsys):
    path = str(tmp_path / "h.g6")
    assert run(["-q", "gen", "polarity", "--q", "3", "--out", path]) == EXIT_OK
    graphs = list(read_graph6_file(path))
    assert len(graphs) == 1 and graphs[0].order == 13


def test_check_chain(capsys):
    assert run(["-q", "check", "--family", "chain", "--q", "4", "--k", "2", "--json"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["invariants"]["order"] == 40
    assert doc["invariants"]["diameter"] == 9
    c4 = next(c for c in doc["checks"] if c["bound_id"] == "C4-rho-pi")
    assert c4["applicable"] and c4["holds"]


def test_check_selected_bounds(capsys):
    assert run(["-q", "check", "--family", "path", "--n", "5", "--bounds", "AH-diam-pi"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "AH-diam-pi" in out and "tight" in out
    assert "AH-rho-pi" not in out


def test_measure_inputs(tmp_path, capsys):
    g6 = tmp_path / "two.g6"
    g6.write_text("Bw\nBg\n")
    assert run(["-q", "measure", "--in", str(g6), "--index", "1", "--json"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["graph"]["index"] == 1
    assert doc["invariants"]["remoteness"]["numerator"] == 3
    assert run(["-q", "measure", "--in", str(g6), "--json"]) == EXIT_OK
    assert len(json.loads(capsys.readouterr().out)) == 2
    el = tmp_path / "p4.edges"
    el.write_text("4 3\n0 1\n1 2\n2 3\n")
    assert run(["-q", "measure", "--in", str(el)]) == EXIT_OK
    assert "diameter" in capsys.readouterr().out


def test_override_digits(capsys):
    argv = ["--override", "report.significant_digits=3", "-q", "measure",
            "--family", "layered", "--delta", "3", "--k", "2", "--json"]
    assert run(argv) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["invariants"]["proximity"]["decimal"] == "2.23"


def test_scan_and_enum(tmp_path, capsys):
    assert run(["-q", "scan", "--n", "4", "--json"]) == EXIT_OK
    summary = json.loads(capsys.readouterr().out)
    assert summary["scanned"] == 6 and summary["violations"] == []
    out = str(tmp_path / "c5.g6")
    assert run(["-q", "enum", "--n", "5", "--filter", "tf", "--out", out]) == EXIT_OK
    assert len(list(read_graph6_file(out))) == 6
    assert run(["-q", "scan", "--in", out, "--filter", "c4"]) == EXIT_OK
    assert "scanned: 4" in capsys.readouterr().out


def test_catalog(capsys):
    assert run(["-q", "catalog"]) == EXIT_OK
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 20
    assert lines[-1].startswith("EPP-ball")


def test_exit_codes(tmp_path, capsys):
    assert exit_code(["-q", "measure"]) == EXIT_USAGE
    assert exit_code(["-q", "measure", "--family", "path", "--n", "3", "--in", "x.g6"]) == EXIT_USAGE
    assert exit_code(["-q", "scan", "--n", "4", "--in", "x.g6"]) == EXIT_USAGE
    assert exit_code(["-q", "gen", "layered", "--delta", "3"]) == EXIT_USAGE
    assert exit_code(["-q", "gen", "layered", "--delta", "2", "--k", "2"]) == EXIT_USAGE
    assert exit_code(["-q", "check", "--family", "path", "--n", "5", "--bounds", "nope"]) == EXIT_USAGE
    assert exit_code(["-q", "scan", "--n", "12"]) == EXIT_USAGE
    assert exit_code(["-q", "measure", "--in", str(tmp_path / "missing.g6")]) == EXIT_IO
    assert exit_code(["-q", "--config", str(tmp_path / "missing.yaml"), "catalog"]) == EXIT_IO
    assert exit_code(["--version"]) == 0
    assert "proxrem Version:" in capsys.readouterr().out
    assert exit_code(["-q", "catalog"]) == EXIT_OK


def test_report_graph6_limit(capsys):
    argv = ["-q", "measure", "--family", "layered", "--delta", "3", "--k", "2", "--json"]
    assert run(argv) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["graph"]["graph6"] == graph6_str(build_layered(3, 2).graph)
    assert run(["--override", "report.graph6_max_order=10"] + argv) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["graph"]["graph6"] == ""
    assert doc["graph"]["family"] == "layered"
    assert doc["graph"]["params"] == {"delta": 3, "k": 2}


def test_debug_lines_need_verbose(capsys):
    assert run(["catalog"]) == EXIT_OK
    assert "[DEBUG]" not in capsys.readouterr().err
    assert run(["-v", "catalog"]) == EXIT_OK
    assert "[DEBUG] Load config" in capsys.readouterr().err


@pytest.mark.slow
def test_measure_large_layered_within_a_minute(capsys):
    start = time.perf_counter()
    argv = ["-q", "measure", "--family", "layered", "--delta", "5", "--k", "2000", "--workers", "1", "--json"]
    assert run(argv) == EXIT_OK
    elapsed = time.perf_counter() - start
    doc = json.loads(capsys.readouterr().out)
    assert doc["invariants"]["order"] == 20002
    assert doc["invariants"]["diameter"] == 7999
    assert doc["graph"]["graph6"] == ""
    assert elapsed < 60, f"took {elapsed:.1f}s"
