#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Test cases for utility functions and configuration."""

import os
current_dir = os.path.dirname(os.path.abspath(__file__))
import sys
sys.path.append(os.path.abspath(os.path.join(current_dir, "..")))

import json
from fractions import Fraction

import pytest

import proxrem.util.functions as fc
from proxrem.util.config import Config, active_config, get_config, set_active_config
from proxrem.util.log import (close_log_logger, debug, get_log_logger, info, init_log_logger, set_quiet,
                              set_verbose)


def test_replace_bash_var():
    """Environment templating with defaults."""
    assert fc.replace_bash_var("workers: $(PROXREM_BFS_WORKERS: 0)", {}) == "workers: 0"
    assert fc.replace_bash_var("workers: $(PROXREM_BFS_WORKERS: 0)", {"PROXREM_BFS_WORKERS": "4"}) == "workers: 4"
    assert fc.replace_bash_var("x: $(UNSET_VAR:)", {}) == "x: "


def test_helpers():
    assert fc.get_list_from_str(" AH-rho-pi, ,TF-rho-pi ") == ["AH-rho-pi", "TF-rho-pi"]
    assert fc.get_list_from_str(None) == []
    assert fc.fmt_time_deta(None) == "N/A"
    assert fc.fmt_time_deta(1.5) == "1.50s"
    assert fc.fmt_time_deta(125) == "2m 05s"
    assert fc.fmt_time_deta(3723) == "1h 02m 03s"
    text = fc.yam_str({"pi": Fraction(29, 13), "medians": frozenset({7, 6})})
    print(text)
    assert "pi: 29/13" in text
    assert json.loads(fc.dump_as_json({"slack": Fraction(1, 2)})) == {"slack": "1/2"}
    with fc.timed("nothing") as rec:
        pass
    assert rec["seconds"] is not None


def test_default_config():
    cfg = get_config()
    print(cfg.dump_str())
    assert cfg.get_value("bfs.parallel_min_order") == 2048
    assert cfg.get_value("report.significant_digits") == 6
    assert cfg.get_value("enumeration.max_order") == 9
    assert cfg.get_value("no.such.key", "dflt") == "dflt"
    with pytest.raises(RuntimeError):
        cfg.set_value("scan.workers", 8)


def test_config_layers(tmp_path, monkeypatch):
    user = tmp_path / "settings.yaml"
    user.write_text("scan:\n  workers: $(PROXREM_TEST_SCAN: 3)\nreport:\n  significant_digits: 4\n")
    cfg = get_config(str(user))
    assert cfg.get_value("scan.workers") == 3
    assert cfg.get_value("scan.progress_every") == 5000
    assert cfg.get_value("report.significant_digits") == 4
    monkeypatch.setenv("PROXREM_TEST_SCAN", "7")
    cfg = get_config(str(user), {"report.significant_digits": 10})
    assert cfg.get_value("scan.workers") == 7
    assert cfg.get_value("report.significant_digits") == 10
    with pytest.raises(FileNotFoundError):
        get_config(str(tmp_path / "missing.yaml"))
    with pytest.raises(AttributeError):
        get_config(cfg_override={"nosection.key": 1})


def test_active_config():
    set_active_config(None)
    assert active_config() is active_config()
    set_active_config(Config({"bfs": {"workers": 1}}))
    try:
        assert active_config().get_value("bfs.workers") == 1
        assert active_config().bfs.workers == 1
    finally:
        set_active_config(None)


def test_file_logger(tmp_path):
    path = str(tmp_path / "log" / "run.log")
    init_log_logger(log_file=path)
    try:
        assert get_log_logger() is not None
        info("hello from the file logger")
    finally:
        close_log_logger()
    assert get_log_logger() is None
    with open(path) as f:
        assert "hello from the file logger" in f.read()


def test_debug_console_needs_verbose(capsys):
    debug("hidden detail")
    get_config()
    assert "[DEBUG]" not in capsys.readouterr().err
    set_verbose(True)
    try:
        debug("shown detail")
        assert "[DEBUG] shown detail" in capsys.readouterr().err
        set_quiet(True)
        debug("quiet wins")
        assert capsys.readouterr().err == ""
    finally:
        set_verbose(False)
        set_quiet(False)
