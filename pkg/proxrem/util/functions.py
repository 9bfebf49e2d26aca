# -*- coding: utf-8 -*-
"""Small shared helpers: YAML/JSON rendering, env-var templating, timing."""

import json
import os
import re
import time
from collections import OrderedDict
from contextlib import contextmanager
from fractions import Fraction
from typing import Iterator, List, Optional, Union

import yaml
from proxrem.util.log import info


def fmt_time_deta(sec: Union[int, float, None]) -> str:
    """Format a duration in seconds as '1.23s', '2m 05s' or '1h 02m 03s'."""
    if sec is None:
        return "N/A"
    if sec < 60:
        return f"{sec:.2f}s"
    sec = int(sec)
    s = sec % 60
    m = (sec // 60) % 60
    h = sec // 3600
    if h > 0:
        return f"{h}h {m:02d}m {s:02d}s"
    return f"{m}m {s:02d}s"


@contextmanager
def timed(label: str) -> Iterator[dict]:
    """Log how long the enclosed block took; yields a dict receiving 'seconds'."""
    rec = {"seconds": None}
    start = time.perf_counter()
    try:
        yield rec
    finally:
        rec["seconds"] = time.perf_counter() - start
        info(f"{label} took {fmt_time_deta(rec['seconds'])}")


def replace_bash_var(in_str: str, data: dict) -> str:
    """
    Replace bash-like variables in the input string with values from data.

    Args:
        in_str (str): template str, eg: "workers: $(PROXREM_WORKERS: 0)"
        data (dict): data eg: {'PROXREM_WORKERS': '4'}

    Returns:
        str: replaced str eg: "workers: 4"
    """
    pattern = r'\$\(\s*(?P<key>\w+)\s*:\s*(?P<default>.*?)\s*\)'

    def replace_match(match):
        key = match.group('key').strip()
        default = match.group('default').strip()
        return str(data.get(key, default)) if default else str(data.get(key, ""))
    return re.sub(pattern, replace_match, in_str)


def get_list_from_str(list_str: Optional[str]) -> List[str]:
    """Split a comma-separated option value into trimmed, non-empty items."""
    if list_str is None:
        return []
    return [item.strip() for item in list_str.split(",") if item.strip()]


def ordered_dict_representer(dumper, data):
    return dumper.represent_dict(data.items())


yaml.add_representer(OrderedDict, ordered_dict_representer)


def _plain(obj):
    if isinstance(obj, dict):
        ret = OrderedDict()
        for k, v in obj.items():
            ret[k] = _plain(v)
        return ret
    if isinstance(obj, (list, tuple, frozenset, set)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [_plain(item) for item in items]
    if isinstance(obj, Fraction):
        return str(obj)
    return obj


def yam_str(data: dict) -> str:
    """Convert a dictionary to a YAML-formatted string (rationals as 'p/q')."""
    return yaml.dump(_plain(data), allow_unicode=True, default_flow_style=False,
                     width=float('inf'), indent=2)


def dump_as_json(data) -> str:
    """Convert a dictionary to a JSON string with pretty formatting."""
    if isinstance(data, str):
        return data
    return json.dumps(data, indent=4, ensure_ascii=False, default=str)


def save_text_file(path: str, text: str):
    """Write text to path, creating parent directories as needed."""
    dir_name = os.path.dirname(path)
    if dir_name and not os.path.exists(dir_name):
        os.makedirs(dir_name)
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text)
