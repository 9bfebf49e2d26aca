# -*- coding: utf-8 -*-
"""Version information for proxrem."""

try:
    from ._version import __version__
except ImportError:
    __version__ = "0.3.0.source-code"

__description__ = "Exact proximity, remoteness, diameter and radius engine with bound verification"
