#!/usr/bin/env python3
"""
proxrem - exact distance invariants of graphs.

Builds extremal graph families, computes proximity, remoteness, diameter and
radius exactly, and checks a catalog of known inequalities against them.
"""

from .version import __version__, __description__
