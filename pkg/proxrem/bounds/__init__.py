# -*- coding: utf-8 -*-
"""Machine-checkable catalog of distance-invariant inequalities."""

from .expr import parse_expr, evaluate_expr, VARIABLES
from .catalog import (BoundSpec, Hypotheses, GraphClass, Direction, BoundKind, Parity,
                      catalog, catalog_ids, get_bound, select_bounds, render_catalog_table)
from .evaluate import CheckResult, evaluate, check_report, check_graph, report_env
