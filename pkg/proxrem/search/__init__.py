# -*- coding: utf-8 -*-
"""Small-graph enumeration, the brute-force distance oracle and corpus scans."""

from .canon import canonical_form, canonical_key, graph_to_masks, masks_to_graph, is_isomorphic
from .enumerate import GraphFilter, enumerate_connected, count_connected
from .oracle import oracle_apsp
from .scan import BoundTally, ScanSummary, scan
