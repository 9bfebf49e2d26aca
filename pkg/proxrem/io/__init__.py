# -*- coding: utf-8 -*-
"""Graph serialization and report documents."""

from .graph6 import (parse_graph6, emit_graph6, graph6_str, validate_graph6,
                     read_graph6_file, write_graph6_file)
from .edgelist import parse_edge_list, read_edge_list, format_edge_list, write_edge_list
from .report import (RationalModel, GraphDescriptor, InvariantsModel, CheckResultModel,
                     NoteModel, ReportDocument, build_report, render_table)
