# -*- coding: utf-8 -*-
"""Graph representation, distance invariants and forbidden-subgraph checks."""

from .core import (Graph, VertexId, BasicKind, LayerPlan, LayeredGraph, LinkedUnion,
                   from_edge_list, basic_generator, complete_bipartite, petersen,
                   sequential_sum, add_twins, disjoint_union_with_links,
                   is_connected, min_degree)
from .metrics import (InvariantReport, RingMode, bfs_distances, total_distance,
                      partial_total_distance, neighborhood_ring, all_pairs_distances,
                      invariant_report)
from .forbidden import (ForbiddenWitness, WitnessKind, BallLemmaReport, find_triangle,
                        find_c4, is_triangle_free, is_c4_free, ball2_size, epp_ball_bound,
                        check_epp_lemma, annotate_class_flags)
