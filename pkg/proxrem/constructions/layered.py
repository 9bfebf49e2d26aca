# -*- coding: utf-8 -*-
"""Layered triangle-free families: G_{delta,k} and its padded variant G^n_{delta,k}.

G_{delta,k} is the sequential sum of 4k edgeless layers

    [1, delta, delta-1, 1] + [1, delta-1, delta-1, 1] * (k-2) + [1, delta-1, delta, 1]

The last block is the mirror image of the first so that both end vertices
have degree delta. Vertices are numbered layer by layer; vertex 0 is the
first end, n-1 the other, and the two singleton centre layers are 2k-1, 2k.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from proxrem.bounds.catalog import get_bound
from proxrem.bounds.evaluate import evaluate
from proxrem.checkers import (ClosedFormClaim, ConnectedClaim, DiameterClaim, EqualsClaim,
                              IntervalClaim, LayerStructureClaim, MedianClaim, MinDegreeClaim,
                              OrderClaim, RadiusClaim, RecordClaim, Subject, TriangleFreeClaim,
                              ValidationNote, VertexSetClaim, run_checkers)
from proxrem.graph.core import Graph, LayerPlan, add_twins, sequential_sum
from proxrem.util.errors import FamilyError
from proxrem.util.log import warning


def layered_plan(delta: int, k: int) -> LayerPlan:
    first = [1, delta, delta - 1, 1]
    middle = [1, delta - 1, delta - 1, 1] * (k - 2)
    last = [1, delta - 1, delta, 1]
    return LayerPlan(tuple(first + middle + last))


def _check_params(delta: int, k: int) -> bool:
    if delta < 3:
        raise FamilyError(f"G_(delta,k) needs delta >= 3, got {delta}")
    if k < 2:
        raise FamilyError(f"G_(delta,k) needs k >= 2, got {k}")
    even = k % 2 == 0
    if not even:
        warning(f"G_({delta},{k}): odd k, radius and closed-form claims are advisory")
    return even


def _bound_slack(bound_id: str, s: Subject) -> Fraction:
    return evaluate(get_bound(bound_id), s.annotated_report).slack


@dataclass(frozen=True)
class LayeredConstruction:
    delta: int
    k: int
    graph: Graph
    layer_of: Tuple[int, ...]
    median: int             # lowest-index median vertex of G_{delta,k}
    twin_of: Optional[int] = None
    base_order: int = 0
    notes: Tuple[ValidationNote, ...] = field(default=(), compare=False)
    subject: Optional[Subject] = field(default=None, compare=False, repr=False)


def build_layered(delta: int, k: int, validate: bool = True,
                  workers: Optional[int] = None) -> LayeredConstruction:
    even = _check_params(delta, k)
    adv = not even
    plan = layered_plan(delta, k)
    g, layer_of = sequential_sum(plan)
    n = g.order
    centre = (sum(plan.layers[:2 * k - 1]), sum(plan.layers[:2 * k]))
    subject = Subject(g, workers)
    notes = []
    if validate:
        checks = [
            OrderClaim(2 * k * delta + 2), MinDegreeClaim(delta), ConnectedClaim(),
            TriangleFreeClaim(), LayerStructureClaim(layer_of),
            DiameterClaim(4 * k - 1), RadiusClaim(2 * k, adv),
            VertexSetClaim("median_vertices", centre, adv),
            VertexSetClaim("margin_vertices", (0, n - 1), adv),
            ClosedFormClaim("median total distance", 2 * delta * k * k + 4 * k - 3,
                            lambda s: s.report.total_distance[s.report.median], tolerance=1, advisory=adv),
            ClosedFormClaim("margin total distance", Fraction(2 * delta * k + 2) * Fraction(4 * k - 1, 2),
                            lambda s: s.report.total_distance[s.report.margin], tolerance=1, advisory=adv),
            ClosedFormClaim("proximity", Fraction(n + 1, 2 * delta) - Fraction(6 * delta + 3, 2 * delta * (n - 1)),
                            lambda s: s.report.proximity, tolerance=Fraction(1, n - 1), advisory=adv),
            ClosedFormClaim("remoteness",
                            Fraction(2 * n - delta - 2, 2 * delta) - Fraction(delta + 2, 2 * delta * (n - 1)),
                            lambda s: s.report.remoteness, tolerance=Fraction(1, n - 1), advisory=adv),
            # remoteness minus proximity stays within 31/6 of the triangle-free bound
            IntervalClaim("TF-rho-pi gap", lambda s: _bound_slack("TF-rho-pi", s),
                          lo=Fraction(0), hi=Fraction(31, 6), advisory=adv),
            RecordClaim("TF-rad-pi slack", lambda s: _bound_slack("TF-rad-pi", s)),
        ]
        notes = run_checkers(checks, subject, f"G_({delta},{k})")
    median = subject.report.median if validate else centre[0]
    return LayeredConstruction(delta=delta, k=k, graph=g, layer_of=layer_of, median=median,
                               base_order=n, notes=tuple(notes), subject=subject)


def layered_extremal(delta: int, k: int) -> Graph:
    """G_{delta,k}, validated."""
    return build_layered(delta, k).graph


def build_layered_padded(delta: int, k: int, n: int, validate: bool = True,
                         workers: Optional[int] = None) -> LayeredConstruction:
    """G^n_{delta,k}: G_{delta,k} plus n - n0 twins of the first neighbor w of the first median u."""
    base = build_layered(delta, k, validate=validate, workers=workers)
    n0 = base.graph.order
    if n < n0:
        raise FamilyError(f"target order {n} is below the base order {n0} of G_({delta},{k})")
    even = k % 2 == 0
    adv = not even
    u = base.median
    w = int(base.graph.neighbors(u)[0])
    g = add_twins(base.graph, w, n - n0)
    subject = Subject(g, workers)
    notes = list(base.notes)
    if validate:
        sigma_u = base.subject.report.total_distance[u]
        d = 4 * k - 1
        checks = [
            OrderClaim(n), MinDegreeClaim(delta), ConnectedClaim(), TriangleFreeClaim(),
            DiameterClaim(d), RadiusClaim(2 * k, adv), MedianClaim(u, adv),
            EqualsClaim(f"total distance of vertex {u}", sigma_u + n - n0,
                        lambda s: s.report.total_distance[u]),
            ClosedFormClaim("proximity",
                            (Fraction(delta, 8) * (d - 1) ** 2 + n + d - Fraction(delta, 2) - 4) / (n - 1),
                            lambda s: s.report.proximity, tolerance=Fraction(1, n - 1), advisory=adv),
            # proximity exceeds the triangle-free lower bound given diameter by at most 11/4
            IntervalClaim("TF-pi-diam gap", lambda s: _bound_slack("TF-pi-diam", s),
                          lo=Fraction(0), hi=Fraction(11, 4), closed=True, advisory=adv),
        ]
        notes += run_checkers(checks, subject, f"G^{n}_({delta},{k})")
    return LayeredConstruction(delta=delta, k=k, graph=g, layer_of=base.layer_of, median=u,
                               twin_of=w, base_order=n0, notes=tuple(notes), subject=subject)


def layered_extremal_padded(delta: int, k: int, n: int) -> Graph:
    """G^n_{delta,k}, validated."""
    return build_layered_padded(delta, k, n).graph
