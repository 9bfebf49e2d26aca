# -*- coding: utf-8 -*-
"""Exact evaluation of catalog bounds against invariant reports."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional

from proxrem.bounds.catalog import BoundKind, BoundSpec, Direction, GraphClass, select_bounds
from proxrem.graph.core import Graph
from proxrem.graph.forbidden import annotate_class_flags
from proxrem.graph.metrics import InvariantReport, invariant_report
from proxrem.util.errors import MissingClassFlagError
from proxrem.util.log import error


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one bound on one graph; slack >= 0 iff the bound holds."""

    bound_id: str
    applicable: bool
    lhs: Optional[Fraction] = None
    rhs: Optional[Fraction] = None
    slack: Optional[Fraction] = None
    reason: str = ""

    @property
    def holds(self) -> Optional[bool]:
        return None if self.slack is None else self.slack >= 0

    @property
    def tight(self) -> Optional[bool]:
        return None if self.slack is None else self.slack == 0

    @property
    def violated(self) -> bool:
        return self.applicable and self.slack is not None and self.slack < 0


def report_env(report: InvariantReport) -> Dict[str, Fraction]:
    env = {
        "n": Fraction(report.order),
        "delta": Fraction(report.min_degree),
        "pi": report.proximity,
        "rho": report.remoteness,
        "diam": Fraction(report.diameter),
        "rad": Fraction(report.radius),
        "d": Fraction(report.diameter),
        "r": Fraction(report.radius),
    }
    if report.min_ball2_size is not None:
        env["ball2_min"] = Fraction(report.min_ball2_size)
    return env


def _class_member(b: BoundSpec, report: InvariantReport) -> bool:
    if b.class_requirement == GraphClass.ANY:
        return True
    flag = b.class_requirement.value
    value = getattr(report, flag)
    if value is None:
        raise MissingClassFlagError(b.id, flag)
    return bool(value)


def _hypotheses_reason(b: BoundSpec, report: InvariantReport, env: Dict[str, Fraction]) -> str:
    h = b.hypotheses
    if report.order < h.min_n:
        return f"n = {report.order} < {h.min_n}"
    if report.min_degree < h.min_delta:
        return f"delta = {report.min_degree} < {h.min_delta}"
    if h.parity is not None and (report.order % 2 == 1) != (h.parity.value == "odd"):
        return f"n = {report.order} is not {h.parity.value}"
    if h.extra is not None and not h.extra.evaluate(env):
        return f"{h.extra.render()} fails"
    return ""


def evaluate(b: BoundSpec, report: InvariantReport) -> CheckResult:
    """Evaluate one bound exactly; inapplicable results carry no values."""
    if not _class_member(b, report):
        return CheckResult(b.id, False, reason=f"not {b.class_requirement.value}")
    env = report_env(report)
    reason = _hypotheses_reason(b, report, env)
    if reason:
        return CheckResult(b.id, False, reason=reason)
    if b.kind == BoundKind.PER_VERTEX and "ball2_min" not in env:
        raise MissingClassFlagError(b.id, "min_ball2_size")
    lhs = b.lhs.evaluate(env)
    rhs = b.rhs.evaluate(env)
    slack = rhs - lhs if b.direction == Direction.LE else lhs - rhs
    return CheckResult(b.id, True, lhs=lhs, rhs=rhs, slack=slack)


def check_report(report: InvariantReport, ids: Optional[Iterable[str]] = None) -> List[CheckResult]:
    """Evaluate the selected bounds on a flag-annotated report; violations are logged."""
    results = []
    for b in select_bounds(ids):
        res = evaluate(b, report)
        if res.violated:
            error(f"bound {b.id} violated: lhs {res.lhs} vs rhs {res.rhs} "
                  f"(n={report.order}, delta={report.min_degree})")
        results.append(res)
    return results


def check_graph(g: Graph, ids: Optional[Iterable[str]] = None,
                workers: Optional[int] = None) -> List[CheckResult]:
    """Compute invariants and class flags once, then evaluate the requested bounds."""
    report = annotate_class_flags(g, invariant_report(g, workers=workers))
    return check_report(report, ids)
