# -*- coding: utf-8 -*-
"""Serializable report documents.

Rationals are stored as numerator/denominator pairs in lowest terms; the
decimal rendering is for reading only and is never parsed back into a value.
"""

from decimal import Context, Decimal
from fractions import Fraction
from math import gcd
from typing import Any, Dict, Iterable, List, Optional

from pydantic import BaseModel, Field, model_validator

from proxrem.bounds.evaluate import CheckResult
from proxrem.checkers.base import ValidationNote
from proxrem.graph.metrics import InvariantReport
from proxrem.util.config import active_config
from proxrem.version import __version__


def decimal_str(x: Fraction, digits: int) -> str:
    ctx = Context(prec=digits)
    return str(ctx.divide(Decimal(x.numerator), Decimal(x.denominator)))


class RationalModel(BaseModel):
    numerator: int
    denominator: int = Field(gt=0)
    decimal: str = Field(default="", description="rounded rendering, informational only")

    @model_validator(mode="after")
    def _lowest_terms(self):
        if gcd(self.numerator, self.denominator) != 1:
            raise ValueError(f"{self.numerator}/{self.denominator} is not in lowest terms")
        return self

    @classmethod
    def of(cls, x, digits: Optional[int] = None) -> "RationalModel":
        x = Fraction(x)
        if digits is None:
            digits = int(active_config().get_value("report.significant_digits", 6))
        return cls(numerator=x.numerator, denominator=x.denominator, decimal=decimal_str(x, digits))

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __str__(self):
        return str(self.value)


def _rational(x, digits) -> Optional[RationalModel]:
    return None if x is None else RationalModel.of(x, digits)


class GraphDescriptor(BaseModel):
    family: Optional[str] = None
    params: Dict[str, int] = Field(default_factory=dict)
    source: Optional[str] = Field(default=None, description="input file")
    index: Optional[int] = Field(default=None, description="0-based position in the input file")
    graph6: str = Field(default="", description="empty when the order exceeds report.graph6_max_order")

    def label(self) -> str:
        if self.family:
            return self.family + "(" + ",".join(f"{k}={v}" for k, v in self.params.items()) + ")"
        if self.source:
            return f"{self.source}#{self.index or 0}"
        return self.graph6


class InvariantsModel(BaseModel):
    order: int
    edge_count: int
    min_degree: int
    total_distance: List[int]
    eccentricity: List[int]
    proximity: RationalModel
    remoteness: RationalModel
    average_distance: RationalModel
    diameter: int
    radius: int
    median_vertices: List[int]
    margin_vertices: List[int]
    center_vertices: List[int]
    triangle_free: Optional[bool] = None
    c4_free: Optional[bool] = None
    min_ball2_size: Optional[int] = None

    @classmethod
    def of(cls, r: InvariantReport, digits: Optional[int] = None) -> "InvariantsModel":
        return cls(
            order=r.order, edge_count=r.edge_count, min_degree=r.min_degree,
            total_distance=list(r.total_distance), eccentricity=list(r.eccentricity),
            proximity=RationalModel.of(r.proximity, digits),
            remoteness=RationalModel.of(r.remoteness, digits),
            average_distance=RationalModel.of(r.average_distance, digits),
            diameter=r.diameter, radius=r.radius,
            median_vertices=list(r.median_vertices), margin_vertices=list(r.margin_vertices),
            center_vertices=list(r.center_vertices),
            triangle_free=r.triangle_free, c4_free=r.c4_free, min_ball2_size=r.min_ball2_size,
        )

    def to_report(self) -> InvariantReport:
        return InvariantReport(
            order=self.order, edge_count=self.edge_count, min_degree=self.min_degree,
            total_distance=tuple(self.total_distance), eccentricity=tuple(self.eccentricity),
            proximity=self.proximity.value, remoteness=self.remoteness.value,
            average_distance=self.average_distance.value,
            diameter=self.diameter, radius=self.radius,
            median_vertices=tuple(self.median_vertices), margin_vertices=tuple(self.margin_vertices),
            center_vertices=tuple(self.center_vertices),
            triangle_free=self.triangle_free, c4_free=self.c4_free, min_ball2_size=self.min_ball2_size,
        )


class CheckResultModel(BaseModel):
    bound_id: str
    applicable: bool
    lhs: Optional[RationalModel] = None
    rhs: Optional[RationalModel] = None
    slack: Optional[RationalModel] = None
    holds: Optional[bool] = None
    tight: Optional[bool] = None
    reason: str = ""

    @classmethod
    def of(cls, c: CheckResult, digits: Optional[int] = None) -> "CheckResultModel":
        return cls(bound_id=c.bound_id, applicable=c.applicable,
                   lhs=_rational(c.lhs, digits), rhs=_rational(c.rhs, digits),
                   slack=_rational(c.slack, digits), holds=c.holds, tight=c.tight, reason=c.reason)


class NoteModel(BaseModel):
    claim: str
    expected: Optional[str] = None
    measured: Optional[str] = None
    status: str
    detail: str = ""

    @classmethod
    def of(cls, n: ValidationNote) -> "NoteModel":
        def s(x: Any) -> Optional[str]:
            return None if x is None else str(x)
        return cls(claim=n.claim, expected=s(n.expected), measured=s(n.measured),
                   status=n.status.value, detail=n.detail)


class ReportDocument(BaseModel):
    tool_version: str = __version__
    graph: GraphDescriptor
    invariants: InvariantsModel
    checks: List[CheckResultModel] = Field(default_factory=list)
    notes: List[NoteModel] = Field(default_factory=list)

    @property
    def violations(self) -> List[CheckResultModel]:
        return [c for c in self.checks if c.applicable and c.holds is False]

    def to_json(self, indent: int = 2) -> str:
        return self.model_dump_json(indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls.model_validate_json(text)


def build_report(descriptor: GraphDescriptor, report: InvariantReport,
                 checks: Iterable[CheckResult] = (), notes: Iterable[ValidationNote] = (),
                 digits: Optional[int] = None) -> ReportDocument:
    return ReportDocument(
        graph=descriptor,
        invariants=InvariantsModel.of(report, digits),
        checks=[CheckResultModel.of(c, digits) for c in checks],
        notes=[NoteModel.of(n) for n in notes],
    )


def _fmt_vertices(vs: List[int], limit: int = 12) -> str:
    if len(vs) <= limit:
        return ", ".join(str(v) for v in vs)
    return ", ".join(str(v) for v in vs[:limit]) + f", ... ({len(vs)} total)"


def _fmt_rational(r: Optional[RationalModel]) -> str:
    if r is None:
        return "-"
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator} ({r.decimal})"


def render_table(doc: ReportDocument) -> str:
    """Aligned plain-text rendering of a report."""
    inv = doc.invariants

    def flag(x):
        return "-" if x is None else ("yes" if x else "no")

    rows = [
        ("graph", doc.graph.label()),
        ("order", inv.order),
        ("edges", inv.edge_count),
        ("min degree", inv.min_degree),
        ("proximity", _fmt_rational(inv.proximity)),
        ("remoteness", _fmt_rational(inv.remoteness)),
        ("average distance", _fmt_rational(inv.average_distance)),
        ("diameter", inv.diameter),
        ("radius", inv.radius),
        ("median vertices", _fmt_vertices(inv.median_vertices)),
        ("margin vertices", _fmt_vertices(inv.margin_vertices)),
        ("center vertices", _fmt_vertices(inv.center_vertices)),
        ("triangle-free", flag(inv.triangle_free)),
        ("C4-free", flag(inv.c4_free)),
    ]
    if inv.min_ball2_size is not None:
        rows.append(("min |N<=2(v)|", inv.min_ball2_size))
    width = max(len(k) for k, _ in rows)
    lines = [f"{k:<{width}}  {v}" for k, v in rows]
    if doc.checks:
        lines.append("")
        lines.append(f"{'bound':<12} {'status':<10} {'lhs':>22} {'rhs':>22} {'slack':>22}")
        for c in doc.checks:
            if not c.applicable:
                lines.append(f"{c.bound_id:<12} {'n/a':<10} {c.reason}")
                continue
            status = "VIOLATED" if not c.holds else ("tight" if c.tight else "holds")
            lines.append(f"{c.bound_id:<12} {status:<10} {_fmt_rational(c.lhs):>22} "
                         f"{_fmt_rational(c.rhs):>22} {_fmt_rational(c.slack):>22}")
    if doc.notes:
        lines.append("")
        lines.append("validation notes:")
        for n in doc.notes:
            line = f"  [{n.status}] {n.claim}: expected {n.expected}, measured {n.measured}"
            if n.detail:
                line += f" {n.detail}"
            lines.append(line)
    return "\n".join(lines)
