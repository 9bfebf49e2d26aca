# -*- coding: utf-8 -*-
"""Concrete claim checkers used to validate constructed graphs."""

from fractions import Fraction
from typing import Any, Callable, Iterable, Optional, Sequence, Tuple

import numpy as np

from proxrem.checkers.base import Checker, Subject
from proxrem.graph.core import is_connected
from proxrem.graph.kernels import bfs_levels

__all__ = [
    "EqualsClaim", "OrderClaim", "MinDegreeClaim", "DiameterClaim", "RadiusClaim",
    "ConnectedClaim", "TriangleFreeClaim", "C4FreeClaim", "DistanceAtLeastClaim",
    "MedianClaim", "VertexSetClaim", "LayerStructureClaim", "DegreeSplitClaim",
    "ClosedFormClaim", "IntervalClaim", "RecordClaim", "claims_summary",
]


class EqualsClaim(Checker):
    """measure(subject) == expected."""

    def __init__(self, claim: str, expected: Any, measure: Callable[[Subject], Any], advisory: bool = False):
        super().__init__(claim, advisory)
        self.expected = expected
        self.measure = measure

    def do_check(self, subject):
        measured = self.measure(subject)
        return measured == self.expected, {"expected": self.expected, "measured": measured}


class OrderClaim(EqualsClaim):
    def __init__(self, expected: int, advisory: bool = False):
        super().__init__("order", expected, lambda s: s.graph.order, advisory)


class MinDegreeClaim(EqualsClaim):
    def __init__(self, expected: int, advisory: bool = False):
        super().__init__("min_degree", expected, lambda s: int(s.graph.degrees.min()), advisory)


class DiameterClaim(EqualsClaim):
    def __init__(self, expected: int, advisory: bool = False):
        super().__init__("diameter", expected, lambda s: s.report.diameter, advisory)


class RadiusClaim(EqualsClaim):
    def __init__(self, expected: Any, advisory: bool = False):
        super().__init__("radius", expected, lambda s: s.report.radius, advisory)


class ConnectedClaim(EqualsClaim):
    def __init__(self, advisory: bool = False):
        super().__init__("connected", True, lambda s: is_connected(s.graph), advisory)


class TriangleFreeClaim(EqualsClaim):
    def __init__(self, advisory: bool = False):
        super().__init__("triangle_free", True, lambda s: s.triangle_free, advisory)


class C4FreeClaim(EqualsClaim):
    def __init__(self, advisory: bool = False):
        super().__init__("c4_free", True, lambda s: s.c4_free, advisory)


class DistanceAtLeastClaim(Checker):
    """d(u, v) >= k; an unreachable v counts as infinitely far."""

    def __init__(self, u: int, v: int, k: int, advisory: bool = False):
        super().__init__(f"d({u},{v}) >= {k}", advisory)
        self.u, self.v, self.k = u, v, k
        self.expected = f">= {k}"

    def do_check(self, subject):
        d = int(bfs_levels(subject.graph.indptr, subject.graph.indices, self.u)[self.v])
        measured = "inf" if d < 0 else d
        return d < 0 or d >= self.k, {"expected": self.expected, "measured": measured}


class MedianClaim(Checker):
    """u is among the median vertices."""

    def __init__(self, u: int, advisory: bool = False):
        super().__init__(f"vertex {u} is a median", advisory)
        self.u = u

    def do_check(self, subject):
        medians = subject.report.median_vertices
        return self.u in medians, {"expected": f"{self.u} in medians", "measured": list(medians)}


class VertexSetClaim(EqualsClaim):
    """One of the report's vertex sets equals the expected tuple."""

    def __init__(self, field: str, expected: Sequence[int], advisory: bool = False):
        super().__init__(field, tuple(expected), lambda s: getattr(s.report, field), advisory)


class LayerStructureClaim(Checker):
    """BFS distance from vertex 0 recovers the layer index of every vertex."""

    claim = "layer structure"

    def __init__(self, layer_of: Sequence[int], advisory: bool = False):
        super().__init__(None, advisory)
        self.layer_of = np.asarray(layer_of, dtype=np.int64)

    def do_check(self, subject):
        dist = bfs_levels(subject.graph.indptr, subject.graph.indices, 0)
        bad = np.flatnonzero(dist != self.layer_of)
        measured = "consistent" if bad.shape[0] == 0 else f"{bad.shape[0]} vertices off, first {int(bad[0])}"
        return bad.shape[0] == 0, {"expected": "layer index == d(0, v)", "measured": measured}


class DegreeSplitClaim(Checker):
    """Vertices in `low` have degree q, every other vertex degree q + 1."""

    claim = "degree split"

    def __init__(self, q: int, low: Iterable[int], advisory: bool = False):
        super().__init__(None, advisory)
        self.q = q
        self.low = frozenset(low)

    def do_check(self, subject):
        deg = subject.graph.degrees
        expected = np.full(subject.graph.order, self.q + 1, dtype=np.int64)
        expected[list(self.low)] = self.q
        bad = np.flatnonzero(deg != expected)
        msg = {"expected": f"{len(self.low)} x deg {self.q}, "
                           f"{subject.graph.order - len(self.low)} x deg {self.q + 1}",
               "measured": "as expected" if bad.shape[0] == 0 else
                           f"vertex {int(bad[0])} has degree {int(deg[bad[0]])}"}
        return bad.shape[0] == 0, msg


class ClosedFormClaim(Checker):
    """|measured - expected| <= tolerance; the signed discrepancy is reported."""

    def __init__(self, claim: str, expected, measure: Callable[[Subject], Any],
                 tolerance=0, advisory: bool = False):
        super().__init__(claim, advisory)
        self.expected = Fraction(expected)
        self.measure = measure
        self.tolerance = Fraction(tolerance)

    def do_check(self, subject):
        measured = Fraction(self.measure(subject))
        diff = measured - self.expected
        return abs(diff) <= self.tolerance, {"expected": self.expected, "measured": measured,
                                             "detail": f"discrepancy {diff}"}


class IntervalClaim(Checker):
    """lo < measure(subject) < hi, either end optional."""

    def __init__(self, claim: str, measure: Callable[[Subject], Any],
                 lo: Optional[Fraction] = None, hi: Optional[Fraction] = None,
                 closed: bool = False, advisory: bool = False):
        super().__init__(claim, advisory)
        self.measure = measure
        self.lo, self.hi, self.closed = lo, hi, closed
        lb = "[" if closed else "("
        rb = "]" if closed else ")"
        self.expected = f"in {lb}{'-inf' if lo is None else lo}, {'inf' if hi is None else hi}{rb}"

    def do_check(self, subject):
        x = self.measure(subject)
        if self.closed:
            ok = (self.lo is None or x >= self.lo) and (self.hi is None or x <= self.hi)
        else:
            ok = (self.lo is None or x > self.lo) and (self.hi is None or x < self.hi)
        return ok, {"expected": self.expected, "measured": x}


class RecordClaim(Checker):
    """Stores a measurement next to a reference value without asserting anything."""

    recorded = True

    def __init__(self, claim: str, measure: Callable[[Subject], Any], reference: Any = None):
        super().__init__(claim)
        self.measure = measure
        self.expected = reference

    def do_check(self, subject):
        return True, {"expected": self.expected, "measured": self.measure(subject)}


def claims_summary(notes) -> Tuple[int, int, int]:
    """(passed, advisory, recorded) counts."""
    passed = sum(n.status.value == "passed" for n in notes)
    advisory = sum(n.status.value == "advisory" for n in notes)
    recorded = sum(n.status.value == "recorded" for n in notes)
    return passed, advisory, recorded
