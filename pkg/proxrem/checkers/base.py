# -*- coding: utf-8 -*-
"""Base checker class for construction claims."""

import time
import traceback
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Any, List, Optional, Tuple

from proxrem.graph.core import Graph
from proxrem.graph.forbidden import annotate_class_flags, is_c4_free, is_triangle_free
from proxrem.graph.metrics import InvariantReport, invariant_report
from proxrem.util.errors import ConstructionIntegrityError
from proxrem.util.log import debug, info, warning


class NoteStatus(str, Enum):
    PASSED = "passed"
    FAILED = "failed"
    ADVISORY = "advisory"   # failed, but the claim is not binding for these parameters
    RECORDED = "recorded"   # a measurement kept for the report, nothing asserted


@dataclass(frozen=True)
class ValidationNote:
    claim: str
    expected: Any
    measured: Any
    status: NoteStatus
    detail: str = ""

    def line(self) -> str:
        s = f"{self.claim}: expected {self.expected}, measured {self.measured} [{self.status.value}]"
        if self.detail:
            s += f" {self.detail}"
        return s


class Subject:
    """A graph under validation, with its invariants computed at most once."""

    def __init__(self, graph: Graph, workers: Optional[int] = None):
        self.graph = graph
        self.workers = workers

    @cached_property
    def report(self) -> InvariantReport:
        return invariant_report(self.graph, workers=self.workers)

    @cached_property
    def triangle_free(self) -> bool:
        return is_triangle_free(self.graph)

    @cached_property
    def c4_free(self) -> bool:
        return is_c4_free(self.graph)

    @cached_property
    def annotated_report(self) -> InvariantReport:
        return annotate_class_flags(self.graph, self.report)


class Checker:
    """Base class for claim checkers.

    Subclasses implement ``do_check(subject) -> (passed, {"expected", "measured", ...})``.
    ``check`` wraps it with timing and turns exceptions into a failed result.
    """

    claim: str = "claim"
    recorded: bool = False

    def __init__(self, claim: Optional[str] = None, advisory: bool = False):
        if claim is not None:
            self.claim = claim
        self.advisory = advisory
        self.elapsed: Optional[float] = None

    def do_check(self, subject: Subject) -> Tuple[bool, dict]:
        raise NotImplementedError("This method should be implemented in a subclass.")

    def check(self, subject: Subject) -> Tuple[bool, dict]:
        start = time.time()
        try:
            passed, msg = self.do_check(subject)
        except Exception as e:
            debug(traceback.format_exc())
            passed, msg = False, {"expected": getattr(self, "expected", None),
                                  "measured": None, "error": f"{e.__class__.__name__}: {e}"}
        self.elapsed = time.time() - start
        return passed, msg

    def note(self, subject: Subject) -> ValidationNote:
        passed, msg = self.check(subject)
        if self.recorded:
            status = NoteStatus.RECORDED
        elif passed:
            status = NoteStatus.PASSED
        else:
            status = NoteStatus.ADVISORY if self.advisory else NoteStatus.FAILED
        return ValidationNote(self.claim, msg.get("expected"), msg.get("measured"),
                              status, msg.get("error", msg.get("detail", "")))

    def __str__(self):
        return f"{self.__class__.__name__}({self.claim})"


def run_checkers(checkers: List[Checker], subject: Subject, label: str) -> List[ValidationNote]:
    """Run every checker; raise on the first binding failure after logging all notes."""
    notes = [c.note(subject) for c in checkers]
    failed = [n for n in notes if n.status == NoteStatus.FAILED]
    for n in notes:
        if n.status == NoteStatus.ADVISORY:
            warning(f"{label}: advisory claim not met, {n.line()}")
        elif n.status == NoteStatus.FAILED:
            warning(f"{label}: {n.line()}")
    if failed:
        first = failed[0]
        raise ConstructionIntegrityError(first.claim, first.expected, first.measured, first.detail or label)
    info(f"{label}: {sum(n.status == NoteStatus.PASSED for n in notes)} claims validated")
    return notes
