# -*- coding: utf-8 -*-
"""Run the bound catalog over a corpus of graphs and aggregate the outcome."""

import itertools
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from proxrem.bounds.catalog import select_bounds
from proxrem.bounds.evaluate import check_graph
from proxrem.graph.core import Graph, is_connected
from proxrem.io.graph6 import graph6_str, parse_graph6
from proxrem.util.config import Config, active_config, set_active_config
from proxrem.util.log import error, info


@dataclass
class BoundTally:
    bound_id: str
    applicable: int = 0
    violations: int = 0
    tight: List[str] = field(default_factory=list)
    min_slack: Optional[Fraction] = None
    min_slack_witness: Optional[str] = None

    def record(self, slack: Fraction, g6: str):
        self.applicable += 1
        if slack < 0:
            self.violations += 1
        if slack == 0:
            self.tight.append(g6)
        if self._better(slack, g6):
            self.min_slack, self.min_slack_witness = slack, g6

    def _better(self, slack, g6) -> bool:
        # ties go to the smaller graph6 string so the witness does not depend on corpus order
        if self.min_slack is None or slack < self.min_slack:
            return True
        return slack == self.min_slack and g6 < self.min_slack_witness

    def merge(self, other: "BoundTally") -> "BoundTally":
        out = BoundTally(self.bound_id, self.applicable + other.applicable,
                         self.violations + other.violations, sorted(self.tight + other.tight),
                         self.min_slack, self.min_slack_witness)
        if other.min_slack is not None and out._better(other.min_slack, other.min_slack_witness):
            out.min_slack, out.min_slack_witness = other.min_slack, other.min_slack_witness
        return out


@dataclass
class ScanSummary:
    """Per-bound tallies over a corpus; `violations` lists (bound id, graph6) pairs."""

    corpus: str
    bound_ids: Tuple[str, ...]
    scanned: int = 0
    skipped: int = 0
    tallies: Dict[str, BoundTally] = field(default_factory=dict)
    violations: List[Tuple[str, str]] = field(default_factory=list)

    def __post_init__(self):
        for b in self.bound_ids:
            self.tallies.setdefault(b, BoundTally(b))

    @property
    def violation_count(self) -> int:
        return len(self.violations)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, g: Graph):
        if g.order < 2 or not is_connected(g):
            self.skipped += 1
            return
        g6 = graph6_str(g)
        for res in check_graph(g, self.bound_ids, workers=1):
            if not res.applicable:
                continue
            self.tallies[res.bound_id].record(res.slack, g6)
            if res.violated:
                self.violations.append((res.bound_id, g6))
        self.scanned += 1

    def merge(self, other: "ScanSummary") -> "ScanSummary":
        if self.bound_ids != other.bound_ids:
            raise ValueError("cannot merge scans over different bound selections")
        out = ScanSummary(self.corpus, self.bound_ids, self.scanned + other.scanned,
                          self.skipped + other.skipped)
        out.tallies = {b: self.tallies[b].merge(other.tallies[b]) for b in self.bound_ids}
        out.violations = sorted(self.violations + other.violations)
        return out

    def as_dict(self) -> dict:
        return {
            "corpus": self.corpus,
            "scanned": self.scanned,
            "skipped": self.skipped,
            "violations": [{"bound": b, "graph6": g6} for b, g6 in self.violations],
            "bounds": {
                b: {"applicable": t.applicable, "violations": t.violations,
                    "tight": sorted(t.tight), "min_slack": t.min_slack,
                    "min_slack_witness": t.min_slack_witness}
                for b, t in self.tallies.items()
            },
        }

    def render(self) -> str:
        rows = [f"corpus: {self.corpus}",
                f"scanned: {self.scanned}, skipped (disconnected or trivial): {self.skipped}",
                f"{'bound':<12} {'applicable':>10} {'violated':>8} {'tight':>6}  min slack (witness)"]
        for b, t in self.tallies.items():
            slack = "-" if t.min_slack is None else f"{t.min_slack} ({t.min_slack_witness})"
            rows.append(f"{b:<12} {t.applicable:>10} {t.violations:>8} {len(t.tight):>6}  {slack}")
        for b, g6 in self.violations:
            rows.append(f"VIOLATION {b}: {g6}")
        return "\n".join(rows)


def _init_worker(settings: dict):
    # pool workers run on the parent's resolved settings, overrides included
    set_active_config(Config(settings).freeze())


def _scan_chunk(corpus: str, bound_ids: Tuple[str, ...], lines: Sequence[str]) -> ScanSummary:
    summary = ScanSummary(corpus, bound_ids)
    for line in lines:
        summary.add(parse_graph6(line))
    return summary


def _chunks(it: Iterable, size: int):
    it = iter(it)
    while True:
        part = list(itertools.islice(it, size))
        if not part:
            return
        yield part


def scan(corpus: Iterable[Graph], ids: Optional[Iterable[str]] = None,
         workers: Optional[int] = None, label: str = "corpus") -> ScanSummary:
    """Check every graph of the corpus against the selected bounds."""
    cfg = active_config()
    bound_ids = tuple(b.id for b in select_bounds(ids))
    if workers is None:
        workers = int(cfg.get_value("scan.workers", 1))
    every = int(cfg.get_value("scan.progress_every", 5000))
    summary = ScanSummary(label, bound_ids)
    if workers <= 1:
        for i, g in enumerate(corpus, 1):
            summary.add(g)
            if every and i % every == 0:
                info(f"{label}: {i} graphs scanned")
    else:
        size = max(1, int(cfg.get_value("scan.chunk_size", 500)))
        window = workers * max(1, int(cfg.get_value("scan.chunks_per_worker", 2)))
        info(f"{label}: scanning with {workers} processes, {size} graphs per chunk")
        pending = deque()
        with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker,
                                 initargs=(cfg.as_dict(),)) as pool:
            for part in _chunks(corpus, size):
                if len(pending) >= window:
                    summary = summary.merge(pending.popleft().result())
                pending.append(pool.submit(_scan_chunk, label, bound_ids, [graph6_str(g) for g in part]))
            while pending:
                summary = summary.merge(pending.popleft().result())
    summary.violations.sort()
    for t in summary.tallies.values():
        t.tight.sort()
    if summary.violations:
        error(f"{label}: {summary.violation_count} bound violations")
    else:
        info(f"{label}: {summary.scanned} graphs, no violations")
    return summary
