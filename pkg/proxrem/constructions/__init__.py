# -*- coding: utf-8 -*-
"""Extremal graph families, addressable by name."""

from dataclasses import dataclass, field as dc_field
from typing import Any, Dict, List, Optional, Tuple

from proxrem.checkers import Subject, ValidationNote, run_checkers
from proxrem.graph.core import BasicKind, Graph, basic_generator, complete_bipartite, petersen
from proxrem.graph.metrics import InvariantReport
from proxrem.util.errors import FamilyError

from .field import FieldSpec, make_field, BUILTIN_MODULI, MAX_FIELD_ORDER
from .polarity import (ProjectivePoint, PuncturedPolarity, PolarityChain, projective_points,
                       isotropic_points, polarity_checks, polarity_graph, puncture, build_chain, chain)
from .layered import (LayeredConstruction, layered_plan, build_layered, build_layered_padded,
                      layered_extremal, layered_extremal_padded)


@dataclass(frozen=True)
class Construction:
    """A built graph together with its validation notes and cached invariants."""

    family: str
    params: Dict[str, Any]
    graph: Graph
    notes: Tuple[ValidationNote, ...] = ()
    subject: Optional[Subject] = dc_field(default=None, compare=False, repr=False)

    @property
    def report(self) -> InvariantReport:
        """Invariant report with the class flags filled in."""
        return self.subject.annotated_report

    @property
    def label(self) -> str:
        args = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.family}({args})"


# family name -> required parameters
FAMILIES: Dict[str, Tuple[str, ...]] = {
    "layered": ("delta", "k"),
    "layered-padded": ("delta", "k", "n"),
    "polarity": ("q",),
    "puncture": ("q",),
    "chain": ("q", "k"),
    "path": ("n",),
    "cycle": ("n",),
    "complete": ("n",),
    "complete-bipartite": ("a", "b"),
    "petersen": (),
}


def family_names() -> List[str]:
    return list(FAMILIES.keys())


def _require(name: str, params: Dict[str, Any]) -> Dict[str, int]:
    missing = [p for p in FAMILIES[name] if params.get(p) is None]
    if missing:
        raise FamilyError(f"family '{name}' needs parameter(s): "
                          + ", ".join("--" + p for p in missing))
    return {p: int(params[p]) for p in FAMILIES[name]}


def build_family(name: str, workers: Optional[int] = None, validate: bool = True, **params) -> Construction:
    """Build a named family; construction claims are validated unless validate is False."""
    if name not in FAMILIES:
        raise FamilyError(f"unknown family '{name}', choose from: {', '.join(family_names())}")
    p = _require(name, params)
    if name == "layered":
        lc = build_layered(p["delta"], p["k"], validate=validate, workers=workers)
        return Construction(name, p, lc.graph, lc.notes, lc.subject)
    if name == "layered-padded":
        lc = build_layered_padded(p["delta"], p["k"], p["n"], validate=validate, workers=workers)
        return Construction(name, p, lc.graph, lc.notes, lc.subject)
    if name == "polarity":
        f = make_field(p["q"])
        g = polarity_graph(f, validate=False)
        subject = Subject(g, workers)
        notes = run_checkers(polarity_checks(f), subject, f"H_{f.q}") if validate else []
        return Construction(name, p, g, tuple(notes), subject)
    if name == "puncture":
        pp = puncture(make_field(p["q"]), validate=validate)
        return Construction(name, p, pp.graph, pp.notes, pp.subject)
    if name == "chain":
        pc = build_chain(make_field(p["q"]), p["k"], validate=validate, workers=workers)
        return Construction(name, p, pc.graph, pc.notes, pc.subject)
    if name in (BasicKind.PATH.value, BasicKind.CYCLE.value, BasicKind.COMPLETE.value):
        g = basic_generator(name, p["n"])
    elif name == "complete-bipartite":
        g = complete_bipartite(p["a"], p["b"])
    else:
        g = petersen()
    return Construction(name, p, g, (), Subject(g, workers))
