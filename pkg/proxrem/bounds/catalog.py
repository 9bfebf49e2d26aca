# -*- coding: utf-8 -*-
"""The bound catalog: inequalities loaded from catalog.yaml as BoundSpec records."""

import os
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple

import yaml

from proxrem.bounds.expr import Node, parse_expr
from proxrem.util.errors import BoundCatalogError, ExpressionError, UnknownBoundError

CATALOG_FILE = os.path.join(os.path.dirname(__file__), "catalog.yaml")


class GraphClass(str, Enum):
    ANY = "any"
    TRIANGLE_FREE = "triangle_free"
    C4_FREE = "c4_free"


class Direction(str, Enum):
    LE = "<="
    GE = ">="


class BoundKind(str, Enum):
    GLOBAL = "global"
    PER_VERTEX = "per_vertex"


class Parity(str, Enum):
    ODD = "odd"
    EVEN = "even"


@dataclass(frozen=True)
class Hypotheses:
    min_n: int = 2
    min_delta: int = 1
    parity: Optional[Parity] = None
    extra: Optional[Node] = None

    def render(self) -> str:
        parts = []
        if self.min_n > 2:
            parts.append(f"n >= {self.min_n}")
        if self.min_delta > 1:
            parts.append(f"delta >= {self.min_delta}")
        if self.parity is not None:
            parts.append(f"n {self.parity.value}")
        if self.extra is not None:
            parts.append(self.extra.render())
        return ", ".join(parts) if parts else "-"


@dataclass(frozen=True)
class BoundSpec:
    id: str
    description: str
    reference: str
    class_requirement: GraphClass
    hypotheses: Hypotheses
    lhs: Node
    rhs: Node
    direction: Direction
    kind: BoundKind = BoundKind.GLOBAL
    source: Dict[str, str] = field(default_factory=dict, compare=False, hash=False)

    def render(self) -> str:
        return f"{self.lhs.render()} {self.direction.value} {self.rhs.render()}"


_HYP_KEYS = {"min_n", "min_delta", "parity", "extra"}


def _parse_entry(raw: dict, macros: Dict[str, Node]) -> BoundSpec:
    bid = raw.get("id")
    if not bid:
        raise BoundCatalogError(f"catalog entry without id: {raw}")
    try:
        hyp_raw = raw.get("hypotheses") or {}
        unknown = set(hyp_raw) - _HYP_KEYS
        if unknown:
            raise BoundCatalogError(f"bound '{bid}': unknown hypothesis keys {sorted(unknown)}")
        hyp = Hypotheses(
            min_n=int(hyp_raw.get("min_n", 2)),
            min_delta=int(hyp_raw.get("min_delta", 1)),
            parity=Parity(hyp_raw["parity"]) if hyp_raw.get("parity") else None,
            extra=parse_expr(hyp_raw["extra"], macros, allow_compare=True) if hyp_raw.get("extra") else None,
        )
        return BoundSpec(
            id=bid,
            description=raw.get("description", ""),
            reference=raw.get("reference", ""),
            class_requirement=GraphClass(raw.get("class", "any")),
            hypotheses=hyp,
            lhs=parse_expr(raw["lhs"], macros),
            rhs=parse_expr(raw["rhs"], macros),
            direction=Direction(raw["direction"]),
            kind=BoundKind(raw.get("kind", "global")),
            source={"lhs": raw["lhs"], "rhs": raw["rhs"]},
        )
    except (KeyError, ValueError, ExpressionError) as e:
        raise BoundCatalogError(f"bound '{bid}' is malformed: {e}") from e


def load_catalog(path: str = CATALOG_FILE) -> Tuple[BoundSpec, ...]:
    with open(path, "r", encoding="utf-8") as f:
        data = yaml.safe_load(f) or {}
    macros: Dict[str, Node] = {}
    for name, text in (data.get("macros") or {}).items():
        macros[name] = parse_expr(text, macros)
    specs = tuple(_parse_entry(raw, macros) for raw in data.get("bounds") or [])
    ids = [b.id for b in specs]
    dup = {i for i in ids if ids.count(i) > 1}
    if dup:
        raise BoundCatalogError(f"duplicate bound ids: {sorted(dup)}")
    return specs


@lru_cache(maxsize=1)
def catalog() -> Tuple[BoundSpec, ...]:
    """Every catalog bound, in file order."""
    return load_catalog()


def catalog_ids() -> List[str]:
    return [b.id for b in catalog()]


def get_bound(bound_id: str) -> BoundSpec:
    for b in catalog():
        if b.id == bound_id:
            return b
    raise UnknownBoundError(f"unknown bound id '{bound_id}', known ids: {', '.join(catalog_ids())}")


def select_bounds(ids: Optional[Iterable[str]] = None) -> Tuple[BoundSpec, ...]:
    """The requested bounds in catalog order; None or empty means all."""
    if not ids:
        return catalog()
    wanted = list(dict.fromkeys(ids))
    for i in wanted:
        get_bound(i)
    return tuple(b for b in catalog() if b.id in wanted)


def render_catalog_table() -> str:
    rows = [("id", "class", "hypotheses", "inequality")]
    for b in catalog():
        rows.append((b.id, b.class_requirement.value, b.hypotheses.render(), b.render()))
    widths = [max(len(r[i]) for r in rows) for i in range(3)]
    lines = []
    for r in rows:
        lines.append("  ".join(r[i].ljust(widths[i]) for i in range(3)) + "  " + r[3])
    return "\n".join(lines)
