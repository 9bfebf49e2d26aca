# -*- coding: utf-8 -*-
"""Polarity graphs of projective planes over GF(q) and the chains built from them.

Vertices of H_q are the projective points of GF(q)^3 in lexicographic
order of their normalized coordinates; two points are adjacent when their
standard dot product vanishes. Self-orthogonal (isotropic) points carry no
loop.
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import numpy as np

from proxrem.checkers import (C4FreeClaim, Checker, ConnectedClaim, DegreeSplitClaim, DiameterClaim,
                              DistanceAtLeastClaim, MinDegreeClaim, OrderClaim, RadiusClaim,
                              RecordClaim, Subject, ValidationNote, run_checkers)
from proxrem.constructions.field import FieldSpec
from proxrem.graph.core import Graph, disjoint_union_with_links, from_edge_list
from proxrem.util.errors import ConstructionIntegrityError, FamilyError
from proxrem.util.log import warning


@dataclass(frozen=True, order=True)
class ProjectivePoint:
    """Normalized homogeneous coordinates: the first nonzero entry is 1."""

    coords: Tuple[int, int, int]

    @classmethod
    def normalize(cls, f: FieldSpec, coords: Sequence[int]) -> "ProjectivePoint":
        coords = tuple(int(c) for c in coords)
        lead = next((c for c in coords if c != 0), None)
        if lead is None:
            raise ValueError("the zero vector is not a projective point")
        s = f.inv(lead)
        return cls(tuple(f.mul(s, c) for c in coords))

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@lru_cache(maxsize=None)
def _points(f: FieldSpec) -> Tuple[ProjectivePoint, ...]:
    pts = []
    for c in itertools.product(range(f.q), repeat=3):
        lead = next((x for x in c if x != 0), None)
        if lead == 1:
            pts.append(ProjectivePoint(c))
    return tuple(pts)


def projective_points(f: FieldSpec) -> List[ProjectivePoint]:
    """The q^2 + q + 1 points of the projective plane, sorted; list index = vertex id."""
    return list(_points(f))


def _dot_matrix(f: FieldSpec, P: np.ndarray, Q: np.ndarray) -> np.ndarray:
    mul, add = f.mul_table, f.add_table
    terms = [mul[P[:, k][:, None], Q[:, k][None, :]] for k in range(3)]
    return add[add[terms[0], terms[1]], terms[2]]


def _point_array(f: FieldSpec) -> np.ndarray:
    return np.asarray([p.coords for p in _points(f)], dtype=np.int64)


def isotropic_points(f: FieldSpec) -> List[int]:
    """Vertex ids of the self-orthogonal points."""
    P = _point_array(f)
    diag = np.diagonal(_dot_matrix(f, P, P))
    return [int(i) for i in np.flatnonzero(diag == 0)]


@lru_cache(maxsize=None)
def _polarity(f: FieldSpec) -> Graph:
    P = _point_array(f)
    ortho = _dot_matrix(f, P, P) == 0
    return from_edge_list(P.shape[0], np.argwhere(np.triu(ortho, k=1)))


def polarity_checks(f: FieldSpec) -> List[Checker]:
    q = f.q
    return [OrderClaim(q * q + q + 1), DegreeSplitClaim(q, isotropic_points(f)), C4FreeClaim()]


def polarity_graph(f: FieldSpec, validate: bool = True) -> Graph:
    """H_q, validated for its order, degree split and C4-freeness."""
    g = _polarity(f)
    if validate:
        run_checkers(polarity_checks(f), Subject(g), f"H_{f.q}")
    return g


@dataclass(frozen=True)
class PuncturedPolarity:
    """H_q' = H_q - z - M, with u, v renumbered into the punctured graph."""

    q: int
    graph: Graph
    u: int
    v: int
    removed_vertex: int                 # id of z in H_q
    removed_matching: Tuple[Tuple[int, int], ...]   # edges of M, H_q ids
    points: Tuple[ProjectivePoint, ...]  # coordinates of the H_q' vertices
    notes: Tuple[ValidationNote, ...] = field(default=(), compare=False)
    advisory: bool = False
    subject: Optional[Subject] = field(default=None, compare=False, repr=False)

    @property
    def order(self) -> int:
        return self.graph.order


def _select_zuv(f: FieldSpec, h: Graph, iso: List[int]) -> Tuple[int, int, int]:
    if not iso:
        raise ConstructionIntegrityError("isotropic point exists", ">= 1", 0)
    z = iso[0]
    iso_set = set(iso)
    cand = [w for w in h.adjacency[z] if w not in iso_set]
    for u, v in itertools.combinations(cand, 2):
        if not h.has_edge(u, v):
            return z, u, v
    raise ConstructionIntegrityError("non-adjacent non-isotropic neighbor pair of z",
                                     "a pair", f"{len(cand)} candidates, none valid")


def _matching(h: Graph, z: int, u: int, v: int) -> List[Tuple[int, int]]:
    side_u = [x for x in h.adjacency[u] if x != z]
    side_v = set(x for x in h.adjacency[v] if x != z)
    M = [(x, y) for x in side_u for y in h.adjacency[x] if y in side_v]
    hit_u = [x for x, _ in M]
    hit_v = [y for _, y in M]
    perfect = (len(side_u) == len(side_v) == len(M)
               and len(set(hit_u)) == len(side_u) and len(set(hit_v)) == len(side_v))
    if not perfect:
        raise ConstructionIntegrityError("M is a perfect matching between N(u)-z and N(v)-z",
                                         f"{len(side_u)} disjoint edges", f"{len(M)} edges")
    return M


def puncture(f: FieldSpec, validate: bool = True) -> PuncturedPolarity:
    """Remove an isotropic z and the matching M between N(u)-z and N(v)-z from H_q.

    z is the first isotropic point; u < v are the first two neighbors of z
    that are non-isotropic and mutually non-adjacent. For q = 2 the result
    is disconnected, so its claims only produce advisory notes.
    """
    q = f.q
    h = polarity_graph(f, validate=validate)
    iso = isotropic_points(f)
    z, u, v = _select_zuv(f, h, iso)
    M = _matching(h, z, u, v)
    drop = set((min(a, b), max(a, b)) for a, b in M)
    keep = [(a, b) for a, b in h.edges() if a != z and b != z and (a, b) not in drop]

    def shift(x):
        return x - 1 if x > z else x

    g = from_edge_list(h.order - 1, [(shift(a), shift(b)) for a, b in keep])
    pts = tuple(p for i, p in enumerate(_points(f)) if i != z)
    advisory = q < 3
    if advisory:
        warning(f"H_{q}' with q < 3 is degenerate, its claims are advisory")
    notes: Tuple[ValidationNote, ...] = ()
    subject = Subject(g)
    if validate:
        su, sv = shift(u), shift(v)
        notes = tuple(run_checkers([
            OrderClaim(q * q + q, advisory),
            MinDegreeClaim(q - 1, advisory),
            ConnectedClaim(advisory),
            DistanceAtLeastClaim(su, sv, 4, advisory),
            DiameterClaim(4, advisory),
            C4FreeClaim(advisory),
        ], subject, f"H_{q}'"))
    return PuncturedPolarity(q=q, graph=g, u=shift(u), v=shift(v), removed_vertex=z,
                             removed_matching=tuple(sorted(drop)), points=pts,
                             notes=notes, advisory=advisory, subject=subject)


@dataclass(frozen=True)
class PolarityChain:
    q: int
    k: int
    graph: Graph
    offsets: Tuple[int, ...]
    ends: Tuple[Tuple[int, int], ...]   # (u_i, v_i) per copy in chain numbering
    notes: Tuple[ValidationNote, ...] = field(default=(), compare=False)
    subject: Optional[Subject] = field(default=None, compare=False, repr=False)


def build_chain(f: FieldSpec, k: int, validate: bool = True, workers: Optional[int] = None) -> PolarityChain:
    """H_{q,k}: k copies of H_q' joined by the edges v_i u_{i+1}."""
    if k < 2:
        raise FamilyError(f"H_(q,k) needs k >= 2 copies, got {k}")
    base = puncture(f, validate=validate)
    q = f.q
    links = [(i, base.v, i + 1, base.u) for i in range(k - 1)]
    g, offsets = disjoint_union_with_links([base.graph] * k, links)
    ends = tuple((off + base.u, off + base.v) for off in offsets)
    subject = Subject(g, workers)
    notes: List[ValidationNote] = []
    if validate:
        adv = base.advisory
        checks = [OrderClaim(k * (q * q + q), adv), MinDegreeClaim(q - 1, adv),
                  ConnectedClaim(adv), C4FreeClaim(adv)]
        even = k % 2 == 0
        # diameter and radius formulas assume an even number of copies
        checks += [DiameterClaim(5 * k - 1, adv or not even),
                   RadiusClaim(Fraction(5 * k, 2), adv or not even)]
        checks += [RecordClaim("proximity / k", lambda s: s.report.proximity / k, Fraction(5, 4)),
                   RecordClaim("remoteness / k", lambda s: s.report.remoteness / k, Fraction(5, 2))]
        delta = q - 1
        if delta >= 1:
            ratio = Fraction(delta * delta - 2 * (delta // 2) + 1, delta * delta + 3 * delta + 2)
            checks.append(RecordClaim("n-coefficient ratio, bound vs family", lambda s: ratio))
        notes = run_checkers(checks, subject, f"H_{q},{k}")
    return PolarityChain(q=q, k=k, graph=g, offsets=tuple(offsets), ends=ends,
                         notes=tuple(base.notes) + tuple(notes), subject=subject)


def chain(f: FieldSpec, k: int) -> Graph:
    """H_{q,k} as a validated graph."""
    return build_chain(f, k).graph
