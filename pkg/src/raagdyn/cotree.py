"""Cograph recognition, canonical cotrees, hierarchy levels, and verdicts.

The hierarchy classes are built from a single vertex by alternately closing
under finite joins (odd levels) and finite disjoint unions (even levels).
Recognition uses the classical recursion: a graph with at least two vertices
is a cograph iff it or its complement is disconnected, with the split parts
again cographs; a connected, co-connected graph contains an induced P4.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .graphs import (
    SimplicialGraph,
    disjoint_union,
    find_full_p3_union_pt,
    find_full_p4,
    full_subgraph,
    join,
    single_vertex,
)


class EmptyGraphError(ValueError):
    pass


class NotApplicableError(ValueError):
    """Raised when an obstruction witness is requested for a smoothable graph."""


LEAF = "leaf"
JOIN = "join"
UNION = "union"

UNCOUNTABLE_PROJECTIVE = "UncountableProjective"
COUNTABLE_WITH_FINITE_ORBIT = "CountableWithFiniteOrbit"
NO_FAITHFUL_C1BV = "NoFaithfulC1bv"


@dataclass(frozen=True)
class Cotree:
    """Join/union decomposition tree with canonical alternation.

    Internal nodes have at least two children and never a child of their own
    kind; children are ordered by their smallest leaf in parent vertex order.
    """

    kind: str
    vertex: Optional[str] = None
    children: tuple["Cotree", ...] = ()

    def __post_init__(self):
        if self.kind == LEAF:
            if self.vertex is None or self.children:
                raise ValueError("leaf must carry a vertex and no children")
        elif self.kind in (JOIN, UNION):
            if self.vertex is not None or len(self.children) < 2:
                raise ValueError(f"{self.kind} node needs >= 2 children")
            if any(c.kind == self.kind for c in self.children):
                raise ValueError(f"{self.kind} node has a child of the same kind")
        else:
            raise ValueError(f"unknown node kind {self.kind!r}")

    def leaves(self) -> list[str]:
        if self.kind == LEAF:
            return [self.vertex]
        out: list[str] = []
        for c in self.children:
            out.extend(c.leaves())
        return out

    def to_nested(self) -> list:
        if self.kind == LEAF:
            return [LEAF, self.vertex]
        return [self.kind] + [c.to_nested() for c in self.children]

    @staticmethod
    def from_nested(obj: list) -> "Cotree":
        if obj[0] == LEAF:
            return Cotree(LEAF, vertex=obj[1])
        return Cotree(obj[0], children=tuple(Cotree.from_nested(c) for c in obj[1:]))


@dataclass(frozen=True)
class NotCograph:
    """Recognition failure carrying an induced-P4 witness (a, b, c, d)."""

    p4: tuple[str, str, str, str]


def _split_components(g: SimplicialGraph, subset: list[str], complement: bool) -> list[list[str]]:
    inside = set(subset)
    unvisited = set(subset)
    comps = []
    for start in subset:
        if start not in unvisited:
            continue
        comp = []
        stack = [start]
        unvisited.discard(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            nbrs = g.neighbors(v)
            if complement:
                reach = [u for u in unvisited if u not in nbrs]
            else:
                reach = [u for u in unvisited if u in nbrs]
            for u in reach:
                unvisited.discard(u)
                stack.append(u)
        comps.append(comp)
    # order parts by first vertex in ambient order
    idx = {v: i for i, v in enumerate(g.vertices) if v in inside}
    for comp in comps:
        comp.sort(key=idx.__getitem__)
    comps.sort(key=lambda c: idx[c[0]])
    return comps


class _P4Found(Exception):
    def __init__(self, witness):
        self.witness = witness


def _decompose(g: SimplicialGraph, subset: list[str]) -> Cotree:
    if len(subset) == 1:
        return Cotree(LEAF, vertex=subset[0])
    comps = _split_components(g, subset, complement=False)
    if len(comps) > 1:
        return Cotree(UNION, children=tuple(_decompose(g, c) for c in comps))
    cocomps = _split_components(g, subset, complement=True)
    if len(cocomps) > 1:
        return Cotree(JOIN, children=tuple(_decompose(g, c) for c in cocomps))
    witness = find_full_p4(full_subgraph(g, subset))
    if witness is None:  # connected + co-connected on >= 2 vertices has a P4
        raise AssertionError("connected, co-connected subgraph without P4")
    raise _P4Found(witness)


def decompose(g: SimplicialGraph) -> Union[Cotree, NotCograph]:
    """Canonical cotree of a cograph, or a NotCograph with its P4 witness."""
    if g.n == 0:
        raise EmptyGraphError("cannot decompose the empty graph")
    try:
        return _decompose(g, list(g.vertices))
    except _P4Found as found:
        return NotCograph(found.witness)


def reconstruct(t: Cotree) -> SimplicialGraph:
    """Graph encoded by a cotree; inverse of decompose up to isomorphism."""
    if t.kind == LEAF:
        return single_vertex(t.vertex)
    parts = [reconstruct(c) for c in t.children]
    combine = join if t.kind == JOIN else disjoint_union
    out = parts[0]
    for p in parts[1:]:
        out = combine(out, p)
    return out


def hierarchy_level(t: Cotree) -> int:
    """Minimal hierarchy level of the graph encoded by the cotree.

    A leaf sits at level 0; a join needs the smallest odd level above all its
    children, a union the smallest even one.
    """
    if t.kind == LEAF:
        return 0
    m = max(hierarchy_level(c) for c in t.children)
    if t.kind == JOIN:
        return m + 1 if m % 2 == 0 else m + 2
    return m + 1 if m % 2 == 1 else m + 2


@dataclass(frozen=True)
class SmoothabilityVerdict:
    c1: bool
    c1bv: bool
    c_infinity: bool
    c_omega: bool
    circle_class: str

    def __post_init__(self):
        assert self.c1
        assert self.c_infinity == self.c1bv
        assert not self.c_omega or self.c_infinity


@dataclass(frozen=True)
class Classification:
    cograph: bool
    level: Optional[int]
    cotree: Optional[Cotree]
    p4_witness: Optional[tuple[str, str, str, str]]
    verdict: SmoothabilityVerdict


def classify(g: SimplicialGraph) -> Classification:
    """Smoothability verdict for the right-angled Artin group on g.

    Every group here acts faithfully by C^1 diffeomorphisms.  C^{1+bv} and
    C-infinity actions exist exactly at hierarchy level <= 3, analytic ones
    exactly at level <= 2.  On the circle, level <= 2 groups admit uncountably
    many semi-conjugacy classes of faithful projective actions, level 3 groups
    only finitely-supported orbits and countably many classes, and beyond
    level 3 no faithful C^{1+bv} action exists at all.
    """
    if g.n == 0:
        raise EmptyGraphError("cannot classify the empty graph")
    result = decompose(g)
    if isinstance(result, NotCograph):
        verdict = SmoothabilityVerdict(True, False, False, False, NO_FAITHFUL_C1BV)
        return Classification(False, None, None, result.p4, verdict)
    level = hierarchy_level(result)
    smooth = level <= 3
    analytic = level <= 2
    if analytic:
        circle = UNCOUNTABLE_PROJECTIVE
    elif level == 3:
        circle = COUNTABLE_WITH_FINITE_ORBIT
    else:
        circle = NO_FAITHFUL_C1BV
    verdict = SmoothabilityVerdict(True, smooth, smooth, analytic, circle)
    return Classification(True, level, result, None, verdict)


P4_CONJUGATE = "p4-conjugate"
P3_PLUS_POINT = "p3-plus-point"
TARGET_GROUP = "(F2 x Z) * Z"


@dataclass(frozen=True)
class EmbeddingWitness:
    """Four words generating (F2 x Z) * Z inside the ambient group.

    ``words`` are space-separated letter strings over vertex names.  For an
    induced P4 on (a, b, c, d) the generators are a, b, c and the conjugate
    d a d^-1; for a cograph above level 3 the four vertices of an induced
    P3-plus-point generate directly.
    """

    kind: str
    vertices: tuple[str, str, str, str]
    words: tuple[str, str, str, str]
    group: str = TARGET_GROUP


def witness(g: SimplicialGraph) -> EmbeddingWitness:
    """Obstruction witness for a graph with no faithful C^{1+bv} action."""
    cls = classify(g)
    if cls.verdict.c1bv:
        raise NotApplicableError("graph is C^{1+bv}-smoothable; no witness exists")
    if cls.p4_witness is not None:
        a, b, c, d = cls.p4_witness
        return EmbeddingWitness(
            P4_CONJUGATE, (a, b, c, d), (a, b, c, f"{d} {a} {d}^-1")
        )
    quad = find_full_p3_union_pt(g)
    if quad is None:  # every cograph above level 3 contains one
        raise AssertionError("cograph above level 3 without induced P3 + point")
    return EmbeddingWitness(P3_PLUS_POINT, quad, quad)
