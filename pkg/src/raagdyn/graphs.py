"""Finite simplicial graphs: full subgraphs, join/union constructors, P3/P4 search.

Vertices are opaque strings kept in a fixed order; that order is what makes
pattern searches and serialization deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional


class GraphError(ValueError):
    pass


class UnknownVertexError(GraphError):
    pass


class GraphParseError(GraphError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class SimplicialGraph:
    """Finite loopless undirected graph.

    ``vertices`` is an ordered tuple of distinct identifiers; ``edges`` holds
    pairs (u, v) with u before v in vertex order.  Instances are immutable and
    all operations on them are pure.
    """

    vertices: tuple[str, ...]
    edges: frozenset[tuple[str, str]]

    def __post_init__(self):
        seen = set(self.vertices)
        if len(seen) != len(self.vertices):
            raise GraphError("duplicate vertex identifiers")
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"loop at vertex {u!r}")
            if u not in seen or v not in seen:
                raise GraphError(f"edge ({u!r}, {v!r}) mentions unknown vertex")

    @staticmethod
    def build(vertices: Iterable[str], edges: Iterable[tuple[str, str]]) -> "SimplicialGraph":
        """Construct with edges normalized to vertex order and deduplicated."""
        vs = tuple(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        norm = set()
        for u, v in edges:
            if u not in pos or v not in pos:
                raise GraphError(f"edge ({u!r}, {v!r}) mentions unknown vertex")
            if u == v:
                raise GraphError(f"loop at vertex {u!r}")
            norm.add((u, v) if pos[u] < pos[v] else (v, u))
        return SimplicialGraph(vs, frozenset(norm))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _adjacency(self) -> dict[str, frozenset[str]]:
        nbrs: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {v!r}") from None

    def adjacent(self, u: str, v: str) -> bool:
        return v in self._adjacency[u]

    def neighbors(self, v: str) -> frozenset[str]:
        return self._adjacency[v]

    def sorted_edges(self) -> list[tuple[str, str]]:
        idx = self._index
        return sorted(self.edges, key=lambda e: (idx[e[0]], idx[e[1]]))


def single_vertex(name: str = "v") -> SimplicialGraph:
    return SimplicialGraph.build([name], [])


def edgeless_graph(names: Iterable[str]) -> SimplicialGraph:
    return SimplicialGraph.build(names, [])


def complete_graph(names: Iterable[str]) -> SimplicialGraph:
    vs = tuple(names)
    return SimplicialGraph.build(vs, itertools.combinations(vs, 2))


def path_graph(names: Iterable[str]) -> SimplicialGraph:
    vs = tuple(names)
    return SimplicialGraph.build(vs, zip(vs, vs[1:]))


def cycle_graph(names: Iterable[str]) -> SimplicialGraph:
    vs = tuple(names)
    if len(vs) < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return SimplicialGraph.build(vs, list(zip(vs, vs[1:])) + [(vs[-1], vs[0])])


def full_subgraph(g: SimplicialGraph, s: Iterable[str]) -> SimplicialGraph:
    """Subgraph induced by ``s``: keeps exactly the edges of g inside s."""
    keep = set(s)
    for v in keep:
        if v not in g._index:
            raise UnknownVertexError(f"unknown vertex {v!r}")
    vs = tuple(v for v in g.vertices if v in keep)
    es = [e for e in g.edges if e[0] in keep and e[1] in keep]
    return SimplicialGraph.build(vs, es)


def _resolve_collisions(g1: SimplicialGraph, g2: SimplicialGraph) -> SimplicialGraph:
    # Deterministic renaming: prefix every g2 vertex with "g2/" until disjoint.
    taken = set(g1.vertices)
    rename = {v: v for v in g2.vertices}
    while any(name in taken for name in rename.values()):
        rename = {v: "g2/" + name for v, name in rename.items()}
    if all(rename[v] == v for v in g2.vertices):
        return g2
    return SimplicialGraph.build(
        [rename[v] for v in g2.vertices],
        [(rename[u], rename[v]) for u, v in g2.edges],
    )


def disjoint_union(g1: SimplicialGraph, g2: SimplicialGraph) -> SimplicialGraph:
    g2 = _resolve_collisions(g1, g2)
    return SimplicialGraph.build(
        g1.vertices + g2.vertices, list(g1.edges) + list(g2.edges)
    )


def join(g1: SimplicialGraph, g2: SimplicialGraph) -> SimplicialGraph:
    """Disjoint union plus every cross edge."""
    g2 = _resolve_collisions(g1, g2)
    cross = [(u, v) for u in g1.vertices for v in g2.vertices]
    return SimplicialGraph.build(
        g1.vertices + g2.vertices, list(g1.edges) + list(g2.edges) + cross
    )


def find_full_p4(g: SimplicialGraph) -> Optional[tuple[str, str, str, str]]:
    """Lexicographically least induced path on four vertices, or None.

    The result (a, b, c, d) spans edges ab, bc, cd and nothing else; the
    witness comes from the first 4-subset in vertex order that induces a path,
    oriented so the first endpoint precedes the last.
    """
    for quad in itertools.combinations(g.vertices, 4):
        path = _as_induced_path4(g, quad)
        if path is not None:
            return path
    return None


def _as_induced_path4(g, quad) -> Optional[tuple[str, str, str, str]]:
    inside = [
        (u, v) for u, v in itertools.combinations(quad, 2) if g.adjacent(u, v)
    ]
    if len(inside) != 3:
        return None
    deg = {v: 0 for v in quad}
    for u, v in inside:
        deg[u] += 1
        deg[v] += 1
    ends = [v for v in quad if deg[v] == 1]
    if len(ends) != 2 or any(deg[v] != 2 for v in quad if v not in ends):
        return None
    # 3 edges with degree pattern (1,1,2,2) is exactly an induced P4.
    a = min(ends, key=g.index)
    d = ends[0] if ends[1] == a else ends[1]
    b = next(v for v in quad if v != a and g.adjacent(a, v))
    c = next(v for v in quad if v not in (a, b) and g.adjacent(b, v))
    return (a, b, c, d)


def find_full_p3(g: SimplicialGraph) -> Optional[tuple[str, str, str]]:
    """Least induced path on three vertices; None iff g is a union of cliques."""
    for trip in itertools.combinations(g.vertices, 3):
        inside = [
            (u, v) for u, v in itertools.combinations(trip, 2) if g.adjacent(u, v)
        ]
        if len(inside) != 2:
            continue
        counts = {v: 0 for v in trip}
        for u, v in inside:
            counts[u] += 1
            counts[v] += 1
        mid = next(v for v in trip if counts[v] == 2)
        ends = sorted((v for v in trip if v != mid), key=g.index)
        return (ends[0], mid, ends[1])
    return None


def find_full_p3_union_pt(g: SimplicialGraph) -> Optional[tuple[str, str, str, str]]:
    """Least 4-tuple (end, mid, end, isolated) inducing a P3 plus a lone vertex."""
    for quad in itertools.combinations(g.vertices, 4):
        inside = [
            (u, v) for u, v in itertools.combinations(quad, 2) if g.adjacent(u, v)
        ]
        if len(inside) != 2:
            continue
        counts = {v: 0 for v in quad}
        for u, v in inside:
            counts[u] += 1
            counts[v] += 1
        if sorted(counts.values()) != [0, 1, 1, 2]:
            continue
        mid = next(v for v in quad if counts[v] == 2)
        iso = next(v for v in quad if counts[v] == 0)
        ends = sorted((v for v in quad if counts[v] == 1), key=g.index)
        return (ends[0], mid, ends[1], iso)
    return None


# ---------------------------------------------------------------------------
# Text formats: plain edge lists and a small undirected DOT subset.


def parse_edge_list(text: str) -> SimplicialGraph:
    """Parse "u v" edge lines and "vertex u" declarations.

    Blank lines and lines starting with "#" are skipped.  Vertices appear in
    first-mention order.
    """
    order: list[str] = []
    seen: set[str] = set()
    edges: list[tuple[str, str]] = []

    def declare(v: str):
        if v not in seen:
            seen.add(v)
            order.append(v)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "vertex":
            if len(tokens) != 2:
                raise GraphParseError("expected 'vertex NAME'", lineno)
            declare(tokens[1])
        elif len(tokens) == 2:
            u, v = tokens
            if u == v:
                raise GraphParseError(f"loop at vertex {u!r}", lineno)
            declare(u)
            declare(v)
            edges.append((u, v))
        else:
            raise GraphParseError(f"cannot parse {line!r}", lineno)
    return SimplicialGraph.build(order, edges)


def format_edge_list(g: SimplicialGraph) -> str:
    lines = [f"vertex {v}" for v in g.vertices]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_dot(text: str) -> SimplicialGraph:
    """Parse an undirected DOT graph without attributes: names, "--" edges."""
    stripped = []
    for raw in text.splitlines():
        if "//" in raw:
            raw = raw.split("//", 1)[0]
        stripped.append(raw)
    tokens = (
        "\n".join(stripped)
        .replace("{", " { ")
        .replace("}", " } ")
        .replace(";", " ; ")
        .replace("--", " -- ")
        .split()
    )
    i = 0
    if i < len(tokens) and tokens[i] == "strict":
        i += 1
    if i >= len(tokens) or tokens[i] != "graph":
        raise GraphParseError("expected 'graph' keyword")
    i += 1
    if i < len(tokens) and tokens[i] != "{":
        i += 1  # optional graph name
    if i >= len(tokens) or tokens[i] != "{":
        raise GraphParseError("expected '{'")
    i += 1

    order: list[str] = []
    seen: set[str] = set()
    edges: list[tuple[str, str]] = []

    def declare(v: str):
        if v in ("{", "}", ";", "--"):
            raise GraphParseError(f"unexpected token {v!r}")
        if v not in seen:
            seen.add(v)
            order.append(v)

    while i < len(tokens) and tokens[i] != "}":
        if tokens[i] == ";":
            i += 1
            continue
        u = tokens[i]
        declare(u)
        i += 1
        while i < len(tokens) and tokens[i] == "--":
            if i + 1 >= len(tokens):
                raise GraphParseError("dangling '--'")
            v = tokens[i + 1]
            declare(v)
            if u == v:
                raise GraphParseError(f"loop at vertex {u!r}")
            edges.append((u, v))
            u = v
            i += 2
    if i >= len(tokens):
        raise GraphParseError("missing closing '}'")
    return SimplicialGraph.build(order, edges)


def format_dot(g: SimplicialGraph) -> str:
    lines = ["graph G {"]
    lines += [f"  {v};" for v in g.vertices]
    lines += [f"  {u} -- {v};" for u, v in g.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_graph(text: str) -> SimplicialGraph:
    """Dispatch on content: DOT if it starts with graph/strict, else edge list."""
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        first = line.split()[0]
        if first in ("graph", "strict"):
            return parse_dot(text)
        break
    return parse_edge_list(text)
