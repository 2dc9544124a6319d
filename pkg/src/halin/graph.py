"""Mutable simple undirected graphs and the plain edge-list text format.

Vertices are whitespace-free strings.  Each vertex maps to an
insertion-ordered neighbor table (a ``dict`` used as an ordered set), so
adjacency tests, degree queries and edge updates are expected O(1) while
iteration order stays reproducible from run to run regardless of string
hash randomization.
"""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple

from .errors import (
    DuplicateEdge,
    GraphError,
    InvalidVertex,
    ParseError,
    PreconditionViolated,
    SelfLoop,
)

VertexId = str


class Edge(NamedTuple):
    """Unordered edge stored with its endpoints in lexicographic order."""

    u: VertexId
    v: VertexId

    @classmethod
    def of(cls, a: VertexId, b: VertexId) -> "Edge":
        if a == b:
            raise SelfLoop(f"self-loop at {a!r}")
        return cls(a, b) if a < b else cls(b, a)

    def other(self, x: VertexId) -> VertexId:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise KeyError(x)


def _check_token(v: object) -> VertexId:
    if not isinstance(v, str) or not v or any(c.isspace() for c in v):
        raise InvalidVertex(f"vertex ids must be non-empty strings without whitespace, got {v!r}")
    return v


class Graph:
    """Simple undirected graph with set semantics.

    >>> g = Graph.from_edges([("a", "b"), ("b", "c")])
    >>> g.degree("b"), g.has_edge("c", "b"), g.edge_count
    (2, True, 2)
    """

    __slots__ = ("_adj", "_edges", "_fresh")

    def __init__(self) -> None:
        self._adj: Dict[VertexId, Dict[VertexId, None]] = {}
        self._edges = 0
        self._fresh: Dict[str, int] = {}

    @classmethod
    def from_edges(cls, pairs: Iterable[Tuple[VertexId, VertexId]]) -> "Graph":
        g = cls()
        for u, v in pairs:
            _check_token(u)
            _check_token(v)
            if u == v:
                raise SelfLoop(f"self-loop at {u!r}")
            if g.has_edge(u, v):
                raise DuplicateEdge(f"edge {u} {v} listed twice")
            g.add_edge(u, v)
        return g

    # -- queries ---------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return self._edges

    def __len__(self) -> int:
        return len(self._adj)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[VertexId]:
        return iter(self._adj)

    def vertices(self) -> List[VertexId]:
        return list(self._adj)

    def neighbors(self, v: VertexId):
        """Neighbors of ``v`` in insertion order (a live view)."""
        return self._adj[v].keys()

    def degree(self, v: VertexId) -> int:
        return len(self._adj[v])

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        nbrs = self._adj.get(u)
        return nbrs is not None and v in nbrs

    def edges(self) -> List[Edge]:
        """All edges in lexicographic canonical order."""
        out = [Edge.of(u, v) for u, nbrs in self._adj.items() for v in nbrs if u < v]
        out.sort()
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        if self._adj.keys() != other._adj.keys() or self._edges != other._edges:
            return False
        return all(self._adj[v].keys() == other._adj[v].keys() for v in self._adj)

    __hash__ = None  # mutable

    def __repr__(self) -> str:
        return f"<Graph n={self.vertex_count} m={self.edge_count}>"

    # -- mutation ----------------------------------------------------------

    def add_vertex(self, v: VertexId) -> None:
        if v not in self._adj:
            self._adj[_check_token(v)] = {}

    def remove_vertex(self, v: VertexId) -> None:
        nbrs = self._adj.pop(v)
        for w in nbrs:
            del self._adj[w][v]
        self._edges -= len(nbrs)

    def add_edge(self, u: VertexId, v: VertexId) -> None:
        if u == v:
            raise SelfLoop(f"self-loop at {u!r}")
        self.add_vertex(u)
        self.add_vertex(v)
        if v in self._adj[u]:
            raise DuplicateEdge(f"edge {u} {v} already present")
        self._adj[u][v] = None
        self._adj[v][u] = None
        self._edges += 1

    def remove_edge(self, u: VertexId, v: VertexId) -> None:
        del self._adj[u][v]
        del self._adj[v][u]
        self._edges -= 1

    def copy(self) -> "Graph":
        h = Graph()
        h._adj = {v: dict(nbrs) for v, nbrs in self._adj.items()}
        h._edges = self._edges
        h._fresh = dict(self._fresh)
        return h

    def subgraph_without(self, removed: Iterable[VertexId]) -> "Graph":
        h = self.copy()
        for v in removed:
            if v in h:
                h.remove_vertex(v)
        return h

    # -- fresh ids ---------------------------------------------------------

    def peek_fresh(self, prefix: str = "t") -> VertexId:
        """Next unused id of the form ``prefix<k>``, without consuming it."""
        k = self._fresh.get(prefix, 0)
        while f"{prefix}{k}" in self._adj:
            k += 1
        self._fresh[prefix] = k
        return f"{prefix}{k}"

    def take_fresh(self, prefix: str = "t") -> VertexId:
        """Like :meth:`peek_fresh` but the id is never handed out again."""
        name = self.peek_fresh(prefix)
        self._fresh[prefix] += 1
        return name

    # -- diagnostics -------------------------------------------------------

    def validate(self) -> None:
        """Full scan of the structural invariants; raises GraphError."""
        count = 0
        for u, nbrs in self._adj.items():
            for v in nbrs:
                if v == u:
                    raise GraphError(f"self-loop at {u!r}")
                if v not in self._adj or u not in self._adj[v]:
                    raise GraphError(f"asymmetric adjacency {u!r} -> {v!r}")
            count += len(nbrs)
        if count != 2 * self._edges:
            raise GraphError(f"edge counter {self._edges} disagrees with adjacency ({count}/2)")


def build_from_edges(pairs: Iterable[Tuple[VertexId, VertexId]]) -> Graph:
    return Graph.from_edges(pairs)


def is_k4(g: Graph) -> bool:
    return g.vertex_count == 4 and g.edge_count == 6


# -- the two local rewrites ---------------------------------------------------


def outside_neighbors(g: Graph, p: VertexId, q: VertexId, r: VertexId) -> Tuple[VertexId, VertexId, VertexId]:
    """Unique neighbor of each triangle vertex outside ``{p, q, r}``."""
    out = []
    for x in (p, q, r):
        rest = [w for w in g.neighbors(x) if w != p and w != q and w != r]
        if len(rest) != 1:
            raise PreconditionViolated("degree", f"{x} has {len(rest)} neighbors outside the triangle")
        out.append(rest[0])
    return out[0], out[1], out[2]


def contract_triangle(g: Graph, p: VertexId, q: VertexId, r: VertexId, t: VertexId) -> Tuple[VertexId, VertexId, VertexId]:
    """Collapse the degree-3 triangle ``pqr`` into the new vertex ``t``.

    Returns the outside neighbors paired positionally with ``(p, q, r)``.
    """
    tri = (p, q, r)
    if len(set(tri)) != 3 or any(x not in g for x in tri):
        raise PreconditionViolated("triangle", f"{tri} are not three distinct vertices of the graph")
    for x in tri:
        if g.degree(x) != 3:
            raise PreconditionViolated("degree", f"{x} has degree {g.degree(x)}, expected 3")
    if not (g.has_edge(p, q) and g.has_edge(q, r) and g.has_edge(p, r)):
        raise PreconditionViolated("triangle", f"{tri} do not induce a triangle")
    outside = outside_neighbors(g, p, q, r)
    if len(set(outside)) != 3:
        raise PreconditionViolated("distinctness", f"outside neighbors {outside} are not distinct")
    if t in g:
        raise PreconditionViolated("freshness", f"{t} already names a vertex")
    for x in tri:
        g.remove_vertex(x)
    for w in outside:
        g.add_edge(t, w)
    return outside


def shorten_path(g: Graph, p: VertexId, q: VertexId, r: VertexId, s: VertexId) -> None:
    """Delete the middle vertex ``q`` of the induced path ``pqr`` and join ``p`` to ``r``.

    ``s`` is the apex, adjacent to all three path vertices.
    """
    quad = (p, q, r, s)
    if len(set(quad)) != 4 or any(x not in g for x in quad):
        raise PreconditionViolated("path", f"{quad} are not four distinct vertices of the graph")
    for x in (p, q, r):
        if g.degree(x) != 3:
            raise PreconditionViolated("degree", f"{x} has degree {g.degree(x)}, expected 3")
    if not (g.has_edge(p, q) and g.has_edge(q, r)) or g.has_edge(p, r):
        raise PreconditionViolated("path", f"{p} {q} {r} do not induce a path")
    if not (g.has_edge(s, p) and g.has_edge(s, q) and g.has_edge(s, r)):
        raise PreconditionViolated("apex", f"{s} is not adjacent to all of {p} {q} {r}")
    g.remove_vertex(q)
    g.add_edge(p, r)


# -- edge-list text ---------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Read whitespace-separated ``u v`` pairs; ``#`` starts a comment."""
    g = Graph()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected two vertex tokens, got {len(tokens)}", lineno)
        u, v = tokens
        if u == v:
            err: GraphError = SelfLoop(f"line {lineno}: self-loop at {u!r}")
        elif g.has_edge(u, v):
            err = DuplicateEdge(f"line {lineno}: edge {u} {v} listed twice")
        else:
            g.add_edge(u, v)
            continue
        err.lineno = lineno  # type: ignore[attr-defined]
        raise err
    return g


def serialize_edge_list(g: Graph) -> str:
    isolated = [v for v in g if g.degree(v) == 0]
    if isolated:
        raise GraphError(f"edge lists cannot carry isolated vertices: {sorted(isolated)[:5]}")
    return "".join(f"{e.u} {e.v}\n" for e in g.edges())


def read_edge_list(path: Optional[str]) -> Graph:
    """Parse a file, or standard input when ``path`` is None or ``"-"``."""
    if path is None or path == "-":
        import sys

        return parse_edge_list(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())
