"""Worklist reduction by the two degree-3 rules, with veto/observer hooks.

A *triangle* reduction (D3a) collapses a triangle of degree-3 vertices whose
outside neighbors are distinct into one new vertex.  A *path* reduction (D3b)
deletes the middle vertex of an induced path of three degree-3 vertices that
share an apex and joins the path's ends.

:func:`reduce` drives both rules from a FIFO candidate queue.  Each
configuration it finds is offered to the hook lists of a :class:`HookSet`
before being applied, which is how the class recognizers in
:mod:`halin.recognize` restrict or observe the process.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Callable, Deque, Iterator, List, NamedTuple, Optional, Set, Tuple

from .graph import Graph, VertexId, contract_triangle, shorten_path

D3A = "D3a"
D3B = "D3b"


@dataclass(frozen=True)
class ReductionEvent:
    """One application (or candidate application) of a reduction rule.

    For ``D3a``: ``(p, q, r)`` is the triangle, ``outside`` holds each
    triangle vertex's outside neighbor in the same positions, and ``t`` names
    the vertex that replaces the triangle.  For ``D3b``: ``(p, q, r)`` is the
    path with ``q`` in the middle and ``apex`` the shared neighbor.
    """

    kind: str
    p: VertexId
    q: VertexId
    r: VertexId
    outside: Optional[Tuple[VertexId, VertexId, VertexId]] = None
    t: Optional[VertexId] = None
    apex: Optional[VertexId] = None

    @property
    def triangle(self) -> Tuple[VertexId, VertexId, VertexId]:
        return (self.p, self.q, self.r)

    def removed(self) -> Tuple[VertexId, ...]:
        return self.triangle if self.kind == D3A else (self.q,)

    def __str__(self) -> str:
        if self.kind == D3A:
            return f"D3a {self.p} {self.q} {self.r} -> {self.t}"
        return f"D3b {self.p} {self.q} {self.r} apex {self.apex}"


TriangleHook = Callable[[Graph, ReductionEvent], bool]
PathHook = Callable[[Graph, ReductionEvent], bool]


def _identity(g: Graph) -> Graph:
    return g


@dataclass
class HookSet:
    """Callbacks consulted by :func:`reduce`.

    Hooks run in list order just before a reduction is applied, and the
    first one returning a false value vetoes it; later hooks are then not
    called.  ``finalizer`` maps the irreducible graph to the run's verdict.
    """

    triangle_hooks: List[TriangleHook] = field(default_factory=list)
    path_hooks: List[PathHook] = field(default_factory=list)
    finalizer: Callable[[Graph], Any] = _identity


@dataclass
class ReductionTrace:
    events: List[ReductionEvent]
    initial_vertex_count: int
    final_graph: Graph
    queue_insertions: int = 0
    vetoes: int = 0

    def lines(self) -> List[str]:
        return [str(ev) for ev in self.events]

    def to_dot(self, name: str = "trace") -> str:
        """Digraph of vertex merges: removed vertices point at their successor.

        A D3a step draws ``p, q, r -> t``; a D3b step draws ``q -> apex``
        (the apex inherits the face that ``q`` occupied) together with an
        undirected-style ``p -> r`` edge for the new path edge.
        """
        out = [f"digraph {name} {{"]
        for i, ev in enumerate(self.events):
            if ev.kind == D3A:
                for x in ev.triangle:
                    out.append(f'  "{x}" -> "{ev.t}" [label="{i}:D3a"];')
            else:
                out.append(f'  "{ev.q}" -> "{ev.apex}" [label="{i}:D3b"];')
                out.append(f'  "{ev.p}" -> "{ev.r}" [label="{i}:edge", dir=none, style=dashed];')
        out.append("}")
        return "\n".join(out) + "\n"


class ReductionResult(NamedTuple):
    final: Graph
    trace: ReductionTrace
    verdict: Any


class CandidateQueue:
    """FIFO of vertices with O(1) deduplication."""

    def __init__(self) -> None:
        self.pending: Deque[VertexId] = deque()
        self.membership: Set[VertexId] = set()
        self.insertions = 0

    def push(self, v: VertexId) -> None:
        if v not in self.membership:
            self.membership.add(v)
            self.pending.append(v)
            self.insertions += 1

    def pop(self) -> VertexId:
        v = self.pending.popleft()
        self.membership.discard(v)
        return v

    def __bool__(self) -> bool:
        return bool(self.pending)

    def __len__(self) -> int:
        return len(self.pending)


# -- local search ---------------------------------------------------------------


def _triangle_events(g: Graph, v: VertexId) -> Iterator[ReductionEvent]:
    nbrs = list(g.neighbors(v))
    for a, b in itertools.combinations(nbrs, 2):
        if g.degree(a) != 3 or g.degree(b) != 3 or not g.has_edge(a, b):
            continue
        (ov,) = [w for w in nbrs if w != a and w != b]
        (oa,) = [w for w in g.neighbors(a) if w != v and w != b]
        (ob,) = [w for w in g.neighbors(b) if w != v and w != a]
        if ov == oa or oa == ob or ov == ob:
            continue
        tri = sorted(((v, ov), (a, oa), (b, ob)))
        yield ReductionEvent(
            D3A, tri[0][0], tri[1][0], tri[2][0],
            outside=(tri[0][1], tri[1][1], tri[2][1]),
            t=g.peek_fresh("t"),
        )


def _path_events_at_middle(g: Graph, q: VertexId) -> Iterator[ReductionEvent]:
    nbrs = list(g.neighbors(q))
    for a, b in itertools.combinations(nbrs, 2):
        if g.degree(a) != 3 or g.degree(b) != 3 or g.has_edge(a, b):
            continue
        (s,) = [w for w in nbrs if w != a and w != b]
        if g.has_edge(s, a) and g.has_edge(s, b):
            p, r = (a, b) if a < b else (b, a)
            yield ReductionEvent(D3B, p, q, r, apex=s)


def iter_reductions_at(g: Graph, v: VertexId) -> Iterator[ReductionEvent]:
    """All reductions involving ``v``, triangle reductions first.

    Only the degree-3 vertices within distance two of ``v`` are inspected,
    so the work is bounded by a constant.  Path reductions with ``v`` as the
    middle vertex come before those with ``v`` as an endpoint.
    """
    if v not in g or g.degree(v) != 3:
        return
    yield from _triangle_events(g, v)
    yield from _path_events_at_middle(g, v)
    for q in list(g.neighbors(v)):
        if g.degree(q) == 3:
            for ev in _path_events_at_middle(g, q):
                if v == ev.p or v == ev.r:
                    yield ev


def find_reduction_at(g: Graph, v: VertexId) -> Optional[ReductionEvent]:
    return next(iter_reductions_at(g, v), None)


def is_irreducible(g: Graph) -> bool:
    return all(find_reduction_at(g, v) is None for v in g)


def apply_event(g: Graph, ev: ReductionEvent) -> None:
    """Apply ``ev`` to ``g`` in place (preconditions re-checked)."""
    if ev.kind == D3A:
        if ev.t is None:
            raise ValueError("triangle event has no replacement vertex")
        outside = contract_triangle(g, ev.p, ev.q, ev.r, ev.t)
        if ev.outside is not None and outside != ev.outside:
            raise ValueError(f"event pairing {ev.outside} disagrees with graph {outside}")
    else:
        shorten_path(g, ev.p, ev.q, ev.r, ev.apex)


def _allowed(hooks: List[Callable[[Graph, ReductionEvent], bool]], g: Graph, ev: ReductionEvent) -> bool:
    for hook in hooks:
        if not hook(g, ev):
            return False
    return True


def _push_cubic(g: Graph, queue: CandidateQueue, v: VertexId, with_neighbors: bool) -> None:
    if v not in g or g.degree(v) != 3:
        return
    queue.push(v)
    if with_neighbors:
        for w in g.neighbors(v):
            if g.degree(w) == 3:
                queue.push(w)


def reduce(g: Graph, hooks: Optional[HookSet] = None) -> ReductionResult:
    """Reduce a private copy of ``g`` until no allowed reduction remains.

    After a triangle reduction the new vertex and its degree-3 neighbors are
    requeued; after a path reduction every degree-3 vertex among the path
    ends and the apex is requeued together with its degree-3 neighbors.
    A vetoed configuration is only reconsidered when one of its vertices is
    requeued by a later reduction.
    """
    hooks = hooks if hooks is not None else HookSet()
    work = g.copy()
    queue = CandidateQueue()
    for v in work:
        if work.degree(v) == 3:
            queue.push(v)
    events: List[ReductionEvent] = []
    vetoes = 0

    while queue:
        v = queue.pop()
        for ev in iter_reductions_at(work, v):
            if ev.kind == D3A:
                if not _allowed(hooks.triangle_hooks, work, ev):
                    vetoes += 1
                    continue
                work.take_fresh("t")
                apply_event(work, ev)
                _push_cubic(work, queue, ev.t, with_neighbors=True)
            else:
                if not _allowed(hooks.path_hooks, work, ev):
                    vetoes += 1
                    continue
                apply_event(work, ev)
                for x in (ev.p, ev.r, ev.apex):
                    _push_cubic(work, queue, x, with_neighbors=True)
            events.append(ev)
            break

    trace = ReductionTrace(
        events=events,
        initial_vertex_count=g.vertex_count,
        final_graph=work,
        queue_insertions=queue.insertions,
        vetoes=vetoes,
    )
    return ReductionResult(work, trace, hooks.finalizer(work))
