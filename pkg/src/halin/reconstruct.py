"""Certificates obtained by replaying a reduction trace backwards.

Every reconstructor starts from a fixed structure on the final ``K4`` (its
four vertices taken in lexicographic order) and undoes the recorded
reductions one at a time, updating the structure in O(1) per step.  The
result is checked against the input graph before it is returned, so a logic
error surfaces as an ``AssertionError`` instead of a wrong certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from .engine import D3A, ReductionTrace
from .errors import MultiAdjacency
from .graph import Edge, Graph, VertexId
from .recognize import RecognitionOutcome, is_d3_reducible, is_halin

Dart = Tuple[VertexId, VertexId]


@dataclass(frozen=True)
class HamCycle:
    order: Tuple[VertexId, ...]

    def edges(self) -> List[Edge]:
        n = len(self.order)
        return [Edge.of(self.order[i], self.order[(i + 1) % n]) for i in range(n)]

    def __len__(self) -> int:
        return len(self.order)


@dataclass(frozen=True)
class HalinDecomposition:
    tree_edges: FrozenSet[Edge]
    cycle_edges: FrozenSet[Edge]

    @property
    def leaves(self) -> Set[VertexId]:
        return {x for e in self.cycle_edges for x in e}


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic neighbor order per vertex.

    Faces are walked with one fixed handedness: the dart after ``u -> v`` is
    ``v -> w`` where ``w`` follows ``u`` in the rotation at ``v``.
    """

    rotation: Dict[VertexId, Tuple[VertexId, ...]]

    def successor(self) -> Dict[VertexId, Dict[VertexId, VertexId]]:
        nxt = {}
        for v, ring in self.rotation.items():
            k = len(ring)
            nxt[v] = {ring[i]: ring[(i + 1) % k] for i in range(k)}
        return nxt

    def euler_characteristic(self) -> int:
        darts = sum(len(ring) for ring in self.rotation.values())
        return len(self.rotation) - darts // 2 + len(trace_faces(self))

    def is_planar(self) -> bool:
        return self.euler_characteristic() == 2


@dataclass(frozen=True)
class Face:
    boundary: Tuple[Dart, ...]

    @property
    def vertices(self) -> Tuple[VertexId, ...]:
        return tuple(u for u, _ in self.boundary)

    def __len__(self) -> int:
        return len(self.boundary)


# -- Hamiltonian cycle ----------------------------------------------------------


def _replace(ring: Set[VertexId], old: VertexId, new: VertexId) -> None:
    ring.remove(old)
    ring.add(new)


def cycle_from_trace(g: Graph, trace: ReductionTrace) -> HamCycle:
    a, b, c, d = sorted(trace.final_graph)
    cyc: Dict[VertexId, Set[VertexId]] = {a: {b, d}, b: {a, c}, c: {b, d}, d: {c, a}}

    for ev in reversed(trace.events):
        if ev.kind == D3A:
            x, y = sorted(cyc.pop(ev.t))
            owner = dict(zip(ev.outside, ev.triangle))
            u, v = owner[x], owner[y]
            (w,) = [z for z in ev.triangle if z != u and z != v]
            _replace(cyc[x], ev.t, u)
            _replace(cyc[y], ev.t, v)
            cyc[u] = {x, w}
            cyc[w] = {u, v}
            cyc[v] = {w, y}
        else:
            p, q, r, s = ev.p, ev.q, ev.r, ev.apex
            if r in cyc[p]:
                _replace(cyc[p], r, q)
                _replace(cyc[r], p, q)
                cyc[q] = {p, r}
            else:
                # p and r have degree 3 here, so both apex edges carry the cycle.
                assert s in cyc[p] and s in cyc[r], "apex edges missing from cycle"
                _replace(cyc[p], s, q)
                _replace(cyc[s], p, q)
                cyc[q] = {p, s}

    start = min(cyc)
    order = [start]
    prev, cur = start, min(cyc[start])
    while cur != start:
        order.append(cur)
        x, y = cyc[cur]
        prev, cur = cur, (y if x == prev else x)
    ham = HamCycle(tuple(order))
    assert _is_hamiltonian(g, ham.order), "reconstructed cycle is not Hamiltonian"
    return ham


def _is_hamiltonian(g: Graph, order: Tuple[VertexId, ...]) -> bool:
    n = len(order)
    if n != g.vertex_count or len(set(order)) != n or n < 3:
        return False
    return all(g.has_edge(order[i], order[(i + 1) % n]) for i in range(n))


def hamiltonian_cycle(g: Graph) -> Optional[HamCycle]:
    """Hamiltonian cycle of a D3-reducible graph, or None if not D3-reducible."""
    outcome = is_d3_reducible(g)
    if not outcome.accepted:
        return None
    return cycle_from_trace(g, outcome.trace)


# -- Halin tree/cycle decomposition ---------------------------------------------


def _link(adj: Dict[VertexId, Set[VertexId]], u: VertexId, v: VertexId) -> None:
    adj.setdefault(u, set()).add(v)
    adj.setdefault(v, set()).add(u)


def _unlink(adj: Dict[VertexId, Set[VertexId]], u: VertexId, v: VertexId) -> None:
    adj[u].remove(v)
    adj[v].remove(u)


def decomposition_from_outcome(g: Graph, outcome: RecognitionOutcome) -> HalinDecomposition:
    trace = outcome.trace
    known = outcome.halin_state.known_outer if outcome.halin_state else set()
    final = sorted(trace.final_graph)
    center = next(x for x in final if x not in known)
    rim = [x for x in final if x != center]
    tree: Dict[VertexId, Set[VertexId]] = {}
    cyc: Dict[VertexId, Set[VertexId]] = {}
    for x in rim:
        _link(tree, center, x)
    _link(cyc, rim[0], rim[1])
    _link(cyc, rim[1], rim[2])
    _link(cyc, rim[2], rim[0])

    for ev in reversed(trace.events):
        if ev.kind == D3A:
            t = ev.t
            assert len(tree[t]) == 1 and len(cyc.get(t, ())) == 2, f"{t} is not a leaf"
            (w_out,) = tree[t]
            u_out, v_out = sorted(cyc[t])
            owner = dict(zip(ev.outside, ev.triangle))
            u, v, w = owner[u_out], owner[v_out], owner[w_out]
            _unlink(tree, t, w_out)
            _unlink(cyc, t, u_out)
            _unlink(cyc, t, v_out)
            del tree[t], cyc[t]
            _link(tree, w, w_out)
            _link(tree, w, u)
            _link(tree, w, v)
            _link(cyc, u_out, u)
            _link(cyc, u, v)
            _link(cyc, v, v_out)
        else:
            p, q, r, s = ev.p, ev.q, ev.r, ev.apex
            assert r in cyc.get(p, ()), f"{p} {r} is not a cycle edge"
            _unlink(cyc, p, r)
            _link(cyc, p, q)
            _link(cyc, q, r)
            _link(tree, s, q)

    dec = HalinDecomposition(
        tree_edges=frozenset(Edge.of(u, v) for u in tree for v in tree[u] if u < v),
        cycle_edges=frozenset(Edge.of(u, v) for u in cyc for v in cyc[u] if u < v),
    )
    assert check_decomposition(g, dec), "reconstructed decomposition is invalid"
    return dec


def check_decomposition(g: Graph, dec: HalinDecomposition) -> bool:
    """Linear-time validity check of a tree/leaf-cycle decomposition.

    Leaf contiguity is tested by rooting the tree at the leaf in cycle
    position 0: every subtree then avoids position 0, so its leaves form a
    cyclic arc exactly when their positions form an integer interval.
    """
    tree_edges, cycle_edges = dec.tree_edges, dec.cycle_edges
    if tree_edges & cycle_edges or len(tree_edges) + len(cycle_edges) != g.edge_count:
        return False
    if any(not g.has_edge(u, v) for u, v in tree_edges | cycle_edges):
        return False
    n = g.vertex_count
    if len(tree_edges) != n - 1:
        return False
    tree: Dict[VertexId, List[VertexId]] = {v: [] for v in g}
    for u, v in tree_edges:
        tree[u].append(v)
        tree[v].append(u)
    cyc: Dict[VertexId, List[VertexId]] = {}
    for u, v in cycle_edges:
        cyc.setdefault(u, []).append(v)
        cyc.setdefault(v, []).append(u)
    if any(len(tree[v]) == 2 for v in tree):
        return False
    leaves = {v for v in tree if len(tree[v]) == 1}
    if set(cyc) != leaves or any(len(nb) != 2 for nb in cyc.values()) or len(leaves) < 3:
        return False

    start = min(leaves)
    pos = {start: 0}
    prev, cur = start, min(cyc[start])
    while cur != start:
        pos[cur] = len(pos)
        a, b = cyc[cur]
        prev, cur = cur, (b if a == prev else a)
    if len(pos) != len(leaves):
        return False

    # iterative DFS from the position-0 leaf; every tree edge (parent, child)
    # splits off the child's subtree
    parent = {start: None}
    order = [start]
    stack = [start]
    while stack:
        x = stack.pop()
        for y in tree[x]:
            if y not in parent:
                parent[y] = x
                order.append(y)
                stack.append(y)
    if len(order) != n:
        return False
    lo: Dict[VertexId, int] = {}
    hi: Dict[VertexId, int] = {}
    cnt: Dict[VertexId, int] = {}
    for x in reversed(order):
        if x != start and x in pos:
            lo[x] = hi[x] = pos[x]
            cnt[x] = 1
        if x == start:
            continue
        if hi.get(x, -1) - lo.get(x, 0) + 1 != cnt.get(x, 0):
            return False
        up = parent[x]
        if up != start:
            lo[up] = min(lo.get(up, n), lo[x])
            hi[up] = max(hi.get(up, -1), hi[x])
            cnt[up] = cnt.get(up, 0) + cnt[x]
    return True


def halin_decomposition(g: Graph) -> Optional[HalinDecomposition]:
    """Tree/leaf-cycle split of a Halin graph, or None if ``g`` is not Halin."""
    outcome = is_halin(g)
    if not outcome.accepted:
        return None
    return decomposition_from_outcome(g, outcome)


# -- planar embedding -------------------------------------------------------------


class _Rotation:
    """Doubly linked cyclic neighbor lists supporting O(1) splices."""

    def __init__(self) -> None:
        self.nxt: Dict[VertexId, Dict[VertexId, VertexId]] = {}
        self.prv: Dict[VertexId, Dict[VertexId, VertexId]] = {}

    def set_ring(self, v: VertexId, ring: Iterable[VertexId]) -> None:
        ring = list(ring)
        k = len(ring)
        self.nxt[v] = {ring[i]: ring[(i + 1) % k] for i in range(k)}
        self.prv[v] = {ring[(i + 1) % k]: ring[i] for i in range(k)}

    def replace(self, v: VertexId, old: VertexId, new: VertexId) -> None:
        after = self.nxt[v].pop(old)
        before = self.prv[v].pop(old)
        self.nxt[v][new] = after
        self.prv[v][new] = before
        self.nxt[v][before] = new
        self.prv[v][after] = new

    def insert_after(self, v: VertexId, anchor: VertexId, new: VertexId) -> None:
        after = self.nxt[v][anchor]
        self.nxt[v][anchor] = new
        self.prv[v][new] = anchor
        self.nxt[v][new] = after
        self.prv[v][after] = new

    def freeze(self) -> RotationSystem:
        out = {}
        for v, nxt in self.nxt.items():
            first = min(nxt)
            ring = [first]
            cur = nxt[first]
            while cur != first:
                ring.append(cur)
                cur = nxt[cur]
            out[v] = tuple(ring)
        return RotationSystem(out)


def embedding_from_trace(g: Graph, trace: ReductionTrace) -> RotationSystem:
    a, b, c, d = sorted(trace.final_graph)
    rot = _Rotation()
    rot.set_ring(a, (b, c, d))
    rot.set_ring(b, (a, d, c))
    rot.set_ring(c, (a, b, d))
    rot.set_ring(d, (a, c, b))

    for ev in reversed(trace.events):
        if ev.kind == D3A:
            t = ev.t
            owner = dict(zip(ev.outside, ev.triangle))
            nxt_t = rot.nxt.pop(t)
            prv_t = rot.prv.pop(t)
            for o, m in owner.items():
                rot.set_ring(m, (o, owner[nxt_t[o]], owner[prv_t[o]]))
                rot.replace(o, t, m)
        else:
            p, q, r, s = ev.p, ev.q, ev.r, ev.apex
            if rot.nxt[r][p] == s:
                x, y = p, r
            else:
                x, y = r, p
            assert rot.nxt[y][x] == s and rot.nxt[s][y] == x, f"{p} {r} {s} is not a face"
            rot.replace(x, y, q)
            rot.replace(y, x, q)
            rot.insert_after(s, y, q)
            rot.set_ring(q, (x, s, y))

    emb = rot.freeze()
    assert set(emb.rotation) == set(g), "embedding vertex set differs from graph"
    assert all(set(emb.rotation[v]) == set(g.neighbors(v)) for v in g), "rotation/adjacency mismatch"
    assert emb.is_planar(), "reconstructed rotation system is not planar"
    return emb


def planar_embedding(g: Graph) -> Optional[RotationSystem]:
    """Planar rotation system of a D3-reducible graph, or None."""
    outcome = is_d3_reducible(g)
    if not outcome.accepted:
        return None
    return embedding_from_trace(g, outcome.trace)


def trace_faces(r: RotationSystem) -> List[Face]:
    nxt = r.successor()
    seen: Set[Dart] = set()
    faces = []
    for u, ring in r.rotation.items():
        for v in ring:
            if (u, v) in seen:
                continue
            walk = []
            dart = (u, v)
            while dart not in seen:
                seen.add(dart)
                walk.append(dart)
                x, y = dart
                dart = (y, nxt[y][x])
            faces.append(Face(tuple(walk)))
    return faces


def dual_graph(r: RotationSystem) -> Graph:
    """One vertex ``f<i>`` per traced face, one edge per shared primal edge."""
    faces = trace_faces(r)
    owner: Dict[Dart, int] = {}
    for i, face in enumerate(faces):
        for dart in face.boundary:
            owner[dart] = i
    dual = Graph()
    for i in range(len(faces)):
        dual.add_vertex(f"f{i}")
    for u, ring in r.rotation.items():
        for v in ring:
            if u > v:
                continue
            f1, f2 = owner[(u, v)], owner[(v, u)]
            if f1 == f2:
                raise MultiAdjacency(f"edge {u} {v} has the same face on both sides")
            if dual.has_edge(f"f{f1}", f"f{f2}"):
                raise MultiAdjacency(f"faces f{f1} and f{f2} share more than one edge")
            dual.add_edge(f"f{f1}", f"f{f2}")
    return dual
