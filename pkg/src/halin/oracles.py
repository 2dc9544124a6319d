"""Brute-force reference checks used by the test suite and the CLI.

Nothing here touches :mod:`halin.engine`; reductions explored by
:func:`all_maximal_reduction_results` are located by exhaustive search over
vertex triples.  All routines are exponential somewhere and guard their
input size.
"""

from __future__ import annotations

import itertools
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from .errors import SizeLimitExceeded
from .graph import Edge, Graph, VertexId, contract_triangle, shorten_path

SeparationWitness = Optional[Tuple[VertexId, ...]]
CanonicalForm = Tuple[int, Tuple[int, ...]]


def _bitmasks(g: Graph) -> Tuple[List[VertexId], List[int]]:
    verts = sorted(g)
    index = {v: i for i, v in enumerate(verts)}
    masks = [0] * len(verts)
    for v in verts:
        for w in g.neighbors(v):
            masks[index[v]] |= 1 << index[w]
    return verts, masks


# -- canonical forms ----------------------------------------------------------


def _refine(masks: Sequence[int], colors: List[int]) -> List[int]:
    """Colour refinement to the coarsest equitable partition.

    New colours are ranks of ``(old colour, neighbour colour multiset)``
    signatures, so the result depends only on the structure.
    """
    n = len(masks)
    while True:
        sigs = []
        for i in range(n):
            m = masks[i]
            nb = []
            while m:
                low = m & -m
                nb.append(colors[low.bit_length() - 1])
                m ^= low
            nb.sort()
            sigs.append((colors[i], tuple(nb)))
        ranks = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def _certificate(masks: Sequence[int], colors: Sequence[int]) -> Tuple[int, ...]:
    n = len(masks)
    at = [0] * n
    for i, c in enumerate(colors):
        at[c] = i
    rows = []
    for c in range(n):
        m = masks[at[c]]
        row = 0
        while m:
            low = m & -m
            row |= 1 << colors[low.bit_length() - 1]
            m ^= low
        rows.append(row)
    return tuple(rows)


def canonical_form(g: Graph) -> CanonicalForm:
    """Isomorphism-invariant certificate: equal iff the graphs are isomorphic.

    Individualisation-refinement search over vertex orders; the certificate
    is the smallest relabelled adjacency matrix among the leaves.  Subtrees
    that an automorphism found so far maps onto an explored sibling are
    skipped.
    """
    _, masks = _bitmasks(g)
    n = len(masks)
    if n == 0:
        return (0, ())
    best: List[Optional[Tuple[int, ...]]] = [None]
    leaves: Dict[Tuple[int, ...], Tuple[int, ...]] = {}
    automorphisms: List[Tuple[int, ...]] = []

    def search(colors: List[int], fixed: Tuple[int, ...]) -> None:
        k = len(set(colors))
        if k == n:
            cert = _certificate(masks, colors)
            if cert in leaves:
                other = leaves[cert]
                inv = [0] * n
                for i, c in enumerate(other):
                    inv[c] = i
                automorphisms.append(tuple(inv[colors[i]] for i in range(n)))
            else:
                leaves[cert] = tuple(colors)
            if best[0] is None or cert < best[0]:
                best[0] = cert
            return
        cells: Dict[int, List[int]] = {}
        for i, c in enumerate(colors):
            cells.setdefault(c, []).append(i)
        target = min((c for c in cells if len(cells[c]) > 1), key=lambda c: (len(cells[c]), c))
        explored: List[int] = []
        for v in cells[target]:
            if explored and _same_orbit(v, explored, fixed, automorphisms, n):
                continue
            explored.append(v)
            # v takes the target colour, the rest of its cell moves one up
            child = [c if c < target else c + 1 for c in colors]
            child[v] = target
            search(_refine(masks, child), fixed + (v,))

    search(_refine(masks, _compact(_degrees(masks))), ())
    return (n, best[0])


def _degrees(masks: Sequence[int]) -> List[int]:
    return [bin(m).count("1") for m in masks]


def _compact(colors: Sequence[int]) -> List[int]:
    ranks = {c: r for r, c in enumerate(sorted(set(colors)))}
    return [ranks[c] for c in colors]


def _same_orbit(v: int, explored: List[int], fixed: Tuple[int, ...], autos: List[Tuple[int, ...]], n: int) -> bool:
    gens = [a for a in autos if all(a[x] == x for x in fixed)]
    if not gens:
        return False
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in gens:
        for x in range(n):
            parent[find(x)] = find(a[x])
    rv = find(v)
    return any(find(u) == rv for u in explored)


def graphs_isomorphic(g: Graph, h: Graph, limit: Optional[int] = 10) -> bool:
    """Backtracking search for an adjacency-preserving bijection.

    Candidates for each vertex are restricted to equal degree and checked
    incrementally against the vertices already mapped.
    """
    if limit is not None and max(g.vertex_count, h.vertex_count) > limit:
        raise SizeLimitExceeded(f"isomorphism oracle limited to {limit} vertices")
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return False
    if sorted(g.degree(v) for v in g) != sorted(h.degree(v) for v in h):
        return False
    order = _bfs_order(g)
    mapping: Dict[VertexId, VertexId] = {}
    used: Set[VertexId] = set()
    h_vertices = list(h)

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        mapped_nbrs = [mapping[w] for w in g.neighbors(v) if w in mapping]
        pool = h.neighbors(mapped_nbrs[0]) if mapped_nbrs else h_vertices
        for x in list(pool):
            if x in used or h.degree(x) != g.degree(v):
                continue
            if any(not h.has_edge(x, y) for y in mapped_nbrs):
                continue
            if sum(1 for y in h.neighbors(x) if y in used) != len(mapped_nbrs):
                continue
            mapping[v] = x
            used.add(x)
            if extend(i + 1):
                return True
            del mapping[v]
            used.discard(x)
        return False

    return extend(0)


def _bfs_order(g: Graph) -> List[VertexId]:
    order: List[VertexId] = []
    seen: Set[VertexId] = set()
    for s in sorted(g, key=lambda v: -g.degree(v)):
        if s in seen:
            continue
        seen.add(s)
        frontier = [s]
        while frontier:
            order.extend(frontier)
            nxt = []
            for v in frontier:
                for w in g.neighbors(v):
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
    return order


# -- enumeration ----------------------------------------------------------------


def graph_from_masks(masks: Sequence[int]) -> Graph:
    g = Graph()
    n = len(masks)
    for i in range(n):
        g.add_vertex(str(i))
    for i in range(n):
        for j in range(i + 1, n):
            if masks[i] >> j & 1:
                g.add_edge(str(i), str(j))
    return g


def _masks_from_form(form: CanonicalForm) -> List[int]:
    return list(form[1])


def all_graphs(n: int) -> List[CanonicalForm]:
    """Canonical forms of every graph on ``n`` vertices, up to isomorphism.

    Each graph on ``n`` vertices is a graph on ``n - 1`` vertices plus a
    vertex joined to some subset, so the classes are grown one vertex at a
    time and deduplicated by canonical form.
    """
    if n > 8:
        raise SizeLimitExceeded("exhaustive enumeration limited to 8 vertices")
    forms: Set[CanonicalForm] = {(0, ())}
    for size in range(1, n + 1):
        forms = {
            canonical_form(graph_from_masks(_add_vertex(_masks_from_form(f), subset)))
            for f in forms
            for subset in range(1 << (size - 1))
        }
    return sorted(forms)


def _add_vertex(masks: List[int], subset: int) -> List[int]:
    n = len(masks)
    out = [m | ((subset >> i & 1) << n) for i, m in enumerate(masks)]
    out.append(subset)
    return out


def connected_min_degree_graphs(n: int, min_degree: int = 3) -> List[Graph]:
    """All connected graphs on ``n`` vertices with minimum degree >= ``min_degree``.

    Built from every graph on ``n - 1`` vertices whose minimum degree is at
    least ``min_degree - 1`` (deleting a vertex lowers degrees by at most 1).
    """
    if n <= min_degree:
        return []
    smaller = all_graphs(n - 1)
    found: Set[CanonicalForm] = set()
    for form in smaller:
        masks = _masks_from_form(form)
        degs = _degrees(masks)
        if degs and min(degs) < min_degree - 1:
            continue
        need = 0
        for i, d in enumerate(degs):
            if d < min_degree:
                need |= 1 << i
        for subset in range(1 << (n - 1)):
            if subset & need != need or bin(subset).count("1") < min_degree:
                continue
            grown = _add_vertex(masks, subset)
            g = graph_from_masks(grown)
            if _connected(g):
                found.add(canonical_form(g))
    return [graph_from_masks(_masks_from_form(f)) for f in sorted(found)]


# -- connectivity -------------------------------------------------------------


def _connected(g: Graph, removed: FrozenSet[VertexId] = frozenset()) -> bool:
    verts = [v for v in g if v not in removed]
    if not verts:
        return True
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in seen and w not in removed:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(verts)


def _cut_vertex(g: Graph, removed: VertexId) -> Optional[VertexId]:
    """An articulation point of ``g - removed`` (iterative lowpoint DFS)."""
    verts = [v for v in g if v != removed]
    root = verts[0]
    disc = {root: 0}
    low = {root: 0}
    root_children = 0
    stack = [(root, None, iter(g.neighbors(root)))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if w == removed or w == parent:
                continue
            if w in disc:
                low[v] = min(low[v], disc[w])
            else:
                disc[w] = low[w] = len(disc)
                if v == root:
                    root_children += 1
                stack.append((w, v, iter(g.neighbors(w))))
                advanced = True
                break
        if advanced:
            continue
        stack.pop()
        if parent is not None:
            low[parent] = min(low[parent], low[v])
            if parent != root and low[v] >= disc[parent]:
                return parent
    if root_children > 1:
        return root
    return None


def brute_force_3connected(g: Graph) -> Tuple[bool, SeparationWitness]:
    """3-vertex-connectivity by deleting every vertex and looking for a cut vertex.

    The witness is a pair of vertices whose removal disconnects ``g``, or
    None when ``g`` is too small or already disconnected.
    """
    if g.vertex_count > 60:
        raise SizeLimitExceeded("3-connectivity oracle limited to 60 vertices")
    if g.vertex_count < 4:
        return False, None
    if not _connected(g):
        for x, y in itertools.combinations(sorted(g), 2):
            if not _connected(g, frozenset((x, y))):
                return False, (x, y)
        return False, None
    for x in sorted(g):
        if not _connected(g, frozenset((x,))):
            # a cut vertex: pair it with a vertex whose removal keeps two sides
            rest = g.subgraph_without([x])
            comps = _components(rest)
            comps.sort(key=len, reverse=True)
            y = comps[0][0] if len(comps[0]) > 1 or len(comps) > 2 else comps[1][0]
            return False, tuple(sorted((x, y)))
        y = _cut_vertex(g, x)
        if y is not None:
            return False, tuple(sorted((x, y)))
    return True, None


def _components(g: Graph) -> List[List[VertexId]]:
    seen: Set[VertexId] = set()
    out = []
    for s in g:
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        i = 0
        while i < len(comp):
            for w in g.neighbors(comp[i]):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
            i += 1
        out.append(sorted(comp))
    return out


# -- Hamiltonian cycles -------------------------------------------------------


def verify_hamiltonian(g: Graph, cycle) -> bool:
    order = tuple(getattr(cycle, "order", cycle))
    n = len(order)
    if n < 3 or n != g.vertex_count or set(order) != set(g):
        return False
    return all(g.has_edge(order[i], order[(i + 1) % n]) for i in range(n))


def brute_force_hamiltonian(g: Graph, limit: int = 20) -> Optional[Tuple[VertexId, ...]]:
    if g.vertex_count > limit:
        raise SizeLimitExceeded(f"Hamiltonian search limited to {limit} vertices")
    if g.vertex_count < 3:
        return None
    start = min(g)
    path = [start]
    on_path = {start}

    def extend() -> bool:
        if len(path) == g.vertex_count:
            return g.has_edge(path[-1], start)
        for w in sorted(g.neighbors(path[-1])):
            if w not in on_path:
                path.append(w)
                on_path.add(w)
                if extend():
                    return True
                path.pop()
                on_path.discard(w)
        return False

    return tuple(path) if extend() else None


# -- Halin structure ---------------------------------------------------------


def _is_arc(cycle: Sequence[VertexId], members: Set[VertexId]) -> bool:
    n = len(cycle)
    changes = sum((cycle[i] in members) != (cycle[(i + 1) % n] in members) for i in range(n))
    return changes <= 2


def _tree_side(tree: Dict[VertexId, List[VertexId]], start: VertexId, banned: VertexId) -> Set[VertexId]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in tree[v]:
            if w not in seen and not (v == start and w == banned):
                seen.add(w)
                stack.append(w)
    return seen


def _decomposition_ok(g: Graph, tree_edges: Iterable[Edge], cycle: Sequence[VertexId]) -> bool:
    tree: Dict[VertexId, List[VertexId]] = {v: [] for v in g}
    count = 0
    for u, v in tree_edges:
        tree[u].append(v)
        tree[v].append(u)
        count += 1
    if count != g.vertex_count - 1:
        return False
    reached = _tree_side(tree, next(iter(tree)), banned="")
    if len(reached) != g.vertex_count:
        return False
    if any(len(nb) == 2 for nb in tree.values()):
        return False
    leaves = {v for v, nb in tree.items() if len(nb) == 1}
    if leaves != set(cycle) or len(cycle) < 3:
        return False
    for u, v in tree_edges:
        side = _tree_side(tree, u, banned=v)
        if not _is_arc(cycle, side & leaves):
            return False
    return True


def verify_decomposition(g: Graph, dec) -> bool:
    """Check a tree/leaf-cycle split edge by edge.

    ``dec`` needs ``tree_edges`` and ``cycle_edges`` attributes.
    """
    tree_edges = {Edge.of(*e) for e in dec.tree_edges}
    cycle_edges = {Edge.of(*e) for e in dec.cycle_edges}
    if tree_edges & cycle_edges or tree_edges | cycle_edges != set(g.edges()):
        return False
    cyc: Dict[VertexId, List[VertexId]] = {}
    for u, v in cycle_edges:
        cyc.setdefault(u, []).append(v)
        cyc.setdefault(v, []).append(u)
    if not cyc or any(len(nb) != 2 for nb in cyc.values()):
        return False
    start = min(cyc)
    order = [start]
    prev, cur = start, cyc[start][0]
    while cur != start:
        order.append(cur)
        a, b = cyc[cur]
        prev, cur = cur, (b if a == prev else a)
    if len(order) != len(cyc):
        return False
    return _decomposition_ok(g, sorted(tree_edges), order)


def _simple_cycles(g: Graph, allowed: Set[VertexId], length: int) -> Iterator[List[VertexId]]:
    """Each simple cycle of the given length within ``allowed``, listed once."""
    verts = sorted(allowed)
    for s in verts:
        path = [s]
        on = {s}

        def grow() -> Iterator[List[VertexId]]:
            last = path[-1]
            if len(path) == length:
                if g.has_edge(last, s) and path[1] < path[-1]:
                    yield list(path)
                return
            for w in g.neighbors(last):
                if w in allowed and w > s and w not in on:
                    path.append(w)
                    on.add(w)
                    yield from grow()
                    path.pop()
                    on.discard(w)

        yield from grow()


def halin_decompositions(g: Graph, limit: int = 12) -> Iterator[Tuple[List[Edge], List[VertexId]]]:
    """Every (tree edges, leaf cycle) split of ``g`` meeting the Halin conditions.

    Leaves have tree degree 1 and cycle degree 2, so the cycle runs through
    degree-3 vertices only, and ``|cycle| = m - (n - 1)``.
    """
    if g.vertex_count > limit:
        raise SizeLimitExceeded(f"Halin oracle limited to {limit} vertices")
    length = g.edge_count - g.vertex_count + 1
    if length < 3:
        return
    cubic = {v for v in g if g.degree(v) == 3}
    for cyc in _simple_cycles(g, cubic, length):
        cyc_edges = {Edge.of(cyc[i], cyc[(i + 1) % length]) for i in range(length)}
        tree_edges = [e for e in g.edges() if e not in cyc_edges]
        if _decomposition_ok(g, tree_edges, cyc):
            yield tree_edges, cyc


def brute_force_halin(g: Graph, limit: int = 12) -> bool:
    return next(halin_decompositions(g, limit), None) is not None


# -- exhaustive reduction ------------------------------------------------------


def applicable_reductions(g: Graph) -> List[Tuple[str, Tuple[VertexId, ...]]]:
    """Every D3a/D3b configuration, by brute force over vertex triples."""
    cubic = sorted(v for v in g if g.degree(v) == 3)
    out: List[Tuple[str, Tuple[VertexId, ...]]] = []
    for p, q, r in itertools.combinations(cubic, 3):
        if g.has_edge(p, q) and g.has_edge(q, r) and g.has_edge(p, r):
            outs = set()
            for x in (p, q, r):
                outs |= {w for w in g.neighbors(x) if w not in (p, q, r)}
            if len(outs) == 3:
                out.append(("D3a", (p, q, r)))
    for q in cubic:
        for p, r in itertools.combinations(cubic, 2):
            if q in (p, r) or not (g.has_edge(p, q) and g.has_edge(q, r)) or g.has_edge(p, r):
                continue
            apexes = [s for s in g if s not in (p, q, r)
                      and g.has_edge(s, p) and g.has_edge(s, q) and g.has_edge(s, r)]
            if len(apexes) == 1:
                out.append(("D3b", (p, q, r, apexes[0])))
    return out


def apply_reduction(g: Graph, red: Tuple[str, Tuple[VertexId, ...]]) -> Graph:
    h = g.copy()
    kind, vs = red
    if kind == "D3a":
        contract_triangle(h, *vs, h.take_fresh("x"))
    else:
        shorten_path(h, *vs)
    return h


def all_maximal_reduction_results(g: Graph, limit: int = 9) -> Set[CanonicalForm]:
    """Canonical forms of every irreducible graph reachable from ``g``."""
    if g.vertex_count > limit:
        raise SizeLimitExceeded(f"exhaustive reduction limited to {limit} vertices")
    memo: Dict[CanonicalForm, FrozenSet[CanonicalForm]] = {}

    def explore(h: Graph) -> FrozenSet[CanonicalForm]:
        key = canonical_form(h)
        if key in memo:
            return memo[key]
        moves = applicable_reductions(h)
        if not moves:
            result = frozenset((key,))
        else:
            result = frozenset().union(*(explore(apply_reduction(h, m)) for m in moves))
        memo[key] = result
        return result

    return set(explore(g))
