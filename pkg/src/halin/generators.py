"""Graph constructors: named polyhedra, wheels, random Halin and D3-reducible
graphs, and glued-wheel primal/dual pairs.

Random generators take a ``seed`` and are deterministic for a fixed seed
with this implementation; nothing else is promised about their output.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .errors import InvalidProfile, InvalidSize, PreconditionViolated, SpecViolation, Unreachable
from .graph import Graph, VertexId

# -- named graphs --------------------------------------------------------------


def complete(n: int) -> Graph:
    names = [chr(ord("a") + i) for i in range(n)] if n <= 26 else [f"v{i}" for i in range(n)]
    g = Graph()
    for v in names:
        g.add_vertex(v)
    for i in range(n):
        for j in range(i + 1, n):
            g.add_edge(names[i], names[j])
    return g


def k4() -> Graph:
    return complete(4)


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges((f"c{i}", f"c{(i + 1) % n}") for i in range(n))


def path_graph(n: int) -> Graph:
    return Graph.from_edges((f"p{i}", f"p{i + 1}") for i in range(n - 1))


def prism() -> Graph:
    """Triangular prism: triangles ``acd`` and ``bef``, matching ``ab de cf``."""
    return Graph.from_edges([
        ("a", "c"), ("c", "d"), ("d", "a"),
        ("b", "e"), ("e", "f"), ("f", "b"),
        ("a", "b"), ("d", "e"), ("c", "f"),
    ])


def cube() -> Graph:
    return Graph.from_edges([
        ("000", "001"), ("000", "010"), ("000", "100"),
        ("001", "011"), ("001", "101"), ("010", "011"),
        ("010", "110"), ("100", "101"), ("100", "110"),
        ("011", "111"), ("101", "111"), ("110", "111"),
    ])


def octahedron() -> Graph:
    pairs = [("a", "b"), ("c", "d"), ("e", "f")]
    g = Graph()
    for i, (x, y) in enumerate(pairs):
        for other in pairs[i + 1:]:
            for u in (x, y):
                for v in other:
                    g.add_edge(u, v)
    return g


def truncated_tetrahedron() -> Graph:
    """Cut each corner of a tetrahedron: 12 vertices, 18 edges, 4 triangles.

    Vertex ``ij`` sits on the tetrahedron edge from corner ``i`` towards
    corner ``j``.
    """
    g = Graph()
    corners = "0123"
    for i in corners:
        near = [f"{i}{j}" for j in corners if j != i]
        g.add_edge(near[0], near[1])
        g.add_edge(near[1], near[2])
        g.add_edge(near[2], near[0])
    for i in corners:
        for j in corners:
            if i < j:
                g.add_edge(f"{i}{j}", f"{j}{i}")
    return g


def wheel(k: int) -> Graph:
    """Hub ``h`` joined to every vertex of the rim cycle ``r0 ... r{k-2}``."""
    if k < 4:
        raise InvalidSize(f"wheel needs at least 4 vertices, got {k}")
    rim = [f"r{i}" for i in range(k - 1)]
    g = Graph()
    for i, v in enumerate(rim):
        g.add_edge("h", v)
    for i, v in enumerate(rim):
        g.add_edge(v, rim[(i + 1) % len(rim)])
    return g


# -- inverse reductions -------------------------------------------------------


def expand_vertex(g: Graph, v: VertexId, p: VertexId, q: VertexId, r: VertexId) -> None:
    """Replace the degree-3 vertex ``v`` by the triangle ``pqr``.

    ``p``, ``q`` and ``r`` take over ``v``'s neighbors in the order
    ``g.neighbors(v)`` lists them.
    """
    if v not in g or g.degree(v) != 3:
        raise PreconditionViolated("degree", f"{v} must be a vertex of degree 3")
    fresh = (p, q, r)
    if len(set(fresh)) != 3 or any(x in g for x in fresh):
        raise PreconditionViolated("freshness", f"{fresh} must be three new distinct ids")
    nbrs = list(g.neighbors(v))
    g.remove_vertex(v)
    for x, w in zip(fresh, nbrs):
        g.add_edge(x, w)
    g.add_edge(p, q)
    g.add_edge(q, r)
    g.add_edge(r, p)


def subdivide_with_apex(g: Graph, p: VertexId, r: VertexId, s: VertexId, q: VertexId) -> None:
    """Insert ``q`` on the edge ``pr`` of triangle ``prs`` and join it to ``s``."""
    if not g.has_edge(p, r):
        raise PreconditionViolated("path", f"{p} {r} is not an edge")
    if s in (p, r) or not (g.has_edge(p, s) and g.has_edge(r, s)):
        raise PreconditionViolated("triangle", f"{p} {r} {s} is not a triangle")
    if g.degree(p) != 3 or g.degree(r) != 3:
        raise PreconditionViolated("degree", f"{p} and {r} must have degree 3")
    if q in g:
        raise PreconditionViolated("freshness", f"{q} already names a vertex")
    g.remove_edge(p, r)
    g.add_edge(p, q)
    g.add_edge(q, r)
    g.add_edge(q, s)


# -- random D3-reducible graphs -----------------------------------------------


class _Pool:
    """Set supporting O(1) removal and uniform sampling."""

    def __init__(self) -> None:
        self.items: List[VertexId] = []
        self.index: Dict[VertexId, int] = {}

    def add(self, x: VertexId) -> None:
        if x not in self.index:
            self.index[x] = len(self.items)
            self.items.append(x)

    def discard(self, x: VertexId) -> None:
        i = self.index.pop(x, None)
        if i is None:
            return
        last = self.items.pop()
        if i < len(self.items):
            self.items[i] = last
            self.index[last] = i

    def choice(self, rng: random.Random) -> VertexId:
        return self.items[rng.randrange(len(self.items))]

    def __len__(self) -> int:
        return len(self.items)


def _labelled_k4(g: Graph) -> None:
    names = [g.take_fresh("v") for _ in range(4)]
    for i in range(4):
        for j in range(i + 1, 4):
            g.add_edge(names[i], names[j])


def _subdivision_sites(g: Graph, p: VertexId) -> List[Tuple[VertexId, VertexId, VertexId]]:
    sites = []
    for r in g.neighbors(p):
        if g.degree(r) != 3:
            continue
        for s in g.neighbors(p):
            if s != r and g.has_edge(r, s):
                sites.append((p, r, s))
    return sites


def random_d3_reducible(n: int, seed: Optional[int] = None, d3a_probability: float = 0.5) -> Graph:
    """Grow a D3-reducible graph with ``n`` vertices from ``K4``.

    Each step either expands a random degree-3 vertex into a triangle (with
    probability ``d3a_probability``) or subdivides a triangle edge between two
    degree-3 vertices towards the triangle's third vertex.  When a single
    vertex is missing the subdivision is forced.
    """
    if n < 4:
        raise InvalidSize(f"need at least 4 vertices, got {n}")
    rng = random.Random(seed)
    g = Graph()
    _labelled_k4(g)
    cubic = _Pool()
    for v in g:
        cubic.add(v)

    while g.vertex_count < n:
        grow_triangle = n - g.vertex_count >= 2 and rng.random() < d3a_probability
        if grow_triangle:
            v = cubic.choice(rng)
            p, q, r = (g.take_fresh("v") for _ in range(3))
            expand_vertex(g, v, p, q, r)
            cubic.discard(v)
            for x in (p, q, r):
                cubic.add(x)
            continue
        site = None
        for _ in range(64):
            sites = _subdivision_sites(g, cubic.choice(rng))
            if sites:
                site = sites[rng.randrange(len(sites))]
                break
        if site is None:
            sites = [s for v in cubic.items for s in _subdivision_sites(g, v)]
            if not sites:
                raise Unreachable("no triangle with two degree-3 corners left")
            site = sites[rng.randrange(len(sites))]
        p, r, s = site
        q = g.take_fresh("v")
        subdivide_with_apex(g, p, r, s, q)
        cubic.add(q)
        if g.degree(s) == 3:
            cubic.add(s)
        else:
            cubic.discard(s)
    return g


# -- random Halin graphs --------------------------------------------------------


@dataclass
class PlaneTree:
    """Rooted tree whose child lists are in left-to-right plane order."""

    root: VertexId
    children: Dict[VertexId, List[VertexId]] = field(default_factory=dict)

    def leaves(self) -> List[VertexId]:
        out = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            kids = self.children.get(v, [])
            if kids:
                stack.extend(reversed(kids))
            else:
                out.append(v)
        return out

    def edges(self) -> List[Tuple[VertexId, VertexId]]:
        return [(v, c) for v, kids in self.children.items() for c in kids]


def random_plane_tree(internal_degrees: Sequence[int], seed: Optional[int] = None) -> PlaneTree:
    """Root gets ``internal_degrees[0]`` children; each later entry turns a
    random leaf into an internal vertex of that degree."""
    if not internal_degrees or any(d < 3 for d in internal_degrees):
        raise InvalidProfile(f"internal degrees must all be >= 3, got {list(internal_degrees)}")
    rng = random.Random(seed)
    counter = iter(range(1, 1 << 62))
    tree = PlaneTree(root="v0")
    leaves = _Pool()

    def sprout(v: VertexId, k: int) -> None:
        kids = [f"v{next(counter)}" for _ in range(k)]
        tree.children[v] = kids
        leaves.discard(v)
        for c in kids:
            leaves.add(c)

    sprout(tree.root, internal_degrees[0])
    for d in internal_degrees[1:]:
        sprout(leaves.choice(rng), d - 1)
    return tree


def halin_from_tree(tree: PlaneTree) -> Graph:
    g = Graph.from_edges(tree.edges())
    leaves = tree.leaves()
    for i, v in enumerate(leaves):
        g.add_edge(v, leaves[(i + 1) % len(leaves)])
    return g


def random_halin(internal_degrees: Sequence[int], seed: Optional[int] = None) -> Graph:
    return halin_from_tree(random_plane_tree(internal_degrees, seed))


def halin_profile(size: int, seed: Optional[int] = None, max_degree: int = 6) -> List[int]:
    """Random internal-degree profile whose Halin graph has ``size`` vertices."""
    if size < 4:
        raise InvalidSize(f"Halin graphs have at least 4 vertices, got {size}")
    rng = random.Random(seed)
    root = rng.randint(3, max(3, min(max_degree, size - 1)))
    if size - 1 - root == 1:
        root += 1 if root < size - 1 else -1
    profile = [root]
    remaining = size - 1 - root
    while remaining:
        extra = rng.randint(2, max(2, min(max_degree - 1, remaining)))
        if remaining - extra == 1:
            extra = extra + 1 if extra < remaining else extra - 1
        profile.append(extra + 1)
        remaining -= extra
    return profile


# -- glued wheels ------------------------------------------------------------


@dataclass
class GluingSpec:
    """Wheels (by vertex count) and the gluings between their triangular faces.

    Face ``m`` of a wheel with hub ``h`` and rim ``r0 ... r{k-2}`` is the
    spoke triangle ``(h, r_m, r_{m+1})``; ``K4`` additionally has face 3,
    its rim triangle ``(r0, r1, r2)``.
    """

    wheels: List[int]
    gluing_tree: List[Tuple[int, int, int, int]] = field(default_factory=list)


def _face_count(k: int) -> int:
    return 4 if k == 4 else k - 1


def _local_face(k: int, m: int) -> Tuple[str, str, str]:
    rim = k - 1
    if k == 4 and m == 3:
        return ("r0", "r1", "r2")
    return ("h", f"r{m % rim}", f"r{(m + 1) % rim}")


def _validate_gluing(spec: GluingSpec) -> Dict[int, List[Tuple[int, int, int]]]:
    w = len(spec.wheels)
    if w == 0:
        raise SpecViolation("no wheels")
    for k in spec.wheels:
        if k < 4:
            raise SpecViolation(f"wheel size {k} < 4")
    if len(spec.gluing_tree) != w - 1:
        raise SpecViolation(f"{w} wheels need {w - 1} gluings, got {len(spec.gluing_tree)}")
    used: Set[Tuple[int, int]] = set()
    parent = list(range(w))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    adjacency: Dict[int, List[Tuple[int, int, int]]] = {i: [] for i in range(w)}
    for i, fi, j, fj in spec.gluing_tree:
        for wh, f in ((i, fi), (j, fj)):
            if not 0 <= wh < w:
                raise SpecViolation(f"no wheel {wh}")
            if not 0 <= f < _face_count(spec.wheels[wh]):
                raise SpecViolation(f"wheel {wh} has no triangular face {f}")
            if (wh, f) in used:
                raise SpecViolation(f"face {f} of wheel {wh} glued twice")
            used.add((wh, f))
        ri, rj = find(i), find(j)
        if ri == rj:
            raise SpecViolation("gluing tree has a cycle")
        parent[ri] = rj
        adjacency[i].append((fi, j, fj))
        adjacency[j].append((fj, i, fi))
    return adjacency


class _GluingBuilder:
    """Builds the dual by gluing and the primal by the matching inverse
    reductions, keeping for every primal vertex the dual vertices of its face."""

    def __init__(self) -> None:
        self.dual = Graph()
        self.primal = Graph()
        self.face: Dict[VertexId, Set[VertexId]] = {}
        self.triangle: Dict[FrozenSet[VertexId], VertexId] = {}

    def _set_face(self, x: VertexId, verts: Set[VertexId]) -> None:
        old = self.face.get(x)
        if old is not None and len(old) == 3:
            self.triangle.pop(frozenset(old), None)
        self.face[x] = verts
        if len(verts) == 3:
            self.triangle[frozenset(verts)] = x

    def _across(self, x: VertexId, a: VertexId, b: VertexId) -> VertexId:
        (y,) = [y for y in self.primal.neighbors(x) if a in self.face[y] and b in self.face[y]]
        return y

    def start(self, names: Dict[str, VertexId]) -> None:
        h, r0, r1, r2 = (names[k] for k in ("h", "r0", "r1", "r2"))
        quad = [h, r0, r1, r2]
        for i in range(4):
            for j in range(i + 1, 4):
                self.dual.add_edge(quad[i], quad[j])
        tris = [{h, r0, r1}, {h, r1, r2}, {h, r2, r0}, {r0, r1, r2}]
        ids = [self.primal.take_fresh("v") for _ in tris]
        for i in range(4):
            for j in range(i + 1, 4):
                self.primal.add_edge(ids[i], ids[j])
        for x, verts in zip(ids, tris):
            self._set_face(x, set(verts))

    def glue_k4(self, a: VertexId, b: VertexId, c: VertexId, apex: VertexId) -> None:
        """Glue a tetrahedron with new corner ``apex`` onto face ``abc``."""
        v = self.triangle[frozenset((a, b, c))]
        for x in (a, b, c):
            self.dual.add_edge(apex, x)
        corners = {}
        for nb in self.primal.neighbors(v):
            shared = self.face[nb] & {a, b, c}
            corners[nb] = shared
        fresh = [self.primal.take_fresh("v") for _ in range(3)]
        nbrs = list(self.primal.neighbors(v))
        expand_vertex(self.primal, v, *fresh)
        del self.face[v]
        self.triangle.pop(frozenset((a, b, c)), None)
        for x, nb in zip(fresh, nbrs):
            self._set_face(x, corners[nb] | {apex})

    def grow_rim(self, hub: VertexId, x: VertexId, y: VertexId, new: VertexId) -> None:
        """Insert rim vertex ``new`` between ``x`` and ``y`` of the wheel at ``hub``.

        The spoke triangle ``(hub, x, y)`` must be a face whose neighbor
        across ``hub x`` is also a triangle.
        """
        p_old = self.triangle[frozenset((hub, x, y))]
        a = self._across(p_old, hub, x)
        q = self._across(p_old, x, y)
        self.dual.remove_edge(x, y)
        self.dual.add_edge(x, new)
        self.dual.add_edge(new, y)
        self.dual.add_edge(new, hub)
        n = self.primal.take_fresh("v")
        subdivide_with_apex(self.primal, a, p_old, q, n)
        self._set_face(p_old, {hub, new, y})
        self._set_face(n, {hub, x, new})
        self._set_face(q, self.face[q] | {new})


def glue_wheels(spec: GluingSpec) -> Tuple[Graph, Graph]:
    """Return ``(primal, dual)`` where ``dual`` glues the wheels of ``spec``.

    Dual vertices are named ``w<i>h`` and ``w<i>r<j>`` after the wheel that
    introduced them; gluing identifies a child wheel's face corners with the
    parent face corners in listed order.
    """
    adjacency = _validate_gluing(spec)
    b = _GluingBuilder()

    def build(i: int, names: Dict[str, VertexId], anchor: int) -> None:
        # ``names`` maps local labels already fixed by gluing to global ids.
        k = spec.wheels[i]
        rim = k - 1
        for lab in ["h"] + [f"r{j}" for j in range(rim)]:
            names.setdefault(lab, f"w{i}{lab}")
        if k > 4:
            # Rim vertices anchor+3 ... anchor-1 are inserted one by one between
            # the previous one and r_anchor, so every insertion splits a face.
            last = f"r{(anchor + 2) % rim}"
            for step in range(3, rim):
                lab = f"r{(anchor + step) % rim}"
                b.grow_rim(names["h"], names[last], names[f"r{anchor % rim}"], names[lab])
                last = lab

    def k4_labels(k: int, m: int) -> Tuple[Tuple[str, str, str], str]:
        face = _local_face(k, m)
        if k == 4:
            (apex,) = [x for x in ("h", "r0", "r1", "r2") if x not in face]
        else:
            apex = f"r{(m + 2) % (k - 1)}"
        return face, apex

    seen = {0}
    names0: Dict[str, VertexId] = {lab: f"w0{lab}" for lab in ("h", "r0", "r1", "r2")}
    b.start(names0)
    build(0, names0, anchor=0)
    global_names = {0: names0}
    queue = [0]
    while queue:
        i = queue.pop(0)
        for fi, j, fj in adjacency[i]:
            if j in seen:
                continue
            seen.add(j)
            kj = spec.wheels[j]
            parent_face = [global_names[i][lab] for lab in _local_face(spec.wheels[i], fi)]
            face, apex = k4_labels(kj, fj)
            names = dict(zip(face, parent_face))
            names[apex] = f"w{j}{apex}"
            b.glue_k4(*parent_face, names[apex])
            build(j, names, anchor=fj if kj > 4 else 0)
            global_names[j] = names
            queue.append(j)
    return b.primal, b.dual


def random_gluing_spec(n_wheels: int, seed: Optional[int] = None, max_size: int = 7) -> GluingSpec:
    rng = random.Random(seed)
    sizes = [rng.randint(4, max_size) for _ in range(n_wheels)]
    free = {i: list(range(_face_count(k))) for i, k in enumerate(sizes)}
    gluings = []
    for j in range(1, n_wheels):
        candidates = [i for i in range(j) if free[i]]
        i = rng.choice(candidates)
        fi = free[i].pop(rng.randrange(len(free[i])))
        fj = free[j].pop(rng.randrange(len(free[j])))
        gluings.append((i, fi, j, fj))
    return GluingSpec(sizes, gluings)
