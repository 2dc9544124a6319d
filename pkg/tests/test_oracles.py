import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from halin.errors import SizeLimitExceeded
from halin.generators import (
    complete, cube, cycle_graph, expand_vertex, k4, path_graph, prism, random_d3_reducible, random_halin,
    halin_profile, truncated_tetrahedron, wheel,
)
from halin.graph import Edge, Graph
from halin.oracles import (
    all_graphs,
    all_maximal_reduction_results,
    applicable_reductions,
    apply_reduction,
    brute_force_3connected,
    brute_force_halin,
    brute_force_hamiltonian,
    canonical_form,
    connected_min_degree_graphs,
    graphs_isomorphic,
    halin_decompositions,
    verify_decomposition,
    verify_hamiltonian,
)
from halin.reconstruct import HalinDecomposition


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(g)
    h.add_edges_from(g.edges())
    return h


def _relabel(g, rng):
    verts = list(g)
    perm = verts[:]
    rng.shuffle(perm)
    m = {v: f"x{p}" for v, p in zip(verts, perm)}
    h = Graph()
    for v in perm:
        h.add_vertex(m[v])
    for u, v in g.edges():
        h.add_edge(m[u], m[v])
    return h


def test_brute_halin_examples():
    assert brute_force_halin(k4())
    assert brute_force_halin(prism())
    assert not brute_force_halin(cube())
    cycles = [sorted(c) for _, c in halin_decompositions(prism())]
    assert ["c", "d", "e", "f"] in cycles


def test_brute_halin_limit():
    with pytest.raises(SizeLimitExceeded):
        brute_force_halin(wheel(13))


def test_3connected_examples():
    assert brute_force_3connected(k4()) == (True, None)
    g = prism()
    g.remove_edge("a", "b")
    ok, pair = brute_force_3connected(g)
    assert not ok and pair is not None
    assert not nx.is_connected(_nx(g.subgraph_without(pair)))
    assert brute_force_3connected(path_graph(3))[0] is False


def test_3connected_disconnected_witness():
    g = Graph.from_edges([("a", "b"), ("c", "d")])
    ok, pair = brute_force_3connected(g)
    assert not ok and not nx.is_connected(_nx(g.subgraph_without(pair)))


@given(st.integers(4, 9), st.integers(0, 10**6), st.floats(0.2, 0.9))
def test_3connected_matches_networkx(n, seed, p):
    h = nx.gnp_random_graph(n, p, seed=seed)
    g = Graph()
    for v in h:
        g.add_vertex(str(v))
    for u, v in h.edges():
        g.add_edge(str(u), str(v))
    ok, pair = brute_force_3connected(g)
    assert ok == (n >= 4 and nx.node_connectivity(h) >= 3)
    if pair is not None:
        assert not nx.is_connected(_nx(g.subgraph_without(pair)))


def test_verify_hamiltonian_examples():
    assert verify_hamiltonian(k4(), ("a", "b", "c", "d"))
    assert not verify_hamiltonian(k4(), ("a", "b", "c"))
    g = prism()
    order = ("a", "b", "e", "d", "c", "f")
    expected = all(g.has_edge(order[i], order[(i + 1) % 6]) for i in range(6))
    assert verify_hamiltonian(g, order) == expected


def test_brute_hamiltonian():
    assert verify_hamiltonian(cube(), brute_force_hamiltonian(cube()))
    petersen = Graph.from_edges([(str(u), str(v)) for u, v in nx.petersen_graph().edges()])
    assert brute_force_hamiltonian(petersen) is None


def test_verify_decomposition_examples():
    star = HalinDecomposition(
        frozenset({Edge("a", "b"), Edge("a", "c"), Edge("a", "d")}),
        frozenset({Edge("b", "c"), Edge("c", "d"), Edge("b", "d")}),
    )
    path = HalinDecomposition(
        frozenset({Edge("a", "b"), Edge("b", "c"), Edge("c", "d")}),
        frozenset({Edge("a", "c"), Edge("b", "d"), Edge("a", "d")}),
    )
    assert verify_decomposition(k4(), star)
    assert not verify_decomposition(k4(), path)
    prism_dec = HalinDecomposition(
        frozenset(Edge.of(*e) for e in ("ab", "ac", "ad", "be", "bf")),
        frozenset(Edge.of(*e) for e in ("cd", "de", "ef", "fc")),
    )
    assert verify_decomposition(prism(), prism_dec)


def test_maximal_reduction_examples():
    assert all_maximal_reduction_results(k4()) == {canonical_form(k4())}
    assert all_maximal_reduction_results(wheel(6)) == {canonical_form(k4())}
    assert all_maximal_reduction_results(cube()) == {canonical_form(cube())}
    with pytest.raises(SizeLimitExceeded):
        all_maximal_reduction_results(wheel(10))


def test_isomorphism_examples():
    assert graphs_isomorphic(k4(), wheel(4))
    assert not graphs_isomorphic(k4(), cycle_graph(4))
    g = k4()
    expand_vertex(g, "a", "p", "q", "r")
    assert graphs_isomorphic(prism(), g)
    with pytest.raises(SizeLimitExceeded):
        graphs_isomorphic(wheel(11), wheel(11))


@given(st.integers(1, 9), st.integers(0, 10**6), st.floats(0.1, 0.9))
def test_canonical_form_matches_networkx(n, seed, p):
    rng = random.Random(seed)
    a = nx.gnp_random_graph(n, p, seed=seed)
    b = nx.gnp_random_graph(n, p, seed=seed + 1)
    ga = Graph.from_edges((str(u), str(v)) for u, v in a.edges())
    gb = Graph.from_edges((str(u), str(v)) for u, v in b.edges())
    for v in range(n):
        for g in (ga, gb):
            if str(v) not in g:
                g.add_vertex(str(v))
    same = nx.is_isomorphic(a, b)
    assert (canonical_form(ga) == canonical_form(gb)) == same
    assert graphs_isomorphic(ga, gb) == same
    assert canonical_form(_relabel(ga, rng)) == canonical_form(ga)


def test_canonical_form_on_regular_graphs():
    # colour refinement alone cannot split these
    rng = random.Random(3)
    for g in (cube(), prism(), truncated_tetrahedron(), complete(6)):
        assert canonical_form(_relabel(g, rng)) == canonical_form(g)
    k33 = Graph.from_edges((a, b) for a in "abc" for b in "xyz")
    assert canonical_form(k33) != canonical_form(prism())


def test_enumeration_matches_atlas():
    atlas = {}
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if 4 <= n <= 7 and nx.is_connected(h) and min(d for _, d in h.degree()) >= 3:
            atlas[n] = atlas.get(n, 0) + 1
    assert {n: len(connected_min_degree_graphs(n)) for n in range(4, 8)} == atlas
    assert len(all_graphs(5)) == 34


def _interchange_ok(g, x, y):
    gx, gy = apply_reduction(g, x), apply_reduction(g, y)
    if graphs_isomorphic(gx, gy):
        return True
    if y not in applicable_reductions(gx) or x not in applicable_reductions(gy):
        return False
    return graphs_isomorphic(apply_reduction(gx, y), apply_reduction(gy, x))


@pytest.mark.parametrize("n", [6, 7, 8])
def test_interchangeability(n):
    seen = set()
    stack = [g for g in connected_min_degree_graphs(n) if brute_force_3connected(g)[0]]
    states = 0
    while stack:
        g = stack.pop()
        key = canonical_form(g)
        if key in seen:
            continue
        seen.add(key)
        moves = applicable_reductions(g)
        for x, y in itertools.combinations(moves, 2):
            assert _interchange_ok(g, x, y), (g.edges(), x, y)
        stack.extend(apply_reduction(g, m) for m in moves)
        states += 1
    assert states > 0


def test_halin_decompositions_on_generated():
    for seed in range(20):
        g = random_halin(halin_profile(10, seed), seed)
        for tree, cyc in halin_decompositions(g):
            dec = HalinDecomposition(
                frozenset(tree),
                frozenset(Edge.of(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))),
            )
            assert verify_decomposition(g, dec)
