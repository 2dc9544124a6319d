import itertools

import pytest
from hypothesis import given, strategies as st

from halin.errors import InvalidProfile, InvalidSize, PreconditionViolated, SpecViolation
from halin.generators import (
    GluingSpec,
    complete,
    cube,
    expand_vertex,
    glue_wheels,
    halin_profile,
    k4,
    octahedron,
    prism,
    random_d3_reducible,
    random_gluing_spec,
    random_halin,
    random_plane_tree,
    subdivide_with_apex,
    truncated_tetrahedron,
    wheel,
)
from halin.graph import Graph
from halin.oracles import brute_force_3connected, graphs_isomorphic
from halin.recognize import is_d3_reducible, is_dual_planar_3tree, is_halin, is_wheel
from halin.reconstruct import dual_graph, planar_embedding
from conftest import named


def test_named_graph_shapes():
    assert (k4().vertex_count, k4().edge_count) == (4, 6)
    assert (prism().vertex_count, prism().edge_count) == (6, 9)
    assert (cube().vertex_count, cube().edge_count) == (8, 12)
    assert all(octahedron().degree(v) == 4 for v in octahedron())
    assert complete(5).edge_count == 10


def test_wheel_small():
    assert graphs_isomorphic(wheel(4), k4())
    g = wheel(6)
    assert g.degree("h") == 5 and all(g.degree(f"r{i}") == 3 for i in range(5))


def test_wheel_too_small():
    with pytest.raises(InvalidSize):
        wheel(3)


def test_wheel_100_is_halin():
    assert is_halin(wheel(100))


def test_truncated_tetrahedron_shape():
    g = truncated_tetrahedron()
    assert (g.vertex_count, g.edge_count) == (12, 18)
    assert all(g.degree(v) == 3 for v in g)
    tri = {frozenset((u, v, w)) for u, v in g.edges() for w in g.neighbors(u) if g.has_edge(v, w)}
    assert len(tri) == 4
    assert is_d3_reducible(g) and not is_halin(g)


def test_expand_k4_gives_prism():
    g = k4()
    expand_vertex(g, "a", "p", "q", "r")
    assert graphs_isomorphic(g, prism())
    assert is_d3_reducible(g).trace.events[0].kind == "D3a"


def test_expand_rejects_hub():
    with pytest.raises(PreconditionViolated):
        expand_vertex(wheel(6), "h", "x", "y", "z")


def test_subdivide_k4_gives_w5():
    g = named("ha hc hd ac cd da")
    subdivide_with_apex(g, "a", "c", "h", "b")
    assert graphs_isomorphic(g, wheel(5))


def test_subdivide_w5_gives_w6():
    g = wheel(5)
    subdivide_with_apex(g, "r0", "r1", "h", "x")
    assert graphs_isomorphic(g, wheel(6))


def test_subdivide_needs_triangle():
    with pytest.raises(PreconditionViolated):
        subdivide_with_apex(prism(), "a", "b", "c", "x")


def test_random_d3_small_cases():
    assert graphs_isomorphic(random_d3_reducible(4, 9), k4())
    assert is_d3_reducible(random_d3_reducible(20, 1))
    assert is_wheel(random_d3_reducible(20, 1, d3a_probability=0))


def test_random_d3_is_seeded():
    assert random_d3_reducible(50, 5) == random_d3_reducible(50, 5)


@given(st.integers(4, 200), st.integers(0, 10**6), st.floats(0, 1))
def test_random_d3_hits_size(n, seed, prob):
    g = random_d3_reducible(n, seed, prob)
    assert g.vertex_count == n and is_d3_reducible(g)


@given(st.integers(2, 60), st.integers(0, 10**6))
def test_triangle_only_growth(half, seed):
    assert is_dual_planar_3tree(random_d3_reducible(2 * half, seed, d3a_probability=1.0))


def test_random_halin_examples():
    assert graphs_isomorphic(random_halin([6], 0), wheel(7))
    assert graphs_isomorphic(random_halin([3, 3], 0), prism())
    assert is_halin(random_halin([4, 3, 5, 3], 7))


def test_random_halin_profile_check():
    with pytest.raises(InvalidProfile):
        random_halin([3, 2], 1)
    with pytest.raises(InvalidProfile):
        random_plane_tree([], 1)


@given(st.integers(4, 150), st.integers(0, 10**6))
def test_halin_profile_size(size, seed):
    g = random_halin(halin_profile(size, seed), seed)
    assert g.vertex_count == size and is_halin(g)


@given(st.lists(st.integers(3, 7), min_size=1, max_size=10), st.integers(0, 10**6))
def test_plane_tree_has_no_degree_two(profile, seed):
    t = random_plane_tree(profile, seed)
    deg = {}
    for u, v in t.edges():
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    assert 2 not in deg.values()
    assert len(t.leaves()) == sum(1 for v in deg if deg[v] == 1)


def test_glue_single_k4():
    primal, dual = glue_wheels(GluingSpec([4]))
    assert graphs_isomorphic(primal, k4()) and graphs_isomorphic(dual, k4())


def test_glue_two_k4s():
    primal, dual = glue_wheels(GluingSpec([4, 4], [(0, 1, 1, 3)]))
    assert graphs_isomorphic(primal, prism())
    assert sorted(dual.degree(v) for v in dual) == [3, 3, 4, 4, 4]
    assert graphs_isomorphic(dual_graph(planar_embedding(primal)), dual)


def test_glue_single_wheel():
    primal, dual = glue_wheels(GluingSpec([7]))
    assert graphs_isomorphic(dual, wheel(7)) and graphs_isomorphic(primal, wheel(7))


@pytest.mark.parametrize("spec", [
    GluingSpec([4, 4, 4], [(0, 0, 1, 0), (1, 0, 2, 0)]),
    GluingSpec([4, 4], [(0, 0, 1, 0), (0, 1, 1, 1)]),
    GluingSpec([4, 4, 4], [(0, 0, 1, 0), (1, 1, 2, 0), (2, 1, 0, 1)]),
    GluingSpec([3], []),
    GluingSpec([4, 5], [(0, 4, 1, 0)]),
    GluingSpec([4, 4], []),
])
def test_glue_rejects_bad_specs(spec):
    with pytest.raises(SpecViolation):
        glue_wheels(spec)


@given(st.integers(1, 5), st.integers(0, 10**6))
def test_glued_primal_dual_consistent(w, seed):
    primal, dual = glue_wheels(random_gluing_spec(w, seed))
    assert is_d3_reducible(primal)
    assert graphs_isomorphic(dual_graph(planar_embedding(primal)), dual, limit=None)
    assert brute_force_3connected(dual)[0]
