from hypothesis import given, strategies as st

from halin.engine import D3A, D3B, HookSet, ReductionEvent, find_reduction_at, is_irreducible, reduce
from halin.generators import cube, k4, prism, random_d3_reducible, random_halin, truncated_tetrahedron, wheel
from halin.graph import is_k4
from halin.oracles import applicable_reductions


def test_find_triangle_in_prism():
    ev = find_reduction_at(prism(), "a")
    assert ev.kind == D3A and ev.triangle == ("a", "c", "d")
    assert ev.outside == ("b", "f", "e")


def test_find_path_in_w6(w6_letters):
    ev = find_reduction_at(w6_letters, "b")
    assert (ev.kind, ev.p, ev.q, ev.r, ev.apex) == (D3B, "a", "b", "c", "h")


def test_find_nothing_in_cube():
    g = cube()
    assert all(find_reduction_at(g, v) is None for v in g)


def test_find_absent_vertex():
    assert find_reduction_at(k4(), "zz") is None


def test_reduce_k4_is_empty():
    final, trace, verdict = reduce(k4())
    assert trace.events == [] and is_k4(final)


def test_reduce_w6_two_path_steps():
    final, trace, _ = reduce(wheel(6))
    assert [ev.kind for ev in trace.events] == [D3B, D3B]
    assert is_k4(final)


def test_reduce_truncated_tetrahedron():
    final, trace, _ = reduce(truncated_tetrahedron())
    assert is_k4(final) and [ev.kind for ev in trace.events] == [D3A] * 4


def test_reduce_leaves_input_untouched():
    g = prism()
    before = g.copy()
    reduce(g)
    assert g == before


def test_is_irreducible():
    assert is_irreducible(k4())
    assert is_irreducible(cube())
    assert not is_irreducible(prism())


def test_event_text():
    assert str(ReductionEvent(D3A, "a", "c", "d", ("b", "f", "e"), "t0")) == "D3a a c d -> t0"
    assert str(ReductionEvent(D3B, "a", "b", "c", apex="h")) == "D3b a b c apex h"


def test_trace_lines_and_dot():
    _, trace, _ = reduce(prism())
    assert trace.lines() == ["D3a a c d -> t0"]
    dot = trace.to_dot()
    assert dot.startswith("digraph trace {") and '"a" -> "t0"' in dot


def test_veto_short_circuits():
    calls = []

    def first(g, ev):
        calls.append("first")
        return False

    def second(g, ev):
        calls.append("second")
        return True

    _, trace, _ = reduce(prism(), HookSet([first, second], [], lambda g: None))
    assert "second" not in calls and trace.events == [] and trace.vetoes > 0


def test_hooks_called_in_order():
    seen = []
    hooks = HookSet(
        [lambda g, ev: seen.append(1) or True, lambda g, ev: seen.append(2) or True],
        [],
    )
    reduce(prism(), hooks)
    assert seen == [1, 2]


def test_finalizer_result_returned():
    assert reduce(k4(), HookSet(finalizer=lambda g: "done")).verdict == "done"


def test_degenerate_inputs_do_not_crash():
    from halin.generators import cycle_graph, path_graph
    from halin.graph import Graph

    for g in (Graph(), path_graph(3), cycle_graph(5)):
        final, trace, _ = reduce(g)
        assert trace.events == [] and final == g


def _check_run(g):
    final, trace, _ = reduce(g)
    n = g.vertex_count
    d3a = sum(ev.kind == D3A for ev in trace.events)
    d3b = len(trace.events) - d3a
    assert n - final.vertex_count == 2 * d3a + d3b
    assert trace.queue_insertions <= 8 * n
    assert len(trace.events) <= n
    assert applicable_reductions(final) == [] or trace.vetoes > 0
    final.validate()
    return final


@given(st.integers(4, 60), st.integers(0, 10**6), st.sampled_from([0.0, 0.3, 0.5, 1.0]))
def test_conservation_and_work_bound(n, seed, prob):
    if prob == 1.0 and n % 2:
        n += 1
    assert is_k4(_check_run(random_d3_reducible(n, seed, prob)))


@given(st.lists(st.integers(3, 6), min_size=1, max_size=8), st.integers(0, 10**6))
def test_conservation_on_halin(profile, seed):
    _check_run(random_halin(profile, seed))
