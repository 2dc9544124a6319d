"""Class membership tests expressed as hook sets over :func:`halin.engine.reduce`."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Set, Tuple

from .engine import HookSet, ReductionEvent, ReductionTrace, reduce
from .graph import Graph, VertexId, is_k4


@dataclass
class HalinState:
    """Vertices known to lie on the leaf cycle of any Halin decomposition.

    ``vetoes`` counts reductions forbidden by the Halin hooks; on genuine
    Halin inputs it stays at zero.
    """

    known_outer: Set[VertexId] = field(default_factory=set)
    vetoes: int = 0


@dataclass
class RecognitionOutcome:
    accepted: bool
    trace: ReductionTrace
    halin_state: Optional[HalinState] = None

    def __bool__(self) -> bool:
        return self.accepted


def _always(g: Graph, ev: ReductionEvent) -> bool:
    return True


def _never(g: Graph, ev: ReductionEvent) -> bool:
    return False


def _run(g: Graph, hooks: HookSet) -> RecognitionOutcome:
    result = reduce(g, hooks)
    return RecognitionOutcome(bool(result.verdict), result.trace)


def is_d3_reducible(g: Graph) -> RecognitionOutcome:
    """Accept iff unrestricted reduction ends at ``K4``."""
    return _run(g, HookSet([_always], [_always], is_k4))


def is_wheel(g: Graph) -> RecognitionOutcome:
    """Accept iff ``g`` reduces to ``K4`` using path reductions only."""
    return _run(g, HookSet([_never], [_always], is_k4))


def is_dual_planar_3tree(g: Graph) -> RecognitionOutcome:
    """Accept iff ``g`` reduces to ``K4`` using triangle reductions only.

    These are exactly the planar duals of planar 3-trees.
    """
    return _run(g, HookSet([_always], [_never], is_k4))


def halin_hooks() -> Tuple[HookSet, HalinState]:
    """Hook set for Halin recognition together with the state it mutates.

    Exposed separately so that tests can splice extra observers into the
    hook lists.
    """
    state = HalinState()
    known = state.known_outer

    def triangle(g: Graph, ev: ReductionEvent) -> bool:
        inside = [x in known for x in ev.triangle]
        if all(inside):
            state.vetoes += 1
            return False
        for x, was_known, nbr in zip(ev.triangle, inside, ev.outside):
            known.discard(x)
            if was_known:
                known.add(nbr)
        known.add(ev.t)
        return True

    def path(g: Graph, ev: ReductionEvent) -> bool:
        if ev.apex in known:
            state.vetoes += 1
            return False
        known.discard(ev.q)
        known.add(ev.p)
        known.add(ev.r)
        # Shortening leaves n-1 vertices and m-2 edges; K4 afterwards iff (5, 8) now.
        if g.vertex_count == 5 and g.edge_count == 8:
            (fourth,) = [x for x in g if x not in (ev.p, ev.q, ev.r, ev.apex)]
            known.add(fourth)
        return True

    def finalize(g: Graph) -> bool:
        return is_k4(g) and any(x not in known for x in g)

    return HookSet([triangle], [path], finalize), state


def is_halin(g: Graph) -> RecognitionOutcome:
    """Accept iff ``g`` is a Halin graph (a plane tree plus its leaf cycle).

    Runs the reduction with a known-outer set: a triangle whose three
    vertices are all known-outer, or a path whose apex is known-outer, is
    never reduced.  The final ``K4`` must keep a vertex outside that set.
    """
    hooks, state = halin_hooks()
    result = reduce(g, hooks)
    return RecognitionOutcome(bool(result.verdict), result.trace, state)
