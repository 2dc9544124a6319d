"""Linear-time recognition of Halin and D3-reducible graphs by local reductions."""

from .engine import HookSet, ReductionEvent, ReductionResult, ReductionTrace, reduce
from .errors import (
    GraphError,
    InvalidProfile,
    InvalidSize,
    InvalidVertex,
    MultiAdjacency,
    ParseError,
    PreconditionViolated,
    SizeLimitExceeded,
    SpecViolation,
)
from .graph import Edge, Graph, contract_triangle, parse_edge_list, serialize_edge_list, shorten_path
from .recognize import is_d3_reducible, is_dual_planar_3tree, is_halin, is_wheel
from .reconstruct import (
    HalinDecomposition,
    HamCycle,
    RotationSystem,
    dual_graph,
    halin_decomposition,
    hamiltonian_cycle,
    planar_embedding,
    trace_faces,
)

__all__ = [
    "Edge", "Graph", "GraphError", "HalinDecomposition", "HamCycle", "HookSet",
    "InvalidProfile", "InvalidSize", "InvalidVertex", "MultiAdjacency", "ParseError",
    "PreconditionViolated", "ReductionEvent", "ReductionResult", "ReductionTrace",
    "RotationSystem", "SizeLimitExceeded", "SpecViolation", "contract_triangle",
    "dual_graph", "halin_decomposition", "hamiltonian_cycle", "is_d3_reducible",
    "is_dual_planar_3tree", "is_halin", "is_wheel", "parse_edge_list", "planar_embedding",
    "reduce", "serialize_edge_list", "shorten_path", "trace_faces",
]
