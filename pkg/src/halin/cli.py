"""Command-line front end.

Exit status: 0 when the answer is affirmative, 1 when it is negative, 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Dict, List, Optional, Sequence, TextIO

from . import generators, oracles
from .engine import ReductionTrace
from .errors import GraphError
from .graph import Graph, read_edge_list, serialize_edge_list
from .recognize import RecognitionOutcome, is_d3_reducible, is_dual_planar_3tree, is_halin, is_wheel
from .reconstruct import (
    HalinDecomposition,
    HamCycle,
    RotationSystem,
    cycle_from_trace,
    decomposition_from_outcome,
    embedding_from_trace,
)

EXIT_YES, EXIT_NO, EXIT_USAGE = 0, 1, 2

RECOGNIZERS: Dict[str, Callable[[Graph], RecognitionOutcome]] = {
    "halin": is_halin,
    "d3": is_d3_reducible,
    "wheel": is_wheel,
    "dual3tree": is_dual_planar_3tree,
}


def format_cycle(c: HamCycle) -> List[str]:
    return ["cycle: " + " ".join(c.order)]


def format_decomposition(d: HalinDecomposition) -> List[str]:
    out = [f"tree-edge: {u} {v}" for u, v in sorted(d.tree_edges)]
    out += [f"cycle-edge: {u} {v}" for u, v in sorted(d.cycle_edges)]
    return out


def format_rotation(r: RotationSystem) -> List[str]:
    return [f"rotation {v}: " + " ".join(r.rotation[v]) for v in sorted(r.rotation)]


def _generate(kind: str, size: Optional[int], seed: Optional[int]) -> Graph:
    fixed = {
        "k4": generators.k4,
        "prism": generators.prism,
        "cube": generators.cube,
        "octahedron": generators.octahedron,
        "truncated-tetrahedron": generators.truncated_tetrahedron,
    }
    if kind in fixed:
        return fixed[kind]()
    n = size if size is not None else 10
    if kind == "wheel":
        return generators.wheel(n)
    if kind == "d3":
        return generators.random_d3_reducible(n, seed)
    if kind == "dual3tree":
        if n % 2:
            raise GraphError("triangle-only growth produces even vertex counts")
        return generators.random_d3_reducible(n, seed, d3a_probability=1.0)
    if kind == "random-wheel":
        return generators.random_d3_reducible(n, seed, d3a_probability=0.0)
    if kind == "halin":
        return generators.random_halin(generators.halin_profile(n, seed), seed)
    if kind == "glued":
        return generators.glue_wheels(generators.random_gluing_spec(n, seed))[0]
    raise GraphError(f"unknown generator kind {kind!r}")


GENERATOR_KINDS = (
    "k4", "prism", "cube", "octahedron", "truncated-tetrahedron",
    "wheel", "d3", "dual3tree", "random-wheel", "halin", "glued",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="halin", description="Degree-3 reduction toolkit for planar graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p: argparse.ArgumentParser, trace: bool = True) -> None:
        p.add_argument("input", nargs="?", default=None, help="edge-list file (default: standard input)")
        if trace:
            p.add_argument(
                "--trace", action="store_const", const="text", default=None,
                help="print reduction steps; --trace=dot prints a digraph instead",
            )

    rec = sub.add_parser("recognize", help="test class membership")
    rec.add_argument("--class", dest="class_flag", choices=sorted(RECOGNIZERS), default="halin")
    with_input(rec)
    for name, text in (
        ("hamiltonian", "Hamiltonian cycle of a D3-reducible graph"),
        ("decompose", "tree and leaf cycle of a Halin graph"),
        ("embed", "rotation system of a D3-reducible graph"),
    ):
        with_input(sub.add_parser(name, help=text))
    gen = sub.add_parser("generate", help="print a generated graph as an edge list")
    gen.add_argument("--kind", choices=GENERATOR_KINDS, required=True)
    gen.add_argument("--size", type=int, default=None)
    gen.add_argument("--seed", type=int, default=None)
    orc = sub.add_parser("oracle", help="brute-force reference checks (small graphs)")
    orc.add_argument("--kind", choices=("halin", "3connected", "hamiltonian", "reductions"), required=True)
    with_input(orc, trace=False)
    return parser


def _emit_trace(out: TextIO, trace: ReductionTrace, mode: Optional[str]) -> None:
    if mode == "text":
        for line in trace.lines():
            out.write(f"trace: {line}\n")
    elif mode == "dot":
        out.write(trace.to_dot())


def _answer(out: TextIO, yes: bool, lines: Sequence[str] = ()) -> int:
    out.write(f"result: {'yes' if yes else 'no'}\n")
    for line in lines:
        out.write(line + "\n")
    return EXIT_YES if yes else EXIT_NO


def _run(args: argparse.Namespace, out: TextIO) -> int:
    if args.command == "generate":
        out.write(serialize_edge_list(_generate(args.kind, args.size, args.seed)))
        return EXIT_YES

    g = read_edge_list(args.input)

    if args.command == "oracle":
        return _run_oracle(args.kind, g, out)

    if args.command == "recognize":
        outcome = RECOGNIZERS[args.class_flag](g)
        code = _answer(out, outcome.accepted)
        _emit_trace(out, outcome.trace, args.trace)
        return code

    if args.command == "decompose":
        outcome = is_halin(g)
        lines = format_decomposition(decomposition_from_outcome(g, outcome)) if outcome.accepted else []
        code = _answer(out, outcome.accepted, lines)
        _emit_trace(out, outcome.trace, args.trace)
        return code

    outcome = is_d3_reducible(g)
    lines: List[str] = []
    if outcome.accepted:
        if args.command == "hamiltonian":
            lines = format_cycle(cycle_from_trace(g, outcome.trace))
        else:
            lines = format_rotation(embedding_from_trace(g, outcome.trace))
    code = _answer(out, outcome.accepted, lines)
    _emit_trace(out, outcome.trace, args.trace)
    return code


def _run_oracle(kind: str, g: Graph, out: TextIO) -> int:
    if kind == "halin":
        found = next(oracles.halin_decompositions(g), None)
        if found is None:
            return _answer(out, False)
        tree, cyc = found
        return _answer(out, True, [f"tree-edge: {u} {v}" for u, v in tree] + ["cycle: " + " ".join(cyc)])
    if kind == "3connected":
        ok, witness = oracles.brute_force_3connected(g)
        return _answer(out, ok, [] if witness is None else ["separator: " + " ".join(witness)])
    if kind == "hamiltonian":
        order = oracles.brute_force_hamiltonian(g)
        return _answer(out, order is not None, [] if order is None else ["cycle: " + " ".join(order)])
    forms = oracles.all_maximal_reduction_results(g)
    k4_form = oracles.canonical_form(generators.k4())
    lines = [f"classes: {len(forms)}"]
    lines += [f"endpoint: {n} vertices" for n, _ in sorted(forms)]
    return _answer(out, forms == {k4_form}, lines)


def main(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    # ``--trace=dot`` is only accepted in attached form so that a bare
    # ``--trace`` never swallows the input path
    trace_mode = None
    for i, tok in enumerate(argv):
        if tok.startswith("--trace="):
            trace_mode = tok.split("=", 1)[1]
            if trace_mode not in ("text", "dot"):
                err.write(f"error: --trace accepts text or dot, got {trace_mode!r}\n")
                return EXIT_USAGE
            argv[i] = "--trace"
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_YES if exc.code == 0 else EXIT_USAGE
    if trace_mode is not None:
        args.trace = trace_mode
    try:
        return _run(args, out)
    except (GraphError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
