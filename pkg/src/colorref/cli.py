"""Command-line front end.

Exit codes: 0 success, 1 negative verdict (not equitable, not isomorphic,
no counterexample found), 2 bad arguments or unparseable input, 3 the
refinement hit its iteration cap without stabilising.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from pathlib import Path

from .coloring import colorings_isomorphic
from .formats import (
    emit_coloring,
    emit_dot,
    emit_edge_list,
    emit_trace_document,
    parse_coloring,
    parse_dimacs,
    parse_edge_list,
    trace_document,
)
from .graph import expand_edges, random_graph
from .oracle import search_refinement_counterexample, violation_witness
from .refine import find_inequitable_pair, refine_to_fixpoint, zero_coloring

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_NOT_CONVERGED = 3

DIMACS_SUFFIXES = {".col", ".clq", ".dimacs"}


def _write_atomic(path: Path, text: str) -> None:
    # Write to a sibling temp file and rename, so a failure mid-write never
    # leaves a partial file at the destination.
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _load_graph(path: str, fmt: str | None):
    if fmt is None:
        fmt = "dimacs" if Path(path).suffix in DIMACS_SUFFIXES else "edgelist"
    text = Path(path).read_text()
    try:
        return parse_edge_list(text) if fmt == "edgelist" else parse_dimacs(text)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from exc


def _load_coloring(path: str, vertex_count: int | None):
    try:
        return parse_coloring(Path(path).read_text(), vertex_count)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from exc


def _cmd_refine(args) -> int:
    g = _load_graph(args.graph, args.format)
    expansion = None
    if args.expand_edges:
        expansion = expand_edges(g)
        target = expansion.graph
    else:
        target = g
    if args.coloring is not None:
        initial = _load_coloring(args.coloring, target.vertex_count)
    else:
        initial = zero_coloring(target)
    max_iters = args.max_iters
    if max_iters is not None and max_iters < 1:
        raise ValueError("--max-iters must be at least 1")
    trace = refine_to_fixpoint(target, initial, max_iters)

    edge_colors = ()
    if expansion is not None:
        base = expansion.original_count
        final = trace.final
        edge_colors = tuple(
            (u, v, final.colors[base + i])
            for i, (u, v) in enumerate(expansion.virtual_edges)
        )
    doc = trace_document(trace, target, edge_colors)
    echo = (
        f"# colorref refine input={args.graph}"
        f" coloring={args.coloring or '-'}"
        f" expand_edges={str(args.expand_edges).lower()}"
        f" max_iters={max_iters if max_iters is not None else target.vertex_count + 2}\n"
    )
    trace_path = Path(args.trace) if args.trace else Path(args.graph + ".trace")
    _write_atomic(trace_path, echo + emit_trace_document(doc))
    if args.dot:
        _write_atomic(Path(args.dot), emit_dot(target, trace.final))
    converged = trace.converged_at if trace.converged_at is not None else "none"
    print(
        f"n={target.vertex_count} m={target.edge_count}"
        f" K_final={trace.final.palette_size} converged_at={converged}"
    )
    return EXIT_OK if trace.converged_at is not None else EXIT_NOT_CONVERGED


def _cmd_verify(args) -> int:
    g = _load_graph(args.graph, args.format)
    c = _load_coloring(args.coloring, g.vertex_count)
    pair = find_inequitable_pair(g, c)
    if pair is None:
        print("equitable")
        return EXIT_OK
    print(f"not equitable ({pair[0]},{pair[1]})")
    return EXIT_NEGATIVE


def _cmd_compare(args) -> int:
    c1 = _load_coloring(args.coloring1, None)
    c2 = _load_coloring(args.coloring2, None)
    if len(c1.colors) != len(c2.colors):
        raise ValueError(
            f"colorings cover {len(c1.colors)} and {len(c2.colors)} vertices"
        )
    witness = colorings_isomorphic(c1, c2)
    if witness is None:
        print("not isomorphic")
        return EXIT_NEGATIVE
    print(" ".join(f"{a}->{b}" for a, b in enumerate(witness.forward)))
    return EXIT_OK


def _cmd_search(args) -> int:
    w = search_refinement_counterexample(args.max_n, args.seed, args.attempts)
    if w is None:
        print(
            f"no counterexample found"
            f" (max_n={args.max_n} attempts={args.attempts} seed={args.seed})"
        )
        return EXIT_NEGATIVE
    out = Path(args.out)
    _write_atomic(out / "graph.edges", emit_edge_list(w.graph))
    _write_atomic(out / "initial.colors", emit_coloring(w.initial))
    u, v = w.merged_pair
    trace = refine_to_fixpoint(w.graph, w.initial)
    note = [
        f"# colorref search max_n={args.max_n} attempts={args.attempts} seed={args.seed}",
        f"vertices {w.graph.vertex_count}",
        f"edges {w.graph.edge_count}",
        f"step {w.step}",
        f"merged_pair {u} {v}",
        f"palette {w.palette_before} -> {w.palette_after}"
        + (" (shrank)" if w.palette_shrank else ""),
        "replay: refining initial.colors over graph.edges assigns vertices"
        f" {u} and {v} one color after step {w.step + 1}"
        f" while they differ at step {w.step}.",
        "coloring_at_step "
        + " ".join(map(str, trace.colorings[w.step].colors)),
        "coloring_after_step "
        + " ".join(map(str, trace.colorings[w.step + 1].colors)),
    ]
    _write_atomic(out / "replay.txt", "\n".join(note) + "\n")
    print(
        f"witness: n={w.graph.vertex_count} m={w.graph.edge_count}"
        f" step={w.step} merged=({u},{v})"
        f" K={w.palette_before}->{w.palette_after}; wrote {out}"
    )
    return EXIT_OK


def _cmd_gen(args) -> int:
    g = random_graph(args.n, args.p, args.seed)
    text = f"# colorref gen n={args.n} p={args.p} seed={args.seed}\n" + emit_edge_list(g)
    if args.out:
        _write_atomic(Path(args.out), text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colorref",
        description="Iterated vertex recoloring to the coarsest stable partition.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("refine", help="refine a graph coloring to its stable point")
    p.add_argument("graph", help="graph file (edge list or DIMACS)")
    p.add_argument("--format", choices=["edgelist", "dimacs"],
                   help="input format (default: by file extension)")
    p.add_argument("--coloring", help="initial coloring file (default: all-zero start)")
    p.add_argument("--max-iters", type=int, dest="max_iters",
                   help="iteration cap (default: vertex count + 2)")
    p.add_argument("--expand-edges", action="store_true", dest="expand_edges",
                   help="subdivide every edge with a virtual vertex before refining")
    p.add_argument("--trace", help="trace output path (default: <graph>.trace)")
    p.add_argument("--dot", help="also write the final coloring as DOT")
    p.set_defaults(func=_cmd_refine)

    p = sub.add_parser("verify", help="check that a coloring is a stable point")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--format", choices=["edgelist", "dimacs"])
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("compare", help="test two colorings for isomorphism")
    p.add_argument("coloring1")
    p.add_argument("coloring2")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("search", help="look for a class-merging initial coloring")
    p.add_argument("--max-n", type=int, default=5, dest="max_n")
    p.add_argument("--attempts", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="witness", help="output directory (default: witness)")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("gen", help="generate a seeded random graph as an edge list")
    p.add_argument("n", type=int)
    p.add_argument("p", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=_cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
