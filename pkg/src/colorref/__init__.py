"""Iterated vertex recoloring by neighbour-color counts.

Each step replaces every vertex's color with an index of its neighbourhood
portrait (the count of neighbours per current color) and stops once two
consecutive colorings are isomorphic; the result is the coarsest stable,
equitable refinement reachable from the start. The package bundles the
engine, comparison predicates, an independent brute-force oracle, text
formats, and a CLI.
"""

from .coloring import (
    ColorBijectionWitness,
    Coloring,
    Partition,
    coloring_from_labels,
    colorings_isomorphic,
    is_refinement,
    partition_of,
)
from .formats import (
    ParseError,
    TraceDocument,
    emit_coloring,
    emit_dot,
    emit_edge_list,
    emit_trace,
    emit_trace_document,
    parse_coloring,
    parse_dimacs,
    parse_edge_list,
    parse_trace,
    trace_document,
)
from .graph import (
    ExpandedGraph,
    Graph,
    Original,
    VirtualEdge,
    degree,
    expand_edges,
    new_graph,
    random_graph,
)
from .oracle import (
    CounterexampleWitness,
    naive_refine,
    replay_witness,
    search_refinement_counterexample,
    violation_witness,
)
from .refine import (
    Portrait,
    RefinementTrace,
    compute_portrait,
    find_inequitable_pair,
    index_portraits,
    initial_portraits,
    refine_step,
    refine_to_fixpoint,
    verify_equitable,
    zero_coloring,
)

__version__ = "0.1.0"

__all__ = [
    "ColorBijectionWitness",
    "Coloring",
    "CounterexampleWitness",
    "ExpandedGraph",
    "Graph",
    "Original",
    "ParseError",
    "Partition",
    "Portrait",
    "RefinementTrace",
    "TraceDocument",
    "VirtualEdge",
    "coloring_from_labels",
    "colorings_isomorphic",
    "compute_portrait",
    "degree",
    "emit_coloring",
    "emit_dot",
    "emit_edge_list",
    "emit_trace",
    "emit_trace_document",
    "expand_edges",
    "find_inequitable_pair",
    "index_portraits",
    "initial_portraits",
    "is_refinement",
    "naive_refine",
    "new_graph",
    "parse_coloring",
    "parse_dimacs",
    "parse_edge_list",
    "parse_trace",
    "partition_of",
    "random_graph",
    "refine_step",
    "refine_to_fixpoint",
    "replay_witness",
    "search_refinement_counterexample",
    "trace_document",
    "verify_equitable",
    "violation_witness",
    "zero_coloring",
]
