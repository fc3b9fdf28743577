"""Immutable simple undirected graphs on dense integer vertex ids."""

from __future__ import annotations

import random
from dataclasses import dataclass


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0 .. vertex_count - 1``.

    ``adjacency[v]`` is the strictly increasing tuple of neighbours of ``v``.
    Instances are validated on construction and never mutated afterwards,
    so they are safe to share between concurrent readers.
    """

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = self.vertex_count
        if n < 0:
            raise ValueError("vertex_count must be non-negative")
        if len(self.adjacency) != n:
            raise ValueError("adjacency must have one row per vertex")
        arcs = set()
        for v, row in enumerate(self.adjacency):
            prev = -1
            for u in row:
                if not 0 <= u < n:
                    raise ValueError(f"neighbour {u} of vertex {v} is out of range")
                if u == v:
                    raise ValueError(f"self-loop at vertex {v}")
                if u <= prev:
                    raise ValueError(f"adjacency row {v} must be strictly increasing")
                prev = u
                arcs.add((v, u))
        for v, u in arcs:
            if (u, v) not in arcs:
                raise ValueError(f"edge {{{u}, {v}}} is missing its reverse entry")

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` pairs with ``u < v``, lexicographically ordered."""
        return [
            (u, v)
            for u in range(self.vertex_count)
            for v in self.adjacency[u]
            if u < v
        ]


@dataclass(frozen=True)
class Original:
    """Provenance tag: an expanded-graph vertex that was an input vertex."""

    vertex: int


@dataclass(frozen=True)
class VirtualEdge:
    """Provenance tag: an expanded-graph vertex that stands in for an edge."""

    endpoints: tuple[int, int]


@dataclass(frozen=True)
class ExpandedGraph:
    """A graph whose every edge has been subdivided by one virtual vertex.

    Input vertices keep their ids ``0 .. n - 1``; virtual vertices occupy
    ``n .. n + m - 1`` in lexicographic order of the edges they replace.
    ``origin[w]`` records which of the two kinds ``w`` is.
    """

    graph: Graph
    origin: tuple[Original | VirtualEdge, ...]

    def __post_init__(self) -> None:
        if len(self.origin) != self.graph.vertex_count:
            raise ValueError("origin must tag every vertex")
        n = self.original_count
        for w, tag in enumerate(self.origin):
            if isinstance(tag, Original):
                if w >= n or tag.vertex != w:
                    raise ValueError("original vertices must keep ids 0..n-1")
                if any(u < n for u in self.graph.adjacency[w]):
                    raise ValueError(f"original vertex {w} is adjacent to an original")
            else:
                row = self.graph.adjacency[w]
                if row != tuple(sorted(tag.endpoints)):
                    raise ValueError(f"virtual vertex {w} must join exactly its endpoints")

    @property
    def original_count(self) -> int:
        return sum(1 for tag in self.origin if isinstance(tag, Original))

    @property
    def virtual_edges(self) -> list[tuple[int, int]]:
        """Endpoint pairs of the virtual vertices, in virtual-id order."""
        return [tag.endpoints for tag in self.origin if isinstance(tag, VirtualEdge)]


def new_graph(vertex_count: int, edges) -> Graph:
    """Build a validated graph from unordered id pairs.

    Duplicate pairs collapse to a single edge. Raises ValueError on
    self-loops and on ids outside ``0 .. vertex_count - 1``.
    """
    if vertex_count < 0:
        raise ValueError("vertex_count must be non-negative")
    pairs = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop ({u}, {v}) is not allowed")
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise ValueError(f"edge ({u}, {v}) outside 0..{vertex_count - 1}")
        pairs.add((u, v) if u < v else (v, u))
    rows: list[list[int]] = [[] for _ in range(vertex_count)]
    for u, v in sorted(pairs):
        rows[u].append(v)
        rows[v].append(u)
    return Graph(vertex_count, tuple(tuple(sorted(row)) for row in rows))


def degree(g: Graph, v: int) -> int:
    """Number of neighbours of ``v``."""
    if not 0 <= v < g.vertex_count:
        raise ValueError(f"vertex {v} out of range")
    return len(g.adjacency[v])


def expand_edges(g: Graph) -> ExpandedGraph:
    """Subdivide every edge of ``g`` with a fresh virtual vertex.

    The edge ``{u, v}`` is replaced by a virtual vertex ``w`` together with
    the edges ``{u, w}`` and ``{w, v}``; no direct edge between input
    vertices survives. Virtual ids are assigned in lexicographic order of
    the ``(min, max)`` edge pairs, so equal inputs always produce identical
    expansions.
    """
    edge_list = g.edges()
    n, m = g.vertex_count, len(edge_list)
    rows: list[list[int]] = [[] for _ in range(n + m)]
    origin: list[Original | VirtualEdge] = [Original(v) for v in range(n)]
    for i, (u, v) in enumerate(edge_list):
        w = n + i
        rows[u].append(w)
        rows[v].append(w)
        rows[w] = [u, v]
        origin.append(VirtualEdge((u, v)))
    graph = Graph(n + m, tuple(tuple(sorted(row)) for row in rows))
    return ExpandedGraph(graph, tuple(origin))


def random_graph(n: int, edge_probability: float, seed: int) -> Graph:
    """Sample each of the n-choose-2 edges independently with the given probability.

    Equal ``(n, edge_probability, seed)`` arguments yield a bit-identical
    graph on every run and platform: only ``random.Random.random`` is used,
    whose sequence is guaranteed stable for a fixed seed.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if not 0 <= edge_probability <= 1:
        raise ValueError("edge_probability must be in [0, 1]")
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < edge_probability
    ]
    return new_graph(n, edges)
