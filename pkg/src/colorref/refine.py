"""Simultaneous recoloring of all vertices by neighbour-color counts.

One step replaces every vertex's color with the rank of its "portrait",
the vector counting its neighbours of each current color. Iterating the
step coarsens nothing and eventually stabilises; the stable point is an
equitable partition (any two same-colored vertices see identical color
counts around them).
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import Coloring, colorings_isomorphic
from .graph import Graph

# A portrait is the count vector of a vertex's neighbours per color,
# indexed by color id; its length equals the palette size in force.
Portrait = tuple[int, ...]


def _check_sizes(g: Graph, c: Coloring) -> None:
    if len(c.colors) != g.vertex_count:
        raise ValueError("coloring and graph have different vertex counts")


def zero_coloring(g: Graph) -> Coloring:
    """The all-equal start: every vertex gets color 0 (empty palette for n = 0)."""
    n = g.vertex_count
    return Coloring((0,) * n, 1 if n else 0)


def initial_portraits(g: Graph) -> list[Portrait]:
    """Per-vertex portraits under the all-equal start: the 1-vector ``(deg(v),)``.

    With a single color in play, counting neighbours per color is just
    counting neighbours, so degree-0 vertices need no special case.
    """
    return [(len(g.adjacency[v]),) for v in range(g.vertex_count)]


def compute_portrait(g: Graph, c: Coloring, v: int) -> Portrait:
    """Count the neighbours of ``v`` wearing each color of ``c``'s palette."""
    _check_sizes(g, c)
    if not 0 <= v < g.vertex_count:
        raise ValueError(f"vertex {v} out of range")
    counts = [0] * c.palette_size
    for u in g.adjacency[v]:
        counts[c.colors[u]] += 1
    return tuple(counts)


def index_portraits(portraits) -> Coloring:
    """Assign each distinct portrait its lexicographic rank as the new color.

    Any bijection from portraits to fresh color ids would do; fixing the
    lexicographic one makes runs reproducible. All portraits must have the
    same length (they were computed against one palette).
    """
    portraits = list(portraits)
    if portraits:
        width = len(portraits[0])
        if any(len(p) != width for p in portraits):
            raise ValueError("portraits of mixed lengths cannot be indexed together")
    distinct = sorted(set(portraits))
    rank = {p: i for i, p in enumerate(distinct)}
    return Coloring(tuple(rank[p] for p in portraits), len(distinct))


def refine_step(g: Graph, c: Coloring) -> Coloring:
    """One simultaneous recoloring: portraits under ``c``, then rank indexing."""
    _check_sizes(g, c)
    counts_per_vertex = []
    k = c.palette_size
    for v in range(g.vertex_count):
        counts = [0] * k
        for u in g.adjacency[v]:
            counts[c.colors[u]] += 1
        counts_per_vertex.append(tuple(counts))
    return index_portraits(counts_per_vertex)


@dataclass(frozen=True)
class RefinementTrace:
    """Full history of an iterated refinement.

    ``colorings[t]`` is the coloring after ``t`` steps (index 0 is the
    start). ``converged_at`` is the first ``t >= 1`` with ``colorings[t-1]``
    isomorphic to ``colorings[t]``, or None if the iteration cap was hit
    first.
    """

    colorings: tuple[Coloring, ...]
    palette_sizes: tuple[int, ...]
    converged_at: int | None

    @property
    def final(self) -> Coloring:
        return self.colorings[-1]


def refine_to_fixpoint(
    g: Graph,
    initial: Coloring,
    max_iters: int | None = None,
    *,
    palette_shortcut: bool = False,
) -> RefinementTrace:
    """Iterate ``refine_step`` until two consecutive colorings are isomorphic.

    Once that happens, every later step only relabels colors, so stopping
    is sound. ``max_iters`` defaults to ``vertex_count + 2``: from the
    all-equal start the partition stabilises within ``vertex_count`` steps
    and one more step witnesses the isomorphism. From other starts the
    process may in principle still be changing at the cap; the trace then
    reports ``converged_at=None`` rather than raising.

    ``palette_shortcut=True`` stops as soon as the palette size repeats.
    From the all-equal start that is equivalent to the isomorphism test;
    from arbitrary starts it is unsound (the palette size can repeat while
    classes still move) and is exposed only for cross-checking.
    """
    _check_sizes(g, initial)
    if max_iters is None:
        max_iters = g.vertex_count + 2
    if max_iters < 1:
        raise ValueError("max_iters must be at least 1")
    colorings = [initial]
    converged_at = None
    for t in range(1, max_iters + 1):
        nxt = refine_step(g, colorings[-1])
        prev = colorings[-1]
        colorings.append(nxt)
        if palette_shortcut:
            stable = prev.palette_size == nxt.palette_size
        else:
            stable = colorings_isomorphic(prev, nxt) is not None
        if stable:
            converged_at = t
            break
    return RefinementTrace(
        tuple(colorings),
        tuple(c.palette_size for c in colorings),
        converged_at,
    )


def find_inequitable_pair(g: Graph, c: Coloring) -> tuple[int, int] | None:
    """First vertex pair sharing a color but differing in portrait, if any."""
    _check_sizes(g, c)
    rep: dict[int, tuple[int, Portrait]] = {}
    for v in range(g.vertex_count):
        p = compute_portrait(g, c, v)
        col = c.colors[v]
        if col not in rep:
            rep[col] = (v, p)
        elif rep[col][1] != p:
            return (rep[col][0], v)
    return None


def verify_equitable(g: Graph, c: Coloring) -> bool:
    """True iff same-colored vertices always have identical portraits.

    Every stable point of the process is equitable. The converse needs
    distinct classes to carry distinct portraits as well: two singleton
    classes with equal portraits are equitable yet still merge under
    ``refine_step``.
    """
    return find_inequitable_pair(g, c) is None
