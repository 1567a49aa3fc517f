"""Exact vertex and edge coloring plus the classical bound calculators.

The exact searches are DSATUR-ordered backtracking with the first greedy
clique pinned for symmetry breaking, run on the selected kernel backend.
Search budgets never produce wrong answers: an exhausted budget yields an
indeterminate result carrying the best proven bounds.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from . import core
from .graphs import SizeLimitError, UndirectedGraph, connected_components
from .construct import line_graph_of

DEFAULT_VERTEX_CAP = 60
DEFAULT_EDGE_CAP = 60


@dataclass(frozen=True)
class VertexColoring:
    """Total assignment vertex -> color index, 0-based."""

    colors: tuple[int, ...]
    palette_size: int


@dataclass(frozen=True)
class EdgeColoring:
    """Total assignment edge id -> color index, 0-based."""

    colors: dict[int, int]
    palette_size: int

    def __hash__(self):
        return hash((tuple(sorted(self.colors.items())), self.palette_size))


@dataclass(frozen=True)
class Bounds:
    brooks: int
    shannon: int
    greedy: int


@dataclass(frozen=True)
class ChromaticResult:
    """Outcome of an exact minimization.

    ``value`` is None when the search budget ran out; ``lower``/``upper``
    are then the best proven bounds.  ``nodes`` counts search-tree nodes
    over all decision calls, so it is identical across kernel backends.
    """

    value: Optional[int]
    lower: int
    upper: int
    witness: Optional[object]
    nodes: int
    elapsed: float

    @property
    def exact(self) -> bool:
        return self.value is not None


@dataclass(frozen=True)
class ColoringReport:
    gamma: ChromaticResult
    chi: ChromaticResult
    bounds: Bounds


def _neighbor_masks(g: UndirectedGraph) -> list[int]:
    masks = [0] * g.vertex_count
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def greedy_clique(g: UndirectedGraph) -> tuple[int, ...]:
    """Single-pass greedy clique over vertices sorted by degree (desc), id (asc)."""
    order = sorted(range(g.vertex_count), key=lambda v: (-g.degrees[v], v))
    clique: list[int] = []
    for v in order:
        if all(v in g.adjacency[u] for u in clique):
            clique.append(v)
    return tuple(sorted(clique))


def smallest_last_order(g: UndirectedGraph) -> list[int]:
    n = g.vertex_count
    deg = list(g.degrees)
    removed = [False] * n
    order = []
    for _ in range(n):
        v = min((x for x in range(n) if not removed[x]), key=lambda x: (deg[x], x))
        removed[v] = True
        order.append(v)
        for w in g.adjacency[v]:
            if not removed[w]:
                deg[w] -= 1
    order.reverse()
    return order


def greedy_coloring(g: UndirectedGraph) -> VertexColoring:
    """First-fit along the smallest-last order; deterministic."""
    colors = [-1] * g.vertex_count
    top = -1
    for v in smallest_last_order(g):
        used = {colors[w] for w in g.adjacency[v] if colors[w] >= 0}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
        top = max(top, c)
    return VertexColoring(tuple(colors), top + 1)


def coloring_bounds(g: UndirectedGraph) -> Bounds:
    """Brooks, Shannon and greedy upper bounds for the vertex/edge problems."""
    rho = max(g.degrees, default=0)
    brooks = rho
    for block in connected_components(g):
        if all(g.degrees[v] == len(block) - 1 for v in block):
            brooks = rho + 1  # complete component K_{rho+1}
            break
        if rho == 2 and len(block) % 2 == 1 and all(g.degrees[v] == 2 for v in block):
            brooks = rho + 1  # odd cycle component
            break
    shannon = (3 * rho) // 2
    greedy = greedy_coloring(g).palette_size
    return Bounds(brooks=brooks, shannon=shannon, greedy=greedy)


def _decide(
    g: UndirectedGraph,
    k: int,
    pinned: Optional[list[int]] = None,
    node_budget: int = 0,
    deadline: float = 0.0,
) -> tuple[int, Optional[list[int]], int]:
    masks = _neighbor_masks(g)
    if pinned is None:
        pinned = [-1] * g.vertex_count
    return core.decide_coloring(g.vertex_count, masks, k, pinned, node_budget, deadline)


def decide_k_coloring(
    g: UndirectedGraph,
    k: int,
    max_vertices: int = DEFAULT_VERTEX_CAP,
    node_budget: int = 0,
    deadline: float = 0.0,
) -> tuple[int, Optional[VertexColoring], int]:
    """Three-way k-colorability decision: (core.SAT / UNSAT / ABORTED,
    witness or None, nodes searched).  The first greedy clique is pinned
    to break color symmetry."""
    if k < 1:
        raise ValueError("k must be positive")
    if g.vertex_count > max_vertices:
        raise SizeLimitError(
            f"vertex coloring capped at {max_vertices} vertices, got {g.vertex_count}"
        )
    clique = greedy_clique(g)
    if len(clique) > k:
        return core.UNSAT, None, 0
    pinned = [-1] * g.vertex_count
    for c, v in enumerate(clique):
        pinned[v] = c
    status, colors, nodes = _decide(g, k, pinned, node_budget, deadline)
    witness = VertexColoring(tuple(colors), k) if status == core.SAT else None
    return status, witness, nodes


def is_k_colorable(
    g: UndirectedGraph,
    k: int,
    max_vertices: int = DEFAULT_VERTEX_CAP,
    node_budget: int = 0,
    deadline: float = 0.0,
) -> Optional[VertexColoring]:
    """Exact search for a proper k-coloring; None means none exists.

    Raises SizeLimitError above ``max_vertices`` and SearchBudgetExceeded
    when the budget runs out before an answer is proven.
    """
    status, witness, _ = decide_k_coloring(g, k, max_vertices, node_budget, deadline)
    if status == core.ABORTED:
        raise SearchBudgetExceeded(f"{k}-colorability undecided within budget")
    return witness


class SearchBudgetExceeded(RuntimeError):
    pass


def chromatic_number(
    g: UndirectedGraph,
    max_vertices: int = DEFAULT_VERTEX_CAP,
    node_budget: int = 0,
    deadline: float = 0.0,
) -> ChromaticResult:
    """Exact chromatic number by iterative deepening from the greedy clique size."""
    if g.vertex_count > max_vertices:
        raise SizeLimitError(
            f"vertex coloring capped at {max_vertices} vertices, got {g.vertex_count}"
        )
    t0 = time.perf_counter()
    n = g.vertex_count
    if n == 0:
        return ChromaticResult(0, 0, 0, VertexColoring((), 0), 0, 0.0)
    ub = greedy_coloring(g)
    if g.edge_count == 0:
        return ChromaticResult(
            1, 1, 1, VertexColoring((0,) * n, 1), 0, time.perf_counter() - t0
        )
    clique = greedy_clique(g)
    lb = max(2, len(clique))
    pinned = [-1] * n
    for c, v in enumerate(clique):
        pinned[v] = c
    total_nodes = 0
    for k in range(lb, ub.palette_size + 1):
        if k >= ub.palette_size:
            # The greedy witness already proves k colors suffice.
            return ChromaticResult(
                k, k, k, ub, total_nodes, time.perf_counter() - t0
            )
        status, colors, nodes = _decide(g, k, pinned, node_budget, deadline)
        total_nodes += nodes
        if status == core.SAT:
            return ChromaticResult(
                k,
                k,
                k,
                VertexColoring(tuple(colors), k),
                total_nodes,
                time.perf_counter() - t0,
            )
        if status == core.ABORTED:
            return ChromaticResult(
                None,
                k,
                ub.palette_size,
                None,
                total_nodes,
                time.perf_counter() - t0,
            )
    raise AssertionError("greedy upper bound was not reached")


def chromatic_class(
    g: UndirectedGraph,
    max_edges: int = DEFAULT_EDGE_CAP,
    node_budget: int = 0,
    deadline: float = 0.0,
) -> ChromaticResult:
    """Exact edge chromatic number, solved as vertex coloring of the line graph."""
    if g.edge_count > max_edges:
        raise SizeLimitError(
            f"edge coloring capped at {max_edges} edges, got {g.edge_count}"
        )
    lg = line_graph_of(g)
    result = chromatic_number(
        lg.graph, max_vertices=max_edges, node_budget=node_budget, deadline=deadline
    )
    witness = None
    if result.witness is not None:
        vc: VertexColoring = result.witness
        witness = EdgeColoring(
            {lg.edge_of_g_vertex[i]: vc.colors[i] for i in range(lg.graph.vertex_count)},
            vc.palette_size,
        )
    return ChromaticResult(
        result.value, result.lower, result.upper, witness, result.nodes, result.elapsed
    )


def verify_vertex_coloring(g: UndirectedGraph, c: VertexColoring) -> list[int]:
    """Edge ids whose endpoints share a color; empty iff proper."""
    if len(c.colors) != g.vertex_count:
        raise ValueError("coloring does not cover every vertex")
    return [
        eid
        for eid, (u, v) in enumerate(g.edges, start=1)
        if c.colors[u] == c.colors[v]
    ]


def verify_edge_coloring(g: UndirectedGraph, c: EdgeColoring) -> list[tuple[int, int]]:
    """Pairs of adjacent edge ids that share a color; empty iff proper."""
    missing = [eid for eid in range(1, g.edge_count + 1) if eid not in c.colors]
    if missing:
        raise ValueError(f"coloring misses edges {missing}")
    bad = []
    for v in range(g.vertex_count):
        inc = g.incident_edge_ids[v]
        for i in range(len(inc)):
            for j in range(i + 1, len(inc)):
                if c.colors[inc[i]] == c.colors[inc[j]]:
                    bad.append((inc[i], inc[j]))
    return sorted(set(bad))


def exhaustive_chromatic_number(g: UndirectedGraph, max_vertices: int = 8) -> int:
    """Reference answer by scanning all k**n assignments in lexicographic
    order with prefix pruning.  Used to double-check small counterexamples."""
    n = g.vertex_count
    if n > max_vertices:
        raise SizeLimitError(f"exhaustive scan capped at {max_vertices} vertices")
    if n == 0:
        return 0
    if g.edge_count == 0:
        return 1
    adj = g.adjacency

    def any_proper(k: int) -> bool:
        colors = [-1] * n

        def step(v: int) -> bool:
            if v == n:
                return True
            for c in range(k):
                if all(colors[w] != c for w in adj[v] if w < v):
                    colors[v] = c
                    if step(v + 1):
                        return True
            colors[v] = -1
            return False

        return step(0)

    k = 1
    while not any_proper(k):
        k += 1
    return k


def coloring_report(
    g: UndirectedGraph,
    max_vertices: int = DEFAULT_VERTEX_CAP,
    max_edges: int = DEFAULT_EDGE_CAP,
    node_budget: int = 0,
    deadline: float = 0.0,
) -> ColoringReport:
    gamma = chromatic_number(g, max_vertices, node_budget, deadline)
    chi = chromatic_class(g, max_edges, node_budget, deadline)
    return ColoringReport(gamma=gamma, chi=chi, bounds=coloring_bounds(g))
