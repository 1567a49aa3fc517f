"""Finite censuses over small directed graphs with six arcs.

An oriented graph with all vertex degrees in {2, 4} traverses exactly six
arcs between color classes when its vertices are 3-colored, so the color
classes themselves form a digraph on k <= 4 vertices subject to five
structural requirements.  Everything in this module is small enough to
scan exhaustively; counts come out of the scans, they are never assumed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from .graphs import AdjacencyMatrix, Digraph, UndirectedGraph, are_isomorphic
from .coloring import chromatic_number

ARC_TOTAL = 6

# Reading of the degree requirement recorded in every report: each vertex
# of the abstract graph must have even total degree of at least 4, the
# interior vertex degree of the source graphs.
R5_READING = "total degree (in + out) even and >= 4 at every vertex"

_D4_PERMUTATIONS = tuple(
    tuple((s * i + a) % 4 for i in range(4)) for a in range(4) for s in (1, -1)
)


@dataclass(frozen=True)
class AbstractDigraph:
    """A candidate color-class digraph together with its 0/1 matrix."""

    digraph: Digraph
    matrix: AdjacencyMatrix

    @property
    def k(self) -> int:
        return self.matrix.order

    @classmethod
    def from_matrix(cls, matrix: AdjacencyMatrix) -> "AbstractDigraph":
        return cls(digraph=matrix.to_digraph(), matrix=matrix)

    def total_degrees(self) -> tuple[int, ...]:
        d = self.digraph
        return tuple(
            d.in_degrees[v] + d.out_degrees[v] for v in range(self.k)
        )

    def underlying_simple_graph(self) -> UndirectedGraph:
        """Forget orientation and multiplicity."""
        edges = {
            (min(u, v), max(u, v))
            for i, row in enumerate(self.matrix.entries)
            for j, x in enumerate(row)
            if x
            for u, v in ((i, j),)
        }
        return UndirectedGraph(self.k, sorted(edges))

    def arc_conflict_graph(self) -> UndirectedGraph:
        """Graph on the arcs; two arcs conflict iff they touch a common
        vertex.  Coloring it properly is coloring the arcs as edges of the
        underlying multigraph."""
        arcs = self.digraph.arcs
        m = len(arcs)
        edges = []
        for i in range(m):
            for j in range(i + 1, m):
                if set(arcs[i]) & set(arcs[j]):
                    edges.append((i, j))
        return UndirectedGraph(m, edges)


@dataclass(frozen=True)
class Requirement:
    name: str
    ok: bool
    evidence: str


@dataclass(frozen=True)
class RequirementReport:
    requirements: tuple[Requirement, ...]
    directed_girth: Optional[int]
    r5_reading: str = R5_READING

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.requirements)

    def requirement(self, name: str) -> Requirement:
        for r in self.requirements:
            if r.name == name:
                return r
        raise KeyError(name)

    def failures(self) -> tuple[str, ...]:
        return tuple(r.name for r in self.requirements if not r.ok)


def _weakly_connected_support(d: Digraph) -> bool:
    """True iff all arc-touching vertices lie in one undirected component."""
    support = {v for arc in d.arcs for v in arc}
    if not support:
        return True
    adj: dict[int, set[int]] = {v: set() for v in support}
    for u, v in d.arcs:
        adj[u].add(v)
        adj[v].add(u)
    start = min(support)
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == support


def directed_girth(d: Digraph) -> Optional[int]:
    """Length of the shortest directed cycle, or None if acyclic."""
    n = d.vertex_count
    best: Optional[int] = None
    for s in range(n):
        dist = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for w in d.successors[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            frontier = nxt
        for u, v in d.arcs:
            if v == s and u in dist:
                length = dist[u] + 1
                if best is None or length < best:
                    best = length
    return best


def find_directed_triangle(d: Digraph) -> Optional[tuple[int, int, int]]:
    succ = d.successors
    for u in range(d.vertex_count):
        for v in succ[u]:
            for w in succ[v]:
                if w != u and u in succ[w]:
                    return (u, v, w)
    return None


def check_r_requirements(ad: AbstractDigraph) -> RequirementReport:
    """Evaluate the five structural requirements independently.

    Every verdict carries evidence so a failing candidate explains itself.
    """
    d = ad.digraph
    m = ad.matrix
    k = ad.k
    if k < 1:
        raise ValueError("the abstract graph needs at least one vertex")

    total = m.total
    r1 = Requirement(
        "r1_arc_total",
        total == ARC_TOTAL,
        f"arc total {total}, required {ARC_TOTAL}",
    )

    unbalanced = [
        v for v in range(k) if d.in_degrees[v] != d.out_degrees[v]
    ]
    connected = _weakly_connected_support(d)
    if unbalanced:
        ev = f"in-degree != out-degree at vertices {unbalanced}"
    elif not connected:
        ev = "arcs split across more than one component"
    else:
        ev = "balanced and connected on its support"
    r2 = Requirement("r2_euler_circuit", not unbalanced and connected, ev)

    triangle = find_directed_triangle(d)
    r3 = Requirement(
        "r3_directed_triangle",
        triangle is not None,
        f"directed 3-cycle {triangle}" if triangle else "no directed 3-cycle",
    )

    rows, cols = m.row_sums, m.col_sums
    r4 = Requirement(
        "r4_row_col_match",
        rows == cols,
        f"row sums {rows}, column sums {cols}",
    )

    degs = ad.total_degrees()
    offenders = [v for v in range(k) if degs[v] % 2 or degs[v] < 4]
    r5 = Requirement(
        "r5_degree_parity",
        not offenders,
        f"total degrees {degs}"
        + (f"; offending vertices {offenders}" if offenders else ""),
    )

    return RequirementReport(
        requirements=(r1, r2, r3, r4, r5),
        directed_girth=directed_girth(d),
    )


def matrices_with_total(k: int, total: int = ARC_TOTAL) -> Iterator[AdjacencyMatrix]:
    """All zero-diagonal 0/1 matrices of order k with the given arc total,
    in lexicographic order of the chosen off-diagonal cells."""
    cells = [(i, j) for i in range(k) for j in range(k) if i != j]
    if total > len(cells):
        return
    for chosen in itertools.combinations(cells, total):
        grid = [[0] * k for _ in range(k)]
        for i, j in chosen:
            grid[i][j] = 1
        yield AdjacencyMatrix(grid)


@dataclass(frozen=True)
class CandidateEnumeration:
    k: int
    searched: int
    passing: tuple[AbstractDigraph, ...]  # every survivor, scan order
    representatives: tuple[AbstractDigraph, ...]  # deduplicated up to iso


def enumerate_r_candidates(k: int) -> CandidateEnumeration:
    """Scan every order-k matrix with six arcs against all requirements.

    k ranges over 1..4 only: beyond that the degree requirement is already
    impossible by counting (2 * 6 < 4 * k for k >= 4, with equality ruled
    out at k = 4 too since 12 < 16).
    """
    if not 1 <= k <= 4:
        raise ValueError("k must be between 1 and 4")
    searched = 0
    passing: list[AbstractDigraph] = []
    for matrix in matrices_with_total(k):
        searched += 1
        ad = AbstractDigraph.from_matrix(matrix)
        if check_r_requirements(ad).passed:
            passing.append(ad)
    reps: list[AbstractDigraph] = []
    for ad in passing:
        if not any(
            are_isomorphic(r.digraph, ad.digraph)[0] for r in reps
        ):
            reps.append(ad)
    return CandidateEnumeration(
        k=k,
        searched=searched,
        passing=tuple(passing),
        representatives=tuple(reps),
    )


@dataclass(frozen=True)
class SymmetricCensus:
    """The 20 placements of three mutual connections among four classes."""

    matrices: tuple[AdjacencyMatrix, ...]
    # index lists into `matrices`, keyed by the shape of the 3-edge graph
    iso_classes: dict[str, tuple[int, ...]]
    # orbits when the four classes are arranged in a square and only the
    # square's symmetries may relabel them
    square_orbits: tuple[tuple[int, ...], ...]

    @property
    def class_sizes(self) -> dict[str, int]:
        return {name: len(ix) for name, ix in self.iso_classes.items()}

    @property
    def square_orbit_count(self) -> int:
        return len(self.square_orbits)


_SHAPE_BY_DEGREES = {
    (0, 2, 2, 2): "triangle_plus_vertex",
    (1, 1, 2, 2): "path",
    (1, 1, 1, 3): "star",
}


def enumerate_symmetric_p4() -> SymmetricCensus:
    """All C(6,3) = 20 symmetric zero-diagonal 4x4 matrices with three
    above-diagonal units, partitioned two ways: by isomorphism type of the
    3-edge support graph, and by orbit under the symmetries of a square."""
    cells = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    matrices = []
    supports = []
    for chosen in itertools.combinations(cells, 3):
        grid = [[0] * 4 for _ in range(4)]
        for i, j in chosen:
            grid[i][j] = 1
            grid[j][i] = 1
        matrices.append(AdjacencyMatrix(grid))
        supports.append(frozenset(chosen))

    classes: dict[str, list[int]] = {}
    for idx, support in enumerate(supports):
        degs = [0, 0, 0, 0]
        for i, j in support:
            degs[i] += 1
            degs[j] += 1
        shape = _SHAPE_BY_DEGREES[tuple(sorted(degs))]
        classes.setdefault(shape, []).append(idx)

    orbit_of: dict[int, int] = {}
    orbits: list[list[int]] = []
    for idx, support in enumerate(supports):
        if idx in orbit_of:
            continue
        members = set()
        for perm in _D4_PERMUTATIONS:
            image = frozenset(
                (min(perm[i], perm[j]), max(perm[i], perm[j])) for i, j in support
            )
            members.add(supports.index(image))
        orbit = sorted(members)
        for member in orbit:
            orbit_of[member] = len(orbits)
        orbits.append(orbit)

    return SymmetricCensus(
        matrices=tuple(matrices),
        iso_classes={k: tuple(v) for k, v in sorted(classes.items())},
        square_orbits=tuple(tuple(o) for o in orbits),
    )


@dataclass(frozen=True)
class AsymmetricCensus:
    """Scan of asymmetric candidates: six arcs, row and column sums all 1
    or 2, tested against the three termwise target multisets."""

    searched: int
    row_sum_vectors: tuple[tuple[int, ...], ...]
    condition_counts: dict[tuple[int, ...], int]
    matching: tuple[AdjacencyMatrix, ...]

    @property
    def row_variant_count(self) -> int:
        return len(self.row_sum_vectors)

    @property
    def verdict(self) -> int:
        return len(self.matching)


TERMWISE_TARGETS = (
    (4, 4, 4, 4),
    (2, 4, 4, 4),
    (0, 4, 4, 4),
)


def enumerate_asymmetric_p4() -> AsymmetricCensus:
    """Exhaust all 4x4 zero-diagonal 0/1 matrices with six arcs whose row
    and column sums take values in {1, 2} only, and count those whose
    termwise sums row_i + col_i form one of the target multisets."""
    searched = 0
    row_vectors = set()
    condition_counts: dict[tuple[int, ...], int] = {t: 0 for t in TERMWISE_TARGETS}
    matching = []
    for matrix in matrices_with_total(4):
        rows, cols = matrix.row_sums, matrix.col_sums
        if not all(x in (1, 2) for x in rows + cols):
            continue
        searched += 1
        row_vectors.add(rows)
        termwise = tuple(sorted(r + c for r, c in zip(rows, cols)))
        hit = False
        for target in TERMWISE_TARGETS:
            if termwise == target:
                condition_counts[target] += 1
                hit = True
        if hit:
            matching.append(matrix)
    return AsymmetricCensus(
        searched=searched,
        row_sum_vectors=tuple(sorted(row_vectors)),
        condition_counts=condition_counts,
        matching=tuple(matching),
    )


def rho(ad: AbstractDigraph) -> int:
    """Largest total degree, multiplicities included."""
    return max(ad.total_degrees(), default=0)


def gamma_of_candidate(ad: AbstractDigraph) -> int:
    """Exact chromatic number of the underlying simple graph."""
    return chromatic_number(ad.underlying_simple_graph()).value


def chi_of_candidate(ad: AbstractDigraph) -> int:
    """Exact arc chromatic number: vertex-color the arc conflict graph."""
    return chromatic_number(ad.arc_conflict_graph()).value


def format_matrix(matrix: AdjacencyMatrix) -> str:
    """Fixed-width grid with row sums on the right, column sums below."""
    k = matrix.order
    width = 2
    lines = []
    for i, row in enumerate(matrix.entries):
        body = " ".join(f"{x:>{width}}" for x in row)
        lines.append(f"{body} | {matrix.row_sums[i]:>{width}}")
    lines.append("-" * (3 * k - 1) + "-+---")
    lines.append(
        " ".join(f"{c:>{width}}" for c in matrix.col_sums)
        + f" | {matrix.total:>{width}}"
    )
    return "\n".join(lines)
