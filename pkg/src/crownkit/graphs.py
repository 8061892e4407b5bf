"""Core data model: graphs, bipartite graphs, CNF formulas, problem instances.

Every type in this module is immutable after construction; operations are
pure functions that return new values, so everything here is safe to share
between threads.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .errors import InvalidInstanceError

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    """Return the endpoints of an undirected edge in (min, max) order."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph over non-negative integer vertex ids.

    Edges are stored normalized as ``(min, max)`` pairs; the symmetric
    adjacency relation is derived from them.  ``weights`` is optional and
    defaults to 1 per vertex, so weighted and unweighted code paths share
    this one type.
    """

    vertices: frozenset[int]
    edges: frozenset[Edge]
    weights: Mapping[int, int] | None = None

    def __post_init__(self) -> None:
        if self.weights is not None:
            # weight 1 is the default, so drop redundant entries: graphs
            # that only differ in them compare and serialize identically
            trimmed = {v: w for v, w in self.weights.items() if w != 1}
            object.__setattr__(self, "weights", trimmed or None)
        for v in self.vertices:
            if v < 0:
                raise InvalidInstanceError(f"negative vertex id {v}")
        for u, v in self.edges:
            if u == v:
                raise InvalidInstanceError(f"self-loop at vertex {u}")
            if u > v:
                raise InvalidInstanceError(f"edge ({u}, {v}) is not normalized")
            if u not in self.vertices or v not in self.vertices:
                raise InvalidInstanceError(f"edge ({u}, {v}) has endpoint outside vertex set")
        if self.weights is not None:
            for v in self.vertices:
                w = self.weights.get(v, 1)
                if w < 1:
                    raise InvalidInstanceError(f"vertex {v} has non-positive weight {w}")

    @staticmethod
    def build(vertices: Iterable[int], edges: Iterable[tuple[int, int]] = (),
              weights: Mapping[int, int] | None = None) -> Graph:
        """Normalize raw edge pairs and construct a validated graph."""
        vs = frozenset(vertices)
        es = frozenset(normalize_edge(u, v) for u, v in edges)
        return Graph(vs, es, dict(weights) if weights else None)

    @cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        nbrs: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return {v: tuple(sorted(ns)) for v, ns in nbrs.items()}

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def weight(self, v: int) -> int:
        if self.weights is None:
            return 1
        return self.weights.get(v, 1)

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_vertices(self) -> list[int]:
        return sorted(self.vertices)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def isolated_vertices(self) -> frozenset[int]:
        return frozenset(v for v in self.vertices if not self.adjacency[v])

    def without_vertices(self, removed: Iterable[int]) -> Graph:
        """Delete vertices (ids of the survivors are preserved)."""
        gone = set(removed)
        unknown = gone - self.vertices
        if unknown:
            raise InvalidInstanceError(f"cannot delete unknown vertices {sorted(unknown)}")
        keep = self.vertices - gone
        edges = frozenset(e for e in self.edges if e[0] in keep and e[1] in keep)
        weights = None
        if self.weights is not None:
            weights = {v: w for v, w in self.weights.items() if v in keep}
        return Graph(keep, edges, weights)


def complement(g: Graph) -> Graph:
    """Complement on the same vertex set: uv is an edge iff it was not one."""
    vs = g.sorted_vertices()
    edges = set()
    for i, u in enumerate(vs):
        for v in vs[i + 1:]:
            if (u, v) not in g.edges:
                edges.add((u, v))
    return Graph(g.vertices, frozenset(edges), dict(g.weights) if g.weights else None)


def connected_components(g: Graph) -> tuple[frozenset[int], ...]:
    """Maximal connected vertex sets, ordered by smallest member."""
    seen: set[int] = set()
    parts: list[frozenset[int]] = []
    for start in g.sorted_vertices():
        if start in seen:
            continue
        comp = {start}
        queue = [start]
        while queue:
            v = queue.pop()
            for w in g.adjacency[v]:
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        parts.append(frozenset(comp))
    return tuple(parts)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``keep``; ids are preserved, so the id map is the
    identity on kept vertices."""
    keep_set = frozenset(keep)
    unknown = keep_set - g.vertices
    if unknown:
        raise InvalidInstanceError(f"unknown vertices in keep set: {sorted(unknown)}")
    edges = frozenset(e for e in g.edges if e[0] in keep_set and e[1] in keep_set)
    weights = None
    if g.weights is not None:
        weights = {v: w for v, w in g.weights.items() if v in keep_set}
    return Graph(keep_set, edges, weights), {v: v for v in sorted(keep_set)}


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with an explicit (A, B) bipartition.

    Edges are stored oriented as ``(a, b)`` with ``a in side_a`` and
    ``b in side_b``.
    """

    side_a: frozenset[int]
    side_b: frozenset[int]
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        overlap = self.side_a & self.side_b
        if overlap:
            raise InvalidInstanceError(f"sides overlap on {sorted(overlap)}")
        for a, b in self.edges:
            if a not in self.side_a or b not in self.side_b:
                raise InvalidInstanceError(f"edge ({a}, {b}) does not cross from A to B")

    @staticmethod
    def build(side_a: Iterable[int], side_b: Iterable[int],
              edges: Iterable[tuple[int, int]] = ()) -> BipartiteGraph:
        """Orient raw edges so the A-endpoint comes first, then validate."""
        sa, sb = frozenset(side_a), frozenset(side_b)
        oriented = set()
        for u, v in edges:
            if u in sa and v in sb:
                oriented.add((u, v))
            elif v in sa and u in sb:
                oriented.add((v, u))
            else:
                raise InvalidInstanceError(f"edge ({u}, {v}) does not cross the sides")
        return BipartiteGraph(sa, sb, frozenset(oriented))

    @cached_property
    def adj_a(self) -> dict[int, tuple[int, ...]]:
        nbrs: dict[int, list[int]] = {a: [] for a in self.side_a}
        for a, b in self.edges:
            nbrs[a].append(b)
        return {a: tuple(sorted(ns)) for a, ns in nbrs.items()}

    @cached_property
    def adj_b(self) -> dict[int, tuple[int, ...]]:
        nbrs: dict[int, list[int]] = {b: [] for b in self.side_b}
        for a, b in self.edges:
            nbrs[b].append(a)
        return {b: tuple(sorted(ns)) for b, ns in nbrs.items()}

    def neighborhood_of_a(self, xs: Iterable[int]) -> frozenset[int]:
        out: set[int] = set()
        for a in xs:
            out.update(self.adj_a[a])
        return frozenset(out)

    def neighborhood_of_b(self, ys: Iterable[int]) -> frozenset[int]:
        out: set[int] = set()
        for b in ys:
            out.update(self.adj_b[b])
        return frozenset(out)

    def isolated_b(self) -> frozenset[int]:
        return frozenset(b for b in self.side_b if not self.adj_b[b])

    def isolated_a(self) -> frozenset[int]:
        return frozenset(a for a in self.side_a if not self.adj_a[a])

    def as_graph(self, weights: Mapping[int, int] | None = None) -> Graph:
        """View as a plain undirected graph (for crown verification)."""
        return Graph(self.side_a | self.side_b,
                     frozenset(normalize_edge(a, b) for a, b in self.edges),
                     dict(weights) if weights else None)


@dataclass(frozen=True)
class WeightedBipartiteGraph:
    """Bipartite graph with positive integer vertex weights (default 1)."""

    base: BipartiteGraph
    weights: Mapping[int, int]

    def __post_init__(self) -> None:
        all_vs = self.base.side_a | self.base.side_b
        for v, w in self.weights.items():
            if v not in all_vs:
                raise InvalidInstanceError(f"weight given for unknown vertex {v}")
            if w < 1:
                raise InvalidInstanceError(f"vertex {v} has non-positive weight {w}")

    @staticmethod
    def build(base: BipartiteGraph, weights: Mapping[int, int] | None = None) -> WeightedBipartiteGraph:
        return WeightedBipartiteGraph(base, dict(weights or {}))

    def weight(self, v: int) -> int:
        return self.weights.get(v, 1)

    def weight_of(self, vs: Iterable[int]) -> int:
        return sum(self.weight(v) for v in vs)

    @cached_property
    def w_b_max(self) -> int:
        """Maximum weight over side B; 0 when B is empty."""
        if not self.base.side_b:
            return 0
        return max(self.weight(b) for b in self.base.side_b)


@dataclass(frozen=True)
class CnfFormula:
    """CNF formula: clauses are non-empty sets of signed 1-based literals."""

    num_vars: int
    clauses: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.num_vars < 0:
            raise InvalidInstanceError("negative variable count")
        for i, clause in enumerate(self.clauses):
            if not clause:
                raise InvalidInstanceError(f"clause {i} is empty")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise InvalidInstanceError(f"clause {i}: literal {lit} out of range")
                if -lit in clause:
                    raise InvalidInstanceError(
                        f"clause {i}: contains both {abs(lit)} and its negation")

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def variables_used(self) -> frozenset[int]:
        return frozenset(abs(lit) for clause in self.clauses for lit in clause)


class ProblemTag(str, enum.Enum):
    VC = "vc"
    NK_COLORING = "nk-coloring"
    MAXSAT = "maxsat"
    NK_LIST_COLORING = "nk-list-coloring"
    LONGEST_CYCLE_VC = "longest-cycle-vc"
    PCOC = "pcoc"
    PCOC_WEIGHTED = "pcoc-weighted"
    CVD_CLIQUE_BOUND = "cvd-clique-bound"


GRAPH_TAGS = frozenset({
    ProblemTag.VC, ProblemTag.NK_COLORING, ProblemTag.NK_LIST_COLORING,
    ProblemTag.LONGEST_CYCLE_VC, ProblemTag.PCOC, ProblemTag.PCOC_WEIGHTED,
    ProblemTag.CVD_CLIQUE_BOUND,
})


def is_vertex_cover(g: Graph, s: Iterable[int]) -> bool:
    s_set = set(s)
    return all(u in s_set or v in s_set for u, v in g.edges)


@dataclass(frozen=True)
class ProblemInstance:
    """A tagged problem with its payload and budgets."""

    tag: ProblemTag
    payload: Graph | CnfFormula
    k: int
    p: int | None = None
    ell: int | None = None
    modulator: frozenset[int] | None = None
    lists: Mapping[int, frozenset[int]] | None = None

    def __post_init__(self) -> None:
        if self.k < 0:
            raise InvalidInstanceError("budget k must be non-negative")
        if self.tag in GRAPH_TAGS and not isinstance(self.payload, Graph):
            raise InvalidInstanceError(f"{self.tag.value} requires a graph payload")
        if self.tag is ProblemTag.MAXSAT and not isinstance(self.payload, CnfFormula):
            raise InvalidInstanceError("maxsat requires a CNF payload")
        if self.tag in (ProblemTag.PCOC, ProblemTag.PCOC_WEIGHTED):
            if self.p is None or self.p < 1:
                raise InvalidInstanceError(f"{self.tag.value} requires p >= 1")
        if self.tag is ProblemTag.LONGEST_CYCLE_VC:
            if self.ell is None:
                raise InvalidInstanceError("longest-cycle-vc requires a cycle length")
            if self.modulator is None:
                raise InvalidInstanceError("longest-cycle-vc requires a modulator")
            g = self.payload
            assert isinstance(g, Graph)
            if not self.modulator <= g.vertices:
                raise InvalidInstanceError("modulator contains unknown vertices")
            if not is_vertex_cover(g, self.modulator):
                raise InvalidInstanceError("modulator is not a vertex cover of the payload")
            if len(self.modulator) != self.k:
                raise InvalidInstanceError("modulator size must equal the budget k")
        if self.tag is ProblemTag.NK_LIST_COLORING:
            if self.lists is None:
                raise InvalidInstanceError("nk-list-coloring requires color lists")
            g = self.payload
            assert isinstance(g, Graph)
            missing = g.vertices - set(self.lists)
            if missing:
                raise InvalidInstanceError(f"color lists missing for vertices {sorted(missing)}")

    @property
    def graph(self) -> Graph:
        if not isinstance(self.payload, Graph):
            raise InvalidInstanceError("instance payload is not a graph")
        return self.payload

    @property
    def formula(self) -> CnfFormula:
        if not isinstance(self.payload, CnfFormula):
            raise InvalidInstanceError("instance payload is not a CNF formula")
        return self.payload
