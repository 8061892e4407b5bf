"""Seeded random instance generators, shared by the test suite and the
CLI's batch verify mode.  Everything here is deterministic in the supplied
``random.Random``."""

from __future__ import annotations

import random

from .errors import InvalidInstanceError
from .graphs import (
    BipartiteGraph,
    CnfFormula,
    Graph,
    ProblemInstance,
    ProblemTag,
    WeightedBipartiteGraph,
)


def random_graph(rng: random.Random, n: int, density: float) -> Graph:
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)
             if rng.random() < density]
    return Graph.build(range(1, n + 1), edges)


def random_bipartite(rng: random.Random, na: int, nb: int, density: float) -> BipartiteGraph:
    side_a = range(1, na + 1)
    side_b = range(na + 1, na + nb + 1)
    edges = [(a, b) for a in side_a for b in side_b if rng.random() < density]
    return BipartiteGraph.build(side_a, side_b, edges)


def random_cnf(rng: random.Random, n: int, m: int, max_width: int = 3) -> CnfFormula:
    clauses = []
    for _ in range(m):
        width = rng.randint(1, min(max_width, n))
        chosen = rng.sample(range(1, n + 1), width)
        clauses.append(frozenset(v if rng.random() < 0.5 else -v for v in chosen))
    return CnfFormula(n, tuple(clauses))


def _strip_isolated_b(g: BipartiteGraph) -> BipartiteGraph:
    dead = g.isolated_b()
    if not dead:
        return g
    return BipartiteGraph(g.side_a, g.side_b - dead, g.edges)


def _ensure_b_edges(rng: random.Random, g: BipartiteGraph) -> BipartiteGraph:
    """Give every B-vertex at least one neighbor (requires non-empty A)."""
    side_a = sorted(g.side_a)
    edges = set(g.edges)
    for b in sorted(g.isolated_b()):
        edges.add((rng.choice(side_a), b))
    return BipartiteGraph(g.side_a, g.side_b, frozenset(edges))


def feasible_expansion_input(rng: random.Random, q: int,
                             max_a: int = 4, extra_b: int = 6) -> BipartiteGraph:
    """Bipartite graph satisfying the plain expansion lemma preconditions."""
    na = rng.randint(1, max_a)
    nb = q * na + rng.randint(0, extra_b)
    g = random_bipartite(rng, na, nb, rng.uniform(0.2, 0.8))
    return _ensure_b_edges(rng, g)


def feasible_weighted_input(rng: random.Random, q: int, max_a: int = 4,
                            max_w: int = 3) -> WeightedBipartiteGraph:
    """Weighted bipartite graph with w(B) >= q|A| and no isolated b."""
    na = rng.randint(1, max_a)
    nb = rng.randint(1, max(1, q * na))
    g = _ensure_b_edges(rng, random_bipartite(rng, na, nb, rng.uniform(0.3, 0.8)))
    weights = {b: rng.randint(1, max_w) for b in g.side_b}
    for a in g.side_a:
        weights[a] = rng.randint(1, max_w)
    total = sum(weights[b] for b in g.side_b)
    deficit = q * na - total
    bs = sorted(g.side_b)
    i = 0
    while deficit > 0:
        weights[bs[i % len(bs)]] += min(deficit, max_w)
        gain = min(deficit, max_w)
        deficit -= gain
        i += 1
    return WeightedBipartiteGraph.build(g, weights)


def feasible_additive_input(rng: random.Random, q: int, max_a: int = 4,
                            extra_b: int = 5) -> BipartiteGraph:
    na = rng.randint(1, max_a)
    nb = q * na + rng.randint(1, extra_b)
    g = random_bipartite(rng, na, nb, rng.uniform(0.3, 0.9))
    return _ensure_b_edges(rng, g)


def feasible_balanced_input(rng: random.Random, max_a: int = 4, max_b: int = 6,
                            max_w: int = 3) -> tuple[WeightedBipartiteGraph, int]:
    na = rng.randint(1, max_a)
    nb = rng.randint(0, max_b)
    g = random_bipartite(rng, na, nb, rng.uniform(0.3, 0.9))
    if nb:
        g = _ensure_b_edges(rng, g)
    weights = {v: rng.randint(1, max_w) for v in g.side_a | g.side_b}
    wg = WeightedBipartiteGraph.build(g, weights)
    q = wg.w_b_max + rng.randint(0, 3)
    return wg, q


def feasible_crown_input(rng: random.Random, max_n: int = 12) -> tuple[Graph, int]:
    """Graph without isolated vertices plus a budget k with n >= 3k + 1."""
    while True:
        n = rng.randint(2, max_n)
        g = random_graph(rng, n, rng.uniform(0.15, 0.6))
        g = g.without_vertices(g.isolated_vertices())
        if g.n >= 1 and g.m >= 1:
            k = rng.randint(0, (g.n - 1) // 3)
            return g, k


def feasible_bipartite_crown_input(rng: random.Random, max_a: int = 5,
                                   max_b: int = 8) -> BipartiteGraph:
    """No isolated vertices on either side and |B| >= |A|."""
    while True:
        na = rng.randint(1, max_a)
        nb = rng.randint(na, max_b)
        g = _ensure_b_edges(rng, random_bipartite(rng, na, nb, rng.uniform(0.2, 0.7)))
        if not g.isolated_a():
            return g


def greedy_vertex_cover(g: Graph) -> frozenset[int]:
    cover: set[int] = set()
    for u, v in g.sorted_edges():
        if u not in cover and v not in cover:
            cover.update((u, v))
    return frozenset(cover)


def random_instance(tag: ProblemTag, rng: random.Random, max_n: int = 10) -> ProblemInstance:
    """A random instance of the tagged problem, sized within oracle guards."""
    if tag is ProblemTag.VC:
        g = random_graph(rng, rng.randint(1, max_n), rng.uniform(0.05, 0.5))
        return ProblemInstance(tag, g, rng.randint(0, 8))
    if tag is ProblemTag.NK_COLORING:
        g = random_graph(rng, rng.randint(1, min(max_n, 9)), rng.uniform(0.1, 0.9))
        return ProblemInstance(tag, g, rng.randint(0, 3))
    if tag is ProblemTag.MAXSAT:
        n = rng.randint(1, min(max_n, 12))
        phi = random_cnf(rng, n, rng.randint(1, 20))
        return ProblemInstance(tag, phi, rng.randint(0, 14))
    if tag is ProblemTag.NK_LIST_COLORING:
        n = rng.randint(1, min(max_n, 7))
        g = random_graph(rng, n, rng.uniform(0.1, 0.7))
        k = rng.randint(0, min(2, n))
        universe = range(1, n + 4)
        lists = {v: frozenset(rng.sample(universe, n - k)) for v in g.vertices}
        return ProblemInstance(tag, g, k, lists=lists)
    if tag is ProblemTag.LONGEST_CYCLE_VC:
        while True:
            g = random_graph(rng, rng.randint(3, max_n), rng.uniform(0.15, 0.6))
            cover = greedy_vertex_cover(g)
            if cover:
                return ProblemInstance(tag, g, len(cover), ell=rng.randint(3, 6),
                                       modulator=cover)
    if tag in (ProblemTag.PCOC, ProblemTag.PCOC_WEIGHTED):
        g = random_graph(rng, rng.randint(1, max_n), rng.uniform(0.05, 0.5))
        return ProblemInstance(tag, g, rng.randint(0, 3), p=rng.choice([1, 2, 3]))
    if tag is ProblemTag.CVD_CLIQUE_BOUND:
        g = random_graph(rng, rng.randint(1, max_n), rng.uniform(0.1, 0.6))
        return ProblemInstance(tag, g, rng.randint(0, 4))
    raise InvalidInstanceError(f"no generator for tag {tag}")
