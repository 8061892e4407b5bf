"""Crown decompositions: construction for general and bipartite hosts, and
an independent verifier.

A crown decomposition of a host graph is a partition (C, H, R) where the
crown C is a non-empty independent set, the head H separates C from the
rest R, and a witness matching inside H x C saturates H.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractViolationError, PreconditionError
from .graphs import BipartiteGraph, Edge, Graph, normalize_edge
from .matching import Matching, alternating_reachability, hk_matching, minimal_hall_set


@dataclass(frozen=True)
class CrownDecomposition:
    crown: frozenset[int]
    head: frozenset[int]
    rest: frozenset[int]
    witness: frozenset[Edge]  # normalized (min, max) pairs inside head x crown


@dataclass(frozen=True)
class CrownOrMatching:
    """Outcome of the general crown lemma: exactly one field is set."""

    matching: frozenset[Edge] | None = None
    crown: CrownDecomposition | None = None


@dataclass(frozen=True)
class BipartiteCrownOutcome:
    """Outcome of the bipartite crown lemma: exactly one field is set."""

    matching: Matching | None = None
    crown: CrownDecomposition | None = None


def _host_view(host: Graph | BipartiteGraph) -> Graph:
    return host.as_graph() if isinstance(host, BipartiteGraph) else host


def verify_crown(host: Graph | BipartiteGraph, cd: CrownDecomposition) -> bool:
    """Check all crown invariants against the host graph."""
    g = _host_view(host)
    crown, head, rest = cd.crown, cd.head, cd.rest
    if not crown:
        return False
    if crown & head or crown & rest or head & rest:
        return False
    if crown | head | rest != g.vertices:
        return False
    for u, v in g.edges:
        if u in crown and v in crown:
            return False
        if (u in crown and v in rest) or (u in rest and v in crown):
            return False
    covered: set[int] = set()
    endpoints: set[int] = set()
    for u, v in cd.witness:
        if normalize_edge(u, v) not in g.edges:
            return False
        if u in head and v in crown:
            h = u
        elif v in head and u in crown:
            h = v
        else:
            return False
        if u in endpoints or v in endpoints:
            return False
        endpoints.update((u, v))
        covered.add(h)
    return covered == set(head)


def _greedy_maximal_matching(g: Graph) -> list[Edge]:
    used: set[int] = set()
    matched = []
    for u, v in g.sorted_edges():
        if u not in used and v not in used:
            matched.append((u, v))
            used.update((u, v))
    return matched


def crown_or_matching(g: Graph, k: int) -> CrownOrMatching:
    """Either a matching of k+1 edges or a crown decomposition of ``g``.

    Requires a graph without isolated vertices on at least 3k+1 vertices.
    The construction: take a maximal matching M; if it is small, the
    unmatched side I is independent and a maximum bipartite matching between
    V(M) and I either gets large enough or leaves an unsaturated I-vertex
    whose alternating reachability region is the crown.
    """
    if k < 0:
        raise PreconditionError("k-non-negative", "budget k must be non-negative")
    if g.isolated_vertices():
        raise PreconditionError(
            "no-isolated-vertices",
            f"graph has isolated vertices {sorted(g.isolated_vertices())[:5]}")
    if g.n < 3 * k + 1:
        raise PreconditionError(
            "minimum-size", f"need at least {3 * k + 1} vertices, got {g.n}")

    greedy = _greedy_maximal_matching(g)
    if len(greedy) >= k + 1:
        return CrownOrMatching(matching=frozenset(greedy[:k + 1]))

    v_m = sorted({v for e in greedy for v in e})
    independent = sorted(g.vertices - set(v_m))
    v_m_set = set(v_m)
    adj = {v: tuple(w for w in g.adjacency[v] if w in v_m_set) for v in independent}
    pair_i, pair_m = hk_matching(adj)
    if len(pair_i) >= k + 1:
        edges = sorted(normalize_edge(a, b) for a, b in pair_i.items())
        return CrownOrMatching(matching=frozenset(edges[:k + 1]))

    unsaturated = [v for v in independent if v not in pair_i]
    seen_i, seen_m = alternating_reachability(adj, pair_i, pair_m, unsaturated)
    crown = frozenset(seen_i)
    head = frozenset(seen_m)
    rest = g.vertices - crown - head
    witness = frozenset(normalize_edge(pair_m[h], h) for h in head)
    cd = CrownDecomposition(crown, head, rest, witness)
    if not verify_crown(g, cd):
        raise ContractViolationError("constructed crown failed verification")
    return CrownOrMatching(crown=cd)


def bipartite_crown(g: BipartiteGraph) -> BipartiteCrownOutcome:
    """Either a matching saturating side A, or a crown (C ⊆ A, H ⊆ B).

    Requires no isolated vertex in B and |B| >= |A|.  The crown is a minimal
    Hall violator C with head N(C); per the package convention an isolated
    A-vertex (which would force an empty head) is rejected, so callers strip
    those first.
    """
    if g.isolated_b():
        raise PreconditionError(
            "no-isolated-b", f"isolated B-vertices {sorted(g.isolated_b())[:5]}")
    if len(g.side_b) < len(g.side_a):
        raise PreconditionError(
            "b-at-least-a", f"|B| = {len(g.side_b)} < |A| = {len(g.side_a)}")

    violator = minimal_hall_set(g)
    if violator is None:
        pair_a, _ = hk_matching(g.adj_a)
        return BipartiteCrownOutcome(matching=Matching(frozenset(pair_a.items())))
    if not violator.neighborhood:
        raise PreconditionError(
            "no-isolated-a",
            f"isolated A-vertex {min(violator.x)} admits only an empty-head crown")

    crown = violator.x
    head = violator.neighborhood
    sub_adj = {b: tuple(a for a in g.adj_b[b] if a in crown) for b in sorted(head)}
    pair_h, _ = hk_matching(sub_adj)
    if len(pair_h) != len(head):
        raise ContractViolationError("witness matching does not saturate the head")
    witness = frozenset(normalize_edge(h, c) for h, c in pair_h.items())
    rest = (g.side_a | g.side_b) - crown - head
    cd = CrownDecomposition(crown, head, rest, witness)
    if not verify_crown(g, cd):
        raise ContractViolationError("constructed bipartite crown failed verification")
    return BipartiteCrownOutcome(crown=cd)
