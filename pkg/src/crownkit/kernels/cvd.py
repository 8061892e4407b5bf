"""Clique-count bounding rule for cluster vertex deletion: after the rule
reaches its fixpoint, at most 6k cliques remain outside the P3-packing
modulator."""

from __future__ import annotations

from itertools import combinations

from ..expansion import expansion_lemma
from ..formats import serialize_certificate
from ..graphs import BipartiteGraph, Graph, ProblemInstance, ProblemTag
from .outcome import KernelOutcome, RuleApplication
from .coc import _component_layout


def greedy_p3_packing(g: Graph) -> list[tuple[int, int, int]]:
    """Maximal vertex-disjoint packing of induced 3-vertex paths, found by
    rescanning triples in id order after every hit."""
    alive = set(g.vertices)
    packing: list[tuple[int, int, int]] = []
    found = True
    while found:
        found = False
        for triple in combinations(sorted(alive), 3):
            u, v, w = triple
            edge_count = int(g.has_edge(u, v)) + int(g.has_edge(v, w)) + int(g.has_edge(u, w))
            if edge_count == 2:
                packing.append(triple)
                alive.difference_update(triple)
                found = True
                break
    return packing


def bound_cvd_cliques(g: Graph, k: int) -> KernelOutcome:
    """Decide, or reduce until at most 6k' clique components remain outside
    the recomputed P3-packing modulator.

    A packing larger than k is an immediate NO; isolated cliques are
    deleted; otherwise a 2-expansion head H owns |H| disjoint P3's, so H
    joins the solution and its crown cliques disappear.
    """
    trace: list[RuleApplication] = []
    work, budget = g, k
    while True:
        packing = greedy_p3_packing(work)
        if len(packing) > budget:
            trace.append(RuleApplication("cvd.packing-exceeds-budget"))
            return KernelOutcome.decide(False, trace)
        if not packing:
            trace.append(RuleApplication("cvd.cluster-graph"))
            return KernelOutcome.decide(True, trace)
        modulator = frozenset(v for triple in packing for v in triple)
        cliques, links = _component_layout(work, modulator)
        isolated = [rep for rep, nbrs in sorted(links.items()) if not nbrs]
        if isolated:
            gone = sorted(v for rep in isolated for v in cliques[rep])
            work = work.without_vertices(gone)
            trace.append(RuleApplication(
                "cvd.isolated-cliques", vertices_deleted=tuple(gone)))
            continue
        if len(cliques) <= 6 * budget:
            break
        edges = {(u, rep) for rep, nbrs in links.items() for u in nbrs}
        cert = expansion_lemma(BipartiteGraph.build(modulator, cliques.keys(), edges), 2)
        heads = cert.x
        gone = sorted(set(heads) | {v for rep in cert.y for v in cliques[rep]})
        work = work.without_vertices(gone)
        budget -= len(heads)
        trace.append(RuleApplication(
            "cvd.expansion", certificate=serialize_certificate(cert),
            vertices_deleted=tuple(gone), budget_delta=-len(heads)))
        if budget < 0:
            return KernelOutcome.decide(False, trace)

    reduced = ProblemInstance(ProblemTag.CVD_CLIQUE_BOUND, work, budget)
    return KernelOutcome.reduce(reduced, trace)
