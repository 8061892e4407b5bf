"""Kernels for p-component-order-connectivity: the plain expansion version
(component count bounded by p(p+1)k) and the weighted version (component
weight bounded by (2p-1)(p+1)k)."""

from __future__ import annotations

from collections import deque

from ..errors import PreconditionError
from ..expansion import expansion_lemma, weighted_expansion_lemma
from ..formats import serialize_certificate
from ..graphs import (
    BipartiteGraph,
    Graph,
    ProblemInstance,
    ProblemTag,
    WeightedBipartiteGraph,
    connected_components,
)
from .outcome import KernelOutcome, RuleApplication


def greedy_packing(g: Graph, p: int) -> tuple[frozenset[int], int]:
    """Disjoint connected (p+1)-sets collected greedily: BFS from the
    smallest vertex of the smallest oversized component, repeat on what is
    left.  Returns (union of the sets, number of sets)."""
    work = g
    chosen: list[int] = []
    packs = 0
    while True:
        oversized = [c for c in connected_components(work) if len(c) > p]
        if not oversized:
            return frozenset(chosen), packs
        comp = min(oversized, key=min)
        start = min(comp)
        collected = [start]
        seen = {start}
        queue = deque([start])
        while queue and len(collected) < p + 1:
            v = queue.popleft()
            for w in work.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    collected.append(w)
                    queue.append(w)
                    if len(collected) == p + 1:
                        break
        chosen.extend(collected)
        packs += 1
        work = work.without_vertices(collected)


def _component_layout(work: Graph, modulator: frozenset[int]):
    """Components of work - modulator keyed by their smallest vertex, plus
    the modulator neighbors of each component."""
    rest = work.without_vertices(modulator)
    comps = {}
    links = {}
    for comp in connected_components(rest):
        rep = min(comp)
        comps[rep] = comp
        nbrs = set()
        for v in comp:
            nbrs.update(w for w in work.adjacency[v] if w in modulator)
        links[rep] = frozenset(nbrs)
    return comps, links


def _kernelize_coc(g: Graph, k: int, p: int, weighted: bool) -> KernelOutcome:
    if p < 1:
        raise PreconditionError("p-positive", "p must be at least 1")
    tag = ProblemTag.PCOC_WEIGHTED if weighted else ProblemTag.PCOC
    prefix = "pcocw" if weighted else "pcoc"
    trace: list[RuleApplication] = []
    work, budget = g, k
    while True:
        modulator, packs = greedy_packing(work, p)
        if packs > budget:
            trace.append(RuleApplication(f"{prefix}.packing-exceeds-budget"))
            return KernelOutcome.decide(False, trace)
        if packs == 0:
            trace.append(RuleApplication(f"{prefix}.all-components-small"))
            return KernelOutcome.decide(True, trace)
        comps, links = _component_layout(work, modulator)
        isolated = [rep for rep, nbrs in sorted(links.items()) if not nbrs]
        if isolated:
            gone = sorted(v for rep in isolated for v in comps[rep])
            work = work.without_vertices(gone)
            trace.append(RuleApplication(
                f"{prefix}.isolated-components", vertices_deleted=tuple(gone)))
            continue

        if weighted:
            applicable = sum(len(c) for c in comps.values()) > (2 * p - 1) * (p + 1) * budget
        else:
            applicable = len(comps) > p * (p + 1) * budget
        if not applicable:
            break

        edges = {(u, rep) for rep, nbrs in links.items() for u in nbrs}
        if weighted:
            base = BipartiteGraph.build(modulator, comps.keys(), edges)
            weights = {rep: len(comp) for rep, comp in comps.items()}
            cert = weighted_expansion_lemma(WeightedBipartiteGraph.build(base, weights),
                                            2 * p - 1)
        else:
            cert = expansion_lemma(BipartiteGraph.build(modulator, comps.keys(), edges), p)
        heads = cert.x
        gone = sorted(set(heads) | {v for rep in cert.y for v in comps[rep]})
        work = work.without_vertices(gone)
        budget -= len(heads)
        trace.append(RuleApplication(
            f"{prefix}.expansion", certificate=serialize_certificate(cert),
            vertices_deleted=tuple(gone), budget_delta=-len(heads)))
        if budget < 0:
            return KernelOutcome.decide(False, trace)

    reduced = ProblemInstance(tag, work, budget, p=p)
    return KernelOutcome.reduce(reduced, trace)


def kernelize_pcoc(g: Graph, k: int, p: int) -> KernelOutcome:
    """Decide, or reduce so the modulator has at most (p+1)k' vertices and
    at most p(p+1)k' components of order <= p remain outside it."""
    return _kernelize_coc(g, k, p, weighted=False)


def kernelize_pcoc_weighted(g: Graph, k: int, p: int) -> KernelOutcome:
    """Decide, or reduce so at most (2p-1)(p+1)k' vertices remain outside
    the modulator, via the weighted expansion lemma at q = 2p-1 with
    component weights equal to their orders."""
    return _kernelize_coc(g, k, p, weighted=True)
