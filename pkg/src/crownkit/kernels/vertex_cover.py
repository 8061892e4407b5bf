"""Vertex cover kernelization with a 3k-vertex guarantee."""

from __future__ import annotations

from ..crown import crown_or_matching
from ..formats import serialize_certificate, _pairs
from ..graphs import Graph, ProblemInstance, ProblemTag
from .outcome import KernelOutcome, RuleApplication


def kernelize_vertex_cover(g: Graph, k: int) -> KernelOutcome:
    """Decide the instance or shrink it to at most 3k' vertices.

    Rules, in order: strip isolated vertices; answer NO once the budget is
    spent or a matching of k+1 edges shows up; answer YES on an edgeless
    graph; otherwise, while more than 3k vertices remain, delete a crown
    C ∪ H and charge |H| against the budget.
    """
    trace: list[RuleApplication] = []
    work, budget = g, k
    while True:
        isolated = work.isolated_vertices()
        if isolated:
            work = work.without_vertices(isolated)
            trace.append(RuleApplication(
                "vc.remove-isolated", vertices_deleted=tuple(sorted(isolated))))
        if budget < 0:
            return KernelOutcome.decide(False, trace)
        if work.m == 0:
            return KernelOutcome.decide(True, trace)
        if work.n <= 3 * budget:
            reduced = ProblemInstance(ProblemTag.VC, work, budget)
            return KernelOutcome.reduce(reduced, trace)
        outcome = crown_or_matching(work, budget)
        if outcome.matching is not None:
            trace.append(RuleApplication(
                "vc.large-matching", certificate=f"matching:{_pairs(outcome.matching)}"))
            return KernelOutcome.decide(False, trace)
        cd = outcome.crown
        assert cd is not None
        gone = cd.crown | cd.head
        work = work.without_vertices(gone)
        budget -= len(cd.head)
        trace.append(RuleApplication(
            "vc.crown", certificate=serialize_certificate(cd),
            vertices_deleted=tuple(sorted(gone)), budget_delta=-len(cd.head)))
