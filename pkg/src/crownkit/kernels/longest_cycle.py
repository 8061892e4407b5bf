"""Reduction for the exact-length cycle problem parameterized by a given
vertex cover."""

from __future__ import annotations

from itertools import combinations

from ..errors import PreconditionError
from ..formats import _ids
from ..graphs import Graph, ProblemInstance, ProblemTag, is_vertex_cover
from ..matching import alternating_reachability, hk_matching
from .outcome import KernelOutcome, RuleApplication


def reduce_longest_cycle_vc(g: Graph, k: int, ell: int,
                            modulator: frozenset[int]) -> KernelOutcome:
    """Shrink the independent side while preserving existence of a cycle on
    exactly ``ell`` vertices.

    The auxiliary bipartite graph pairs up cover vertices that share an
    outside neighbor; a crown on the outside side leaves one vertex
    unmatched, and that vertex is redundant: any cycle through it can be
    re-routed through matched representatives.  For ell = 4 the same pair
    can host two cycle slots, so every pair is duplicated before matching
    (the fixpoint is then k + k(k-1) instead of k + k(k-1)/2 vertices).
    """
    if not is_vertex_cover(g, modulator):
        raise PreconditionError("modulator-vertex-cover",
                                "modulator is not a vertex cover of the graph")
    if len(modulator) != k:
        raise PreconditionError("modulator-size",
                                f"|S| = {len(modulator)} does not match k = {k}")
    trace: list[RuleApplication] = []
    if ell < 3:
        trace.append(RuleApplication("lcvc.no-short-cycles"))
        return KernelOutcome.decide(False, trace)

    multiplicity = 2 if ell == 4 else 1
    work = g
    while True:
        outside = sorted(work.vertices - modulator)
        low = [v for v in outside if work.degree(v) <= 1]
        if low:
            work = work.without_vertices(low)
            trace.append(RuleApplication(
                "lcvc.remove-acyclic", vertices_deleted=tuple(low)))
            continue
        adj = {}
        for v in outside:
            slots = []
            for s1, s2 in combinations(sorted(work.adjacency[v]), 2):
                slots.extend((s1, s2, copy) for copy in range(multiplicity))
            adj[v] = tuple(sorted(slots))
        pair_v, pair_slot = hk_matching(adj)
        unsaturated = [v for v in outside if v not in pair_v]
        if not unsaturated:
            break
        seen_v, seen_slots = alternating_reachability(adj, pair_v, pair_slot,
                                                      [unsaturated[0]])
        redundant = sorted(v for v in seen_v if v not in pair_v)
        pair_tokens = ",".join(f"{s1}+{s2}.{copy}"
                               for s1, s2, copy in sorted(seen_slots)) or "-"
        trace.append(RuleApplication(
            "lcvc.pair-crown",
            certificate=f"pair-crown:c={_ids(seen_v)}:h={pair_tokens}",
            vertices_deleted=tuple(redundant)))
        work = work.without_vertices(redundant)

    if ell > work.n:
        trace.append(RuleApplication("lcvc.cycle-longer-than-graph"))
        return KernelOutcome.decide(False, trace)
    reduced = ProblemInstance(ProblemTag.LONGEST_CYCLE_VC, work, k,
                              ell=ell, modulator=modulator)
    return KernelOutcome.reduce(reduced, trace)
