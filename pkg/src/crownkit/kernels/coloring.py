"""Kernelization for (n-k)-coloring and the color-reduction rule for
(n-k)-list-coloring."""

from __future__ import annotations

from typing import Mapping

from ..crown import crown_or_matching
from ..errors import PreconditionError
from ..formats import _ids, _pairs, serialize_certificate
from ..graphs import Graph, ProblemInstance, ProblemTag, complement
from ..matching import alternating_reachability, hk_matching
from .outcome import KernelOutcome, RuleApplication


def kernelize_nk_coloring(g: Graph, k: int) -> KernelOutcome:
    """Can the graph be properly colored with n - k colors?

    Works on the complement: universal vertices (isolated there) are deleted
    with the budget untouched; a complement matching of k disjoint non-edges
    answers YES; otherwise a complement crown is a clique complete to the
    rest, so C ∪ H is deleted and the budget drops by |H|.
    """
    trace: list[RuleApplication] = []
    work, budget = g, k
    while True:
        if budget <= 0:
            return KernelOutcome.decide(True, trace)
        comp = complement(work)
        universal = comp.isolated_vertices()
        if universal:
            work = work.without_vertices(universal)
            trace.append(RuleApplication(
                "nkc.remove-universal", vertices_deleted=tuple(sorted(universal))))
            continue
        if work.n == 0:
            return KernelOutcome.decide(False, trace)
        if work.m == 0:
            # one color suffices, so the answer is yes iff n - k >= 1
            return KernelOutcome.decide(budget <= work.n - 1, trace)
        if work.n <= 3 * budget:
            reduced = ProblemInstance(ProblemTag.NK_COLORING, work, budget)
            return KernelOutcome.reduce(reduced, trace)
        outcome = crown_or_matching(comp, budget - 1)
        if outcome.matching is not None:
            trace.append(RuleApplication(
                "nkc.complement-matching",
                certificate=f"matching:{_pairs(outcome.matching)}"))
            return KernelOutcome.decide(True, trace)
        cd = outcome.crown
        assert cd is not None
        gone = cd.crown | cd.head
        work = work.without_vertices(gone)
        budget -= len(cd.head)
        trace.append(RuleApplication(
            "nkc.complement-crown", certificate=serialize_certificate(cd),
            vertices_deleted=tuple(sorted(gone)), budget_delta=-len(cd.head)))


def reduce_list_coloring_colors(g: Graph, k: int,
                                lists: Mapping[int, frozenset[int]]) -> KernelOutcome:
    """Shrink the color universe of an (n-k)-list-coloring instance to at
    most |V| colors, pre-coloring and removing crown-head vertices.

    Every list must have exactly |V| - k colors.  List-colorability of the
    instance is preserved; the budget k passes through untouched.
    """
    missing = g.vertices - set(lists)
    if missing:
        raise PreconditionError("lists-cover-vertices",
                                f"no color list for vertices {sorted(missing)[:5]}")
    want = g.n - k
    for v in g.sorted_vertices():
        if len(lists[v]) != want:
            raise PreconditionError(
                "list-size", f"list of vertex {v} has {len(lists[v])} colors, expected {want}")

    trace: list[RuleApplication] = []
    work = g
    work_lists = {v: frozenset(lists[v]) for v in g.vertices}
    if want > 0:
        while True:
            colors = sorted(set().union(*work_lists.values())) if work_lists else []
            adj = {c: tuple(sorted(v for v in work.vertices if c in work_lists[v]))
                   for c in colors}
            pair_c, pair_v = hk_matching(adj)
            unsaturated = [c for c in colors if c not in pair_c]
            if not unsaturated:
                break
            seen_c, seen_v = alternating_reachability(adj, pair_c, pair_v, [unsaturated[0]])
            witness = tuple(sorted((pair_v[v], v) for v in seen_v))
            work = work.without_vertices(seen_v)
            work_lists = {v: ls for v, ls in work_lists.items() if v not in seen_v}
            trace.append(RuleApplication(
                "listcolor.color-crown",
                certificate=(f"crown:c={_ids(seen_c)}:h={_ids(seen_v)}"
                             f":w={','.join(f'{c}-{v}' for c, v in witness) or '-'}"),
                vertices_deleted=tuple(sorted(seen_v)),
                colors_deleted=tuple(sorted(seen_c))))
    reduced = ProblemInstance(ProblemTag.NK_LIST_COLORING, work, k, lists=work_lists)
    return KernelOutcome.reduce(reduced, trace)
