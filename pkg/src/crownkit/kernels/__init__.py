"""Problem-specific kernelizers plus dispatch and oracle-agreement helpers."""

from __future__ import annotations

from ..errors import InvalidInstanceError
from ..graphs import ProblemInstance, ProblemTag
from .. import oracles
from .coc import kernelize_pcoc, kernelize_pcoc_weighted
from .coloring import kernelize_nk_coloring, reduce_list_coloring_colors
from .cvd import bound_cvd_cliques
from .longest_cycle import reduce_longest_cycle_vc
from .maxsat import kernelize_maxsat
from .outcome import KernelOutcome, RuleApplication, compact_formula, replay_trace
from .vertex_cover import kernelize_vertex_cover

__all__ = [
    "KernelOutcome",
    "RuleApplication",
    "bound_cvd_cliques",
    "compact_formula",
    "kernelize",
    "kernelize_instance",
    "kernelize_maxsat",
    "kernelize_nk_coloring",
    "kernelize_pcoc",
    "kernelize_pcoc_weighted",
    "kernelize_vertex_cover",
    "oracle_answer",
    "outcome_answer",
    "reduce_list_coloring_colors",
    "reduce_longest_cycle_vc",
    "replay_trace",
]


def kernelize_instance(instance: ProblemInstance) -> KernelOutcome:
    """Dispatch an instance to its kernelizer."""
    tag = instance.tag
    if tag is ProblemTag.VC:
        return kernelize_vertex_cover(instance.graph, instance.k)
    if tag is ProblemTag.NK_COLORING:
        return kernelize_nk_coloring(instance.graph, instance.k)
    if tag is ProblemTag.MAXSAT:
        return kernelize_maxsat(instance.formula, instance.k)
    if tag is ProblemTag.NK_LIST_COLORING:
        assert instance.lists is not None
        return reduce_list_coloring_colors(instance.graph, instance.k, instance.lists)
    if tag is ProblemTag.LONGEST_CYCLE_VC:
        assert instance.ell is not None and instance.modulator is not None
        return reduce_longest_cycle_vc(instance.graph, instance.k,
                                       instance.ell, instance.modulator)
    if tag is ProblemTag.PCOC:
        assert instance.p is not None
        return kernelize_pcoc(instance.graph, instance.k, instance.p)
    if tag is ProblemTag.PCOC_WEIGHTED:
        assert instance.p is not None
        return kernelize_pcoc_weighted(instance.graph, instance.k, instance.p)
    if tag is ProblemTag.CVD_CLIQUE_BOUND:
        return bound_cvd_cliques(instance.graph, instance.k)
    raise InvalidInstanceError(f"no kernelizer for tag {tag}")


kernelize = kernelize_instance


def oracle_answer(instance: ProblemInstance) -> bool:
    """Ground-truth answer from the brute-force oracles (size-guarded)."""
    tag = instance.tag
    if tag is ProblemTag.VC:
        return oracles.exact_vertex_cover(instance.graph) <= instance.k
    if tag is ProblemTag.NK_COLORING:
        g = instance.graph
        return oracles.exact_chromatic_number(g) <= g.n - instance.k
    if tag is ProblemTag.MAXSAT:
        return oracles.exact_maxsat(instance.formula) >= instance.k
    if tag is ProblemTag.NK_LIST_COLORING:
        assert instance.lists is not None
        return oracles.exact_list_coloring(instance.graph, instance.lists)
    if tag is ProblemTag.LONGEST_CYCLE_VC:
        assert instance.ell is not None
        return oracles.has_cycle_of_length(instance.graph, instance.ell)
    if tag in (ProblemTag.PCOC, ProblemTag.PCOC_WEIGHTED):
        assert instance.p is not None
        return oracles.exact_pcoc(instance.graph, instance.p) <= instance.k
    if tag is ProblemTag.CVD_CLIQUE_BOUND:
        return oracles.exact_cvd(instance.graph) <= instance.k
    raise InvalidInstanceError(f"no oracle for tag {tag}")


def outcome_answer(outcome: KernelOutcome) -> bool:
    """Answer implied by a kernel outcome, consulting the oracle on the
    reduced instance when it was not decided outright."""
    if outcome.decided is not None:
        return outcome.decided
    assert outcome.reduced is not None
    return oracle_answer(outcome.reduced)
