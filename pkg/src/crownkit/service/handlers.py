"""Service-layer handlers: the single code path behind both the HTTP
endpoints and the CLI."""

from __future__ import annotations

import time
from collections import Counter

from ..crown import bipartite_crown, verify_crown
from ..errors import InvalidInstanceError
from ..expansion import (
    additive_expansion_lemma,
    balanced_expansion,
    expansion_lemma,
    stronger_expansion_lemma,
    verify_additive_expansion,
    verify_balanced_expansion,
    verify_expansion,
    verify_stronger_expansion,
    verify_weighted_expansion,
    weighted_expansion_lemma,
)
from ..formats import serialize_certificate
from ..graphs import CnfFormula, Graph, ProblemInstance
from ..kernels import kernelize_instance, oracle_answer, outcome_answer
from ..kernels.outcome import KernelOutcome
from .models import (
    CertificateModel,
    InstanceModel,
    KernelizeRequest,
    KernelizeResponse,
    LemmaRequest,
    LemmaResponse,
    RuleApplicationModel,
    RunReportModel,
    VerifyRequest,
    VerifyResponse,
)

LEMMA_TAGS = ("crown", "expansion", "weighted", "stronger", "additive", "balanced")


def _instance_sizes(inst: ProblemInstance) -> dict[str, int]:
    from ..graphs import ProblemTag
    from ..kernels.coc import _component_layout, greedy_packing
    from ..kernels.cvd import greedy_p3_packing

    sizes: dict[str, int] = {"k": inst.k}
    if isinstance(inst.payload, Graph):
        sizes["n"] = inst.payload.n
        sizes["m"] = inst.payload.m
    else:
        sizes["n"] = inst.payload.num_vars
        sizes["m"] = inst.payload.num_clauses
    if inst.p is not None:
        sizes["p"] = inst.p
    if inst.ell is not None:
        sizes["ell"] = inst.ell
    if inst.lists is not None:
        colors = set().union(*inst.lists.values()) if inst.lists else set()
        sizes["colors"] = len(colors)
    if inst.tag in (ProblemTag.PCOC, ProblemTag.PCOC_WEIGHTED):
        modulator, _packs = greedy_packing(inst.graph, inst.p)
        comps, _links = _component_layout(inst.graph, modulator)
        sizes["modulator"] = len(modulator)
        sizes["components"] = len(comps)
    elif inst.tag is ProblemTag.CVD_CLIQUE_BOUND:
        packing = greedy_p3_packing(inst.graph)
        modulator = frozenset(v for triple in packing for v in triple)
        comps, _links = _component_layout(inst.graph, modulator)
        sizes["modulator"] = len(modulator)
        sizes["components"] = len(comps)
    return sizes


def _build_report(inst: ProblemInstance, outcome: KernelOutcome,
                  duration_ms: float) -> RunReportModel:
    rules = Counter(app.rule for app in outcome.trace)
    decided = None if outcome.decided is None else ("yes" if outcome.decided else "no")
    output_sizes = None
    if outcome.reduced is not None:
        output_sizes = _instance_sizes(outcome.reduced)
    return RunReportModel(
        problem=inst.tag.value,
        input_sizes=_instance_sizes(inst),
        output_sizes=output_sizes,
        rules_fired=dict(rules),
        decided=decided,
        duration_ms=duration_ms)


def handle_kernelize(request: KernelizeRequest) -> KernelizeResponse:
    inst = request.instance.to_instance()
    start = time.perf_counter()
    outcome = kernelize_instance(inst)
    duration_ms = (time.perf_counter() - start) * 1000.0
    report = _build_report(inst, outcome, duration_ms)
    reduced = (InstanceModel.from_instance(outcome.reduced)
               if outcome.reduced is not None else None)
    return KernelizeResponse(
        decided=outcome.decided, reduced=reduced,
        trace=[RuleApplicationModel.from_application(app) for app in outcome.trace],
        report=report)


def handle_lemma(tag: str, request: LemmaRequest) -> LemmaResponse:
    q = request.q
    if tag == "crown":
        g = request.graph.to_bipartite()
        outcome = bipartite_crown(g)
        if outcome.matching is not None:
            cert = CertificateModel(
                kind="saturating-matching", q=1,
                serialized="matching:" + (",".join(
                    f"{a}-{b}" for a, b in sorted(outcome.matching.edges)) or "-"),
                m=sorted(outcome.matching.edges))
            return LemmaResponse(certificate=cert, verified=True)
        cd = outcome.crown
        assert cd is not None
        return LemmaResponse(certificate=CertificateModel(
            kind="crown", q=1, serialized=serialize_certificate(cd),
            crown=sorted(cd.crown), head=sorted(cd.head),
            witness=sorted(cd.witness)), verified=verify_crown(g, cd))
    if tag == "expansion":
        g = request.graph.to_bipartite()
        cert = expansion_lemma(g, q)
        return LemmaResponse(certificate=CertificateModel(
            kind="expansion", q=q, serialized=serialize_certificate(cert),
            x=sorted(cert.x), y=sorted(cert.y), m=sorted(cert.m)),
            verified=verify_expansion(g, cert))
    if tag == "weighted":
        wg = request.graph.to_weighted()
        cert = weighted_expansion_lemma(wg, q)
        return LemmaResponse(certificate=CertificateModel(
            kind="weighted-expansion", q=q, serialized=serialize_certificate(cert),
            x=sorted(cert.x), y=sorted(cert.y), f=dict(sorted(cert.f.items())),
            w_cap=cert.w_cap), verified=verify_weighted_expansion(wg, cert))
    if tag == "stronger":
        g = request.graph.to_bipartite()
        cert = stronger_expansion_lemma(g, q)
        return LemmaResponse(certificate=CertificateModel(
            kind="stronger-expansion", q=q, serialized=serialize_certificate(cert),
            a_hat=sorted(cert.a_hat), b_hat=sorted(cert.b_hat)),
            verified=verify_stronger_expansion(g, cert))
    if tag == "additive":
        g = request.graph.to_bipartite()
        cert = additive_expansion_lemma(g, q)
        return LemmaResponse(certificate=CertificateModel(
            kind="additive-expansion", q=q, serialized=serialize_certificate(cert),
            a_hat=sorted(cert.a_hat), b_hat=sorted(cert.b_hat)),
            verified=verify_additive_expansion(g, cert))
    if tag == "balanced":
        wg = request.graph.to_weighted()
        result = balanced_expansion(wg, q)
        return LemmaResponse(certificate=CertificateModel(
            kind="balanced-expansion", q=q, serialized=serialize_certificate(result),
            a1=sorted(result.a1), a2=sorted(result.a2),
            f=dict(sorted(result.f.items()))),
            verified=verify_balanced_expansion(wg, result))
    raise InvalidInstanceError(f"unknown lemma tag {tag!r}; expected one of {LEMMA_TAGS}")


def handle_verify(request: VerifyRequest) -> VerifyResponse:
    inst = request.instance.to_instance()
    truth = oracle_answer(inst)
    start = time.perf_counter()
    outcome = kernelize_instance(inst)
    duration_ms = (time.perf_counter() - start) * 1000.0
    kernel_side = outcome_answer(outcome)
    return VerifyResponse(
        agree=truth == kernel_side,
        kernel_answer=kernel_side,
        oracle_answer=truth,
        decided_by_kernel=outcome.decided is not None,
        report=_build_report(inst, outcome, duration_ms))
