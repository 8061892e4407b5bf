"""Pydantic request/response models for the kernelization service.

These mirror the core types 1:1 so the CLI can act as a thin client: it
parses files into these models, invokes a handler (in-process or over
HTTP), and writes the response models back out as files.
"""

from __future__ import annotations

from pydantic import BaseModel, Field

from ..graphs import (
    BipartiteGraph,
    CnfFormula,
    Graph,
    ProblemInstance,
    ProblemTag,
    WeightedBipartiteGraph,
)
from ..kernels.outcome import KernelOutcome, RuleApplication


class GraphModel(BaseModel):
    vertices: list[int]
    edges: list[tuple[int, int]] = Field(default_factory=list)
    weights: dict[int, int] | None = None

    @staticmethod
    def from_graph(g: Graph) -> "GraphModel":
        return GraphModel(vertices=g.sorted_vertices(), edges=g.sorted_edges(),
                          weights=dict(sorted(g.weights.items())) if g.weights else None)

    def to_graph(self) -> Graph:
        return Graph.build(self.vertices, self.edges, self.weights)


class BipartiteGraphModel(BaseModel):
    side_a: list[int]
    side_b: list[int]
    edges: list[tuple[int, int]] = Field(default_factory=list)
    weights: dict[int, int] | None = None

    @staticmethod
    def from_bipartite(g: BipartiteGraph, weights=None) -> "BipartiteGraphModel":
        return BipartiteGraphModel(side_a=sorted(g.side_a), side_b=sorted(g.side_b),
                                   edges=sorted(g.edges),
                                   weights=dict(sorted(weights.items())) if weights else None)

    def to_bipartite(self) -> BipartiteGraph:
        return BipartiteGraph.build(self.side_a, self.side_b, self.edges)

    def to_weighted(self) -> WeightedBipartiteGraph:
        return WeightedBipartiteGraph.build(self.to_bipartite(), self.weights or {})


class CnfModel(BaseModel):
    num_vars: int
    clauses: list[list[int]]

    @staticmethod
    def from_formula(phi: CnfFormula) -> "CnfModel":
        return CnfModel(num_vars=phi.num_vars,
                        clauses=[sorted(c, key=lambda l: (abs(l), l)) for c in phi.clauses])

    def to_formula(self) -> CnfFormula:
        return CnfFormula(self.num_vars, tuple(frozenset(c) for c in self.clauses))


class InstanceModel(BaseModel):
    problem: str
    graph: GraphModel | None = None
    formula: CnfModel | None = None
    k: int = 0
    p: int | None = None
    ell: int | None = None
    modulator: list[int] | None = None
    lists: dict[int, list[int]] | None = None

    @staticmethod
    def from_instance(inst: ProblemInstance) -> "InstanceModel":
        graph = formula = None
        if isinstance(inst.payload, Graph):
            graph = GraphModel.from_graph(inst.payload)
        else:
            formula = CnfModel.from_formula(inst.payload)
        return InstanceModel(
            problem=inst.tag.value, graph=graph, formula=formula, k=inst.k,
            p=inst.p, ell=inst.ell,
            modulator=sorted(inst.modulator) if inst.modulator is not None else None,
            lists={v: sorted(cs) for v, cs in sorted(inst.lists.items())}
            if inst.lists is not None else None)

    def to_instance(self) -> ProblemInstance:
        tag = ProblemTag(self.problem)
        if tag is ProblemTag.MAXSAT:
            if self.formula is None:
                raise ValueError("maxsat request needs a formula")
            payload: Graph | CnfFormula = self.formula.to_formula()
        else:
            if self.graph is None:
                raise ValueError(f"{self.problem} request needs a graph")
            payload = self.graph.to_graph()
        lists = ({v: frozenset(cs) for v, cs in self.lists.items()}
                 if self.lists is not None else None)
        modulator = frozenset(self.modulator) if self.modulator is not None else None
        return ProblemInstance(tag, payload, self.k, p=self.p, ell=self.ell,
                               modulator=modulator, lists=lists)


class RuleApplicationModel(BaseModel):
    rule: str
    certificate: str = "-"
    vertices_deleted: list[int] = Field(default_factory=list)
    clauses_deleted: list[int] = Field(default_factory=list)
    colors_deleted: list[int] = Field(default_factory=list)
    budget_delta: int = 0

    @staticmethod
    def from_application(app: RuleApplication) -> "RuleApplicationModel":
        return RuleApplicationModel(
            rule=app.rule, certificate=app.certificate,
            vertices_deleted=list(app.vertices_deleted),
            clauses_deleted=list(app.clauses_deleted),
            colors_deleted=list(app.colors_deleted),
            budget_delta=app.budget_delta)

    def to_application(self) -> RuleApplication:
        return RuleApplication(
            rule=self.rule, certificate=self.certificate,
            vertices_deleted=tuple(self.vertices_deleted),
            clauses_deleted=tuple(self.clauses_deleted),
            colors_deleted=tuple(self.colors_deleted),
            budget_delta=self.budget_delta)


class RunReportModel(BaseModel):
    """Input/output sizes, rule-fire counts, the decided answer if any, and
    the wall-clock duration (excluded from determinism comparisons)."""

    problem: str
    input_sizes: dict[str, int]
    output_sizes: dict[str, int] | None = None
    rules_fired: dict[str, int]
    decided: str | None = None
    duration_ms: float = 0.0

    def key_value_lines(self, include_duration: bool = True) -> list[str]:
        lines = [f"problem={self.problem}"]
        for key in sorted(self.input_sizes):
            lines.append(f"input_{key}={self.input_sizes[key]}")
        if self.output_sizes is not None:
            for key in sorted(self.output_sizes):
                lines.append(f"output_{key}={self.output_sizes[key]}")
        for rule in sorted(self.rules_fired):
            lines.append(f"rule_{rule}={self.rules_fired[rule]}")
        lines.append(f"decided={self.decided or '-'}")
        if include_duration:
            lines.append(f"duration_ms={self.duration_ms:.3f}")
        return lines


class KernelizeRequest(BaseModel):
    instance: InstanceModel


class KernelizeResponse(BaseModel):
    decided: bool | None = None
    reduced: InstanceModel | None = None
    trace: list[RuleApplicationModel] = Field(default_factory=list)
    report: RunReportModel

    def to_outcome(self) -> KernelOutcome:
        trace = tuple(app.to_application() for app in self.trace)
        if self.decided is not None:
            return KernelOutcome.decide(self.decided, trace)
        assert self.reduced is not None
        return KernelOutcome.reduce(self.reduced.to_instance(), trace)


class LemmaRequest(BaseModel):
    graph: BipartiteGraphModel
    q: int


class CertificateModel(BaseModel):
    kind: str
    q: int
    serialized: str
    x: list[int] | None = None
    y: list[int] | None = None
    m: list[tuple[int, int]] | None = None
    f: dict[int, int] | None = None
    w_cap: int | None = None
    a_hat: list[int] | None = None
    b_hat: list[int] | None = None
    a1: list[int] | None = None
    a2: list[int] | None = None
    crown: list[int] | None = None
    head: list[int] | None = None
    witness: list[tuple[int, int]] | None = None


class LemmaResponse(BaseModel):
    certificate: CertificateModel
    verified: bool


class VerifyRequest(BaseModel):
    instance: InstanceModel


class VerifyResponse(BaseModel):
    agree: bool
    kernel_answer: bool
    oracle_answer: bool
    decided_by_kernel: bool
    report: RunReportModel


class ErrorBody(BaseModel):
    error: str
    detail: str
    condition: str | None = None
