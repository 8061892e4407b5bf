"""Kernelization outcomes: decided answers or reduced instances with an
auditable, replayable trace of rule applications."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import InvalidInstanceError
from ..formats import format_record, ids_from_token, ids_token, parse_record
from ..graphs import CnfFormula, Graph, ProblemInstance, ProblemTag


@dataclass(frozen=True)
class RuleApplication:
    """One reduction-rule firing: what was deleted, under which certificate,
    and how the budget moved (never upward)."""

    rule: str
    certificate: str = "-"
    vertices_deleted: tuple[int, ...] = ()
    clauses_deleted: tuple[int, ...] = ()
    colors_deleted: tuple[int, ...] = ()
    budget_delta: int = 0

    def __post_init__(self) -> None:
        if self.budget_delta > 0:
            raise InvalidInstanceError("budget delta must be non-positive")

    def to_record(self) -> str:
        return format_record([
            ("rule", self.rule),
            ("vertices_deleted", ids_token(self.vertices_deleted)),
            ("clauses_deleted", ids_token(self.clauses_deleted)),
            ("colors_deleted", ids_token(self.colors_deleted)),
            ("budget_delta", str(self.budget_delta)),
            ("certificate", self.certificate),
        ])

    @staticmethod
    def from_record(line: str) -> RuleApplication:
        fields = parse_record(line)
        return RuleApplication(
            rule=fields["rule"],
            certificate=fields.get("certificate", "-"),
            vertices_deleted=ids_from_token(fields.get("vertices_deleted", "-")),
            clauses_deleted=ids_from_token(fields.get("clauses_deleted", "-")),
            colors_deleted=ids_from_token(fields.get("colors_deleted", "-")),
            budget_delta=int(fields.get("budget_delta", "0")),
        )


@dataclass(frozen=True)
class KernelOutcome:
    """Either a decided yes/no answer or a reduced equivalent instance."""

    decided: bool | None
    reduced: ProblemInstance | None
    trace: tuple[RuleApplication, ...] = field(default=())

    def __post_init__(self) -> None:
        if (self.decided is None) == (self.reduced is None):
            raise InvalidInstanceError("outcome must be either decided or reduced")

    @staticmethod
    def decide(answer: bool, trace) -> KernelOutcome:
        return KernelOutcome(answer, None, tuple(trace))

    @staticmethod
    def reduce(instance: ProblemInstance, trace) -> KernelOutcome:
        return KernelOutcome(None, instance, tuple(trace))

    def trace_text(self) -> str:
        return "".join(app.to_record() + "\n" for app in self.trace)


def compact_formula(phi: CnfFormula, dead_vars: frozenset[int],
                    dead_clauses: frozenset[int]) -> CnfFormula:
    """Drop clauses by original index and variables by original id, then
    renumber the surviving variables ascending to 1..n'."""
    alive_vars = sorted(set(range(1, phi.num_vars + 1)) - dead_vars)
    var_map = {old: new for new, old in enumerate(alive_vars, start=1)}
    clauses = []
    for idx, clause in enumerate(phi.clauses):
        if idx in dead_clauses:
            continue
        remapped = []
        for lit in clause:
            if abs(lit) in dead_vars:
                raise InvalidInstanceError(
                    f"surviving clause {idx} references deleted variable {abs(lit)}")
            remapped.append(var_map[abs(lit)] if lit > 0 else -var_map[abs(lit)])
        clauses.append(frozenset(remapped))
    return CnfFormula(len(alive_vars), tuple(clauses))


def replay_trace(original: ProblemInstance, trace) -> ProblemInstance:
    """Re-apply the recorded rule applications to the original instance.

    The result must reproduce a kernelizer's reduced instance exactly; the
    acceptance suite compares canonical serializations byte for byte.
    """
    budget = original.k
    for app in trace:
        budget += app.budget_delta

    if original.tag is ProblemTag.MAXSAT:
        dead_vars: set[int] = set()
        dead_clauses: set[int] = set()
        for app in trace:
            for v in app.vertices_deleted:
                if v in dead_vars:
                    raise InvalidInstanceError(f"variable {v} deleted twice in trace")
                dead_vars.add(v)
            for c in app.clauses_deleted:
                if c in dead_clauses:
                    raise InvalidInstanceError(f"clause {c} deleted twice in trace")
                dead_clauses.add(c)
        formula = compact_formula(original.formula, frozenset(dead_vars),
                                  frozenset(dead_clauses))
        return ProblemInstance(original.tag, formula, budget)

    g = original.graph
    for app in trace:
        g = g.without_vertices(app.vertices_deleted)
    lists = None
    if original.lists is not None:
        colors_gone = {c for app in trace for c in app.colors_deleted}
        lists = {v: frozenset(original.lists[v]) - colors_gone
                 for v in g.vertices}
    return ProblemInstance(original.tag, g, budget, p=original.p, ell=original.ell,
                           modulator=original.modulator, lists=lists)
