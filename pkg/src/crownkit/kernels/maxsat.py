"""Kernelization for maximum satisfiability: reduce until fewer variables
than the budget and fewer than 2k clauses remain."""

from __future__ import annotations

from ..formats import _ids
from ..graphs import CnfFormula, ProblemInstance, ProblemTag
from ..matching import alternating_reachability, hk_matching
from .outcome import KernelOutcome, RuleApplication, compact_formula


def kernelize_maxsat(phi: CnfFormula, k: int) -> KernelOutcome:
    """Decide, or reduce to an equivalent formula with n' < k' variables and
    m' < 2k' clauses.

    Rules: m >= 2k clauses are always half satisfiable (YES); more budget
    than clauses is hopeless (NO); while n >= k, the variable-clause
    incidence graph either has a matching saturating the variables (YES:
    set each matched variable to satisfy its clause) or yields a minimal
    Hall violator, i.e. a crown of variables C with head clauses H = N(C)
    that can always be satisfied by C alone, so both are deleted and the
    budget drops by |H|.
    """
    trace: list[RuleApplication] = []
    clauses = list(enumerate(phi.clauses))
    alive_vars = set(range(1, phi.num_vars + 1))
    dead_vars: set[int] = set()
    dead_clauses: set[int] = set()
    budget = k
    while True:
        used = {abs(lit) for _idx, clause in clauses for lit in clause}
        unused = alive_vars - used
        if unused:
            alive_vars -= unused
            dead_vars |= unused
            trace.append(RuleApplication(
                "maxsat.remove-unused-vars", vertices_deleted=tuple(sorted(unused))))
            continue
        m = len(clauses)
        n = len(alive_vars)
        if 2 * budget <= m:
            trace.append(RuleApplication("maxsat.half-satisfiable"))
            return KernelOutcome.decide(True, trace)
        if budget > m:
            trace.append(RuleApplication("maxsat.budget-exceeds-clauses"))
            return KernelOutcome.decide(False, trace)
        if n < budget:
            break
        adj = {var: tuple(sorted(idx for idx, clause in clauses
                                 if var in clause or -var in clause))
               for var in alive_vars}
        pair_var, pair_clause = hk_matching(adj)
        unsaturated = [v for v in sorted(alive_vars) if v not in pair_var]
        if not unsaturated:
            trace.append(RuleApplication("maxsat.saturating-matching"))
            return KernelOutcome.decide(True, trace)
        seen_vars, seen_clauses = alternating_reachability(
            adj, pair_var, pair_clause, [unsaturated[0]])
        witness = ",".join(f"{pair_clause[c]}-{c}" for c in sorted(seen_clauses)) or "-"
        alive_vars -= seen_vars
        dead_vars |= seen_vars
        dead_clauses |= seen_clauses
        clauses = [(idx, clause) for idx, clause in clauses if idx not in seen_clauses]
        budget -= len(seen_clauses)
        trace.append(RuleApplication(
            "maxsat.variable-crown",
            certificate=f"crown:c={_ids(seen_vars)}:h={_ids(seen_clauses)}:w={witness}",
            vertices_deleted=tuple(sorted(seen_vars)),
            clauses_deleted=tuple(sorted(seen_clauses)),
            budget_delta=-len(seen_clauses)))

    formula = compact_formula(phi, frozenset(dead_vars), frozenset(dead_clauses))
    reduced = ProblemInstance(ProblemTag.MAXSAT, formula, budget)
    return KernelOutcome.reduce(reduced, trace)
