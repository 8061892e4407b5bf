"""Independent brute-force exact solvers, used only as ground truth.

These share no code with the crown/expansion/kernel modules beyond the
graph accessors.  Every solver carries a hard input-size guard so a stray
large instance fails fast instead of hanging CI.
"""

from __future__ import annotations

from itertools import combinations
from typing import Mapping

from .errors import GuardError
from .graphs import CnfFormula, Graph

VC_GUARD = 20
CHROMATIC_GUARD = 10
MAXSAT_GUARD = 16
PCOC_GUARD = 14
CVD_GUARD = 14
CYCLE_GUARD = 12
LIST_COLORING_GUARD = 8


def _check_guard(size: int, limit: int, name: str) -> None:
    if size > limit:
        raise GuardError(f"{name} oracle guarded to size {limit}, got {size}")


def exact_vertex_cover(g: Graph) -> int:
    """Minimum vertex cover size by ascending exhaustive subsets."""
    _check_guard(g.n, VC_GUARD, "vertex cover")
    vs = g.sorted_vertices()
    index = {v: i for i, v in enumerate(vs)}
    edge_masks = [(1 << index[u]) | (1 << index[v]) for u, v in g.edges]
    if not edge_masks:
        return 0
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if all(mask & em for em in edge_masks):
                return size
    raise AssertionError("unreachable: full vertex set always covers")


def exact_chromatic_number(g: Graph) -> int:
    """Chromatic number by backtracking; 0 for the null graph."""
    _check_guard(g.n, CHROMATIC_GUARD, "chromatic number")
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    colors: dict[int, int] = {}

    def feasible(limit: int, idx: int) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        banned = {colors[w] for w in g.adjacency[v] if w in colors}
        used = max(colors.values(), default=-1)
        for color in range(min(used + 1, limit - 1) + 1):
            if color in banned:
                continue
            colors[v] = color
            if feasible(limit, idx + 1):
                return True
            del colors[v]
        return False

    for limit in range(2, g.n + 1):
        colors.clear()
        if feasible(limit, 0):
            return limit
    return g.n


def exact_maxsat(phi: CnfFormula) -> int:
    """Maximum simultaneously satisfiable clauses over all assignments."""
    _check_guard(phi.num_vars, MAXSAT_GUARD, "maxsat")
    pos_masks = []
    neg_masks = []
    for clause in phi.clauses:
        pos = neg = 0
        for lit in clause:
            if lit > 0:
                pos |= 1 << (lit - 1)
            else:
                neg |= 1 << (-lit - 1)
        pos_masks.append(pos)
        neg_masks.append(neg)
    best = 0
    full = (1 << phi.num_vars) - 1
    for assign in range(1 << phi.num_vars):
        flipped = full & ~assign
        count = sum(1 for pos, neg in zip(pos_masks, neg_masks)
                    if (assign & pos) or (flipped & neg))
        if count > best:
            best = count
            if best == phi.num_clauses:
                break
    return best


def _components_within(g: Graph, alive: frozenset[int]) -> list[set[int]]:
    seen: set[int] = set()
    comps = []
    for start in sorted(alive):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if w in alive and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(comp)
    return comps


def exact_pcoc(g: Graph, p: int) -> int:
    """Minimum deletion set leaving all components of order at most p."""
    _check_guard(g.n, PCOC_GUARD, "p-component-order-connectivity")
    if p < 1:
        raise GuardError("p must be at least 1")
    vs = g.sorted_vertices()
    for size in range(g.n + 1):
        for combo in combinations(vs, size):
            alive = g.vertices - set(combo)
            if all(len(c) <= p for c in _components_within(g, alive)):
                return size
    raise AssertionError("unreachable: deleting everything works")


def _is_cluster(g: Graph, alive: frozenset[int]) -> bool:
    for comp in _components_within(g, alive):
        members = sorted(comp)
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                if not g.has_edge(u, v):
                    return False
    return True


def exact_cvd(g: Graph) -> int:
    """Minimum deletion set leaving a disjoint union of cliques."""
    _check_guard(g.n, CVD_GUARD, "cluster vertex deletion")
    vs = g.sorted_vertices()
    for size in range(g.n + 1):
        for combo in combinations(vs, size):
            if _is_cluster(g, g.vertices - set(combo)):
                return size
    raise AssertionError("unreachable: deleting everything works")


def has_cycle_of_length(g: Graph, ell: int) -> bool:
    """Whether a simple cycle on exactly ``ell`` vertices exists."""
    _check_guard(g.n, CYCLE_GUARD, "cycle search")
    if ell < 3 or ell > g.n:
        return False

    def extend(start: int, current: int, depth: int, visited: set[int]) -> bool:
        if depth == ell:
            return g.has_edge(current, start)
        for w in g.adjacency[current]:
            if w > start and w not in visited:
                visited.add(w)
                if extend(start, w, depth + 1, visited):
                    return True
                visited.remove(w)
        return False

    return any(extend(s, s, 1, {s}) for s in g.sorted_vertices())


def exact_list_coloring(g: Graph, lists: Mapping[int, frozenset[int]]) -> bool:
    """Whether a proper coloring exists picking each color from its list."""
    _check_guard(g.n, LIST_COLORING_GUARD, "list coloring")
    order = sorted(g.vertices, key=lambda v: (len(lists[v]), v))
    chosen: dict[int, int] = {}

    def assign(idx: int) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        banned = {chosen[w] for w in g.adjacency[v] if w in chosen}
        for color in sorted(lists[v]):
            if color in banned:
                continue
            chosen[v] = color
            if assign(idx + 1):
                return True
            del chosen[v]
        return False

    return assign(0)
