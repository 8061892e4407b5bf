"""Bipartite matching primitives: maximum matching, Hall violators,
capacitated assignment, and additive-surplus checks.

The Hopcroft-Karp core below works on arbitrary sortable node labels so the
crown and expansion modules can run it on cloned/blown-up graphs without
relabelling anything.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import GuardError, InvalidInstanceError
from .graphs import BipartiteGraph, Edge

_INF = float("inf")


def hk_matching(adj: Mapping[Hashable, Sequence[Hashable]]):
    """Hopcroft-Karp maximum matching on a left-adjacency map.

    Left nodes are processed in sorted order and adjacency lists are used in
    the given order, which keeps results identical across runs.  Returns the
    pair maps ``(pair_left, pair_right)``.
    """
    left_order = sorted(adj)
    pair_l: dict = {}
    pair_r: dict = {}
    dist: dict = {}

    def bfs() -> bool:
        queue: deque = deque()
        for left in left_order:
            if left not in pair_l:
                dist[left] = 0
                queue.append(left)
            else:
                dist[left] = _INF
        reachable_free = False
        while queue:
            left = queue.popleft()
            for right in adj[left]:
                other = pair_r.get(right)
                if other is None:
                    reachable_free = True
                elif dist[other] == _INF:
                    dist[other] = dist[left] + 1
                    queue.append(other)
        return reachable_free

    def dfs(left) -> bool:
        for right in adj[left]:
            other = pair_r.get(right)
            if other is None or (dist[other] == dist[left] + 1 and dfs(other)):
                pair_l[left] = right
                pair_r[right] = left
                return True
        dist[left] = _INF
        return False

    while bfs():
        for left in left_order:
            if left not in pair_l:
                dfs(left)
    return pair_l, pair_r


def alternating_reachability(adj: Mapping[Hashable, Sequence[Hashable]],
                             pair_l: Mapping, pair_r: Mapping,
                             roots: Iterable[Hashable]):
    """Vertices reachable from ``roots`` (unsaturated left nodes) along
    paths that alternate non-matching and matching edges.

    Returns ``(seen_left, seen_right)``.  With a maximum matching this yields
    the standard tight sets: every right node seen is matched and its partner
    is seen as well.
    """
    seen_l = set(roots)
    seen_r: set = set()
    stack = sorted(seen_l)
    while stack:
        left = stack.pop()
        for right in adj[left]:
            if right in seen_r:
                continue
            seen_r.add(right)
            partner = pair_r.get(right)
            if partner is not None and partner not in seen_l:
                seen_l.add(partner)
                stack.append(partner)
    return seen_l, seen_r


@dataclass(frozen=True)
class Matching:
    """A matching of a bipartite graph, stored as oriented (a, b) edges."""

    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        seen_a: set[int] = set()
        seen_b: set[int] = set()
        for a, b in self.edges:
            if a in seen_a or b in seen_b:
                raise InvalidInstanceError("matching edges share an endpoint")
            seen_a.add(a)
            seen_b.add(b)

    @property
    def size(self) -> int:
        return len(self.edges)

    def matched_a(self) -> frozenset[int]:
        return frozenset(a for a, _ in self.edges)

    def matched_b(self) -> frozenset[int]:
        return frozenset(b for _, b in self.edges)

    def as_map(self) -> dict[int, int]:
        return {a: b for a, b in self.edges}

    def saturates(self, side: Iterable[int]) -> bool:
        return set(side) <= self.matched_a()

    def is_matching_of(self, g: BipartiteGraph) -> bool:
        return self.edges <= g.edges


@dataclass(frozen=True)
class HallViolator:
    """A set X on side A with |N(X)| < |X|, plus that exact neighborhood."""

    x: frozenset[int]
    neighborhood: frozenset[int]

    def __post_init__(self) -> None:
        if not self.x:
            raise InvalidInstanceError("hall violator must be non-empty")
        if len(self.neighborhood) >= len(self.x):
            raise InvalidInstanceError("not a violator: |N(X)| >= |X|")


def max_matching(g: BipartiteGraph) -> Matching:
    """Maximum-cardinality matching of a bipartite graph."""
    pair_a, _ = hk_matching(g.adj_a)
    return Matching(frozenset(pair_a.items()))


def minimal_hall_set(g: BipartiteGraph) -> HallViolator | None:
    """Minimal X ⊆ A with |N(X)| < |X|, or ``None`` when a matching
    saturating A exists.

    The violator is grown by alternating reachability from the smallest
    unsaturated A-vertex; with a maximum matching that set is automatically
    minimal.
    """
    pair_a, pair_b = hk_matching(g.adj_a)
    unsaturated = [a for a in sorted(g.side_a) if a not in pair_a]
    if not unsaturated:
        return None
    seen_a, seen_b = alternating_reachability(g.adj_a, pair_a, pair_b, [unsaturated[0]])
    return HallViolator(frozenset(seen_a), frozenset(seen_b))


def violator_is_minimal(g: BipartiteGraph, hv: HallViolator) -> bool:
    """Exhaustively check that no proper non-empty subset of ``hv.x`` is
    itself a violator.  Guarded to |x| <= 12."""
    if len(hv.x) > 12:
        raise GuardError("minimality check limited to |x| <= 12")
    xs = sorted(hv.x)
    for size in range(1, len(xs)):
        for sub in combinations(xs, size):
            if len(g.neighborhood_of_a(sub)) < size:
                return False
    return True


def capacitated_assignment(g: BipartiteGraph, cap_a: Mapping[int, int]) -> dict[Edge, int]:
    """Maximum assignment where each b sends at most one unit and each a
    receives at most ``cap_a[a]`` units.  Realized by splitting every
    A-vertex into ``cap_a[a]`` clones and matching."""
    missing = g.side_a - set(cap_a)
    if missing:
        raise InvalidInstanceError(f"missing capacities for {sorted(missing)}")
    for a, cap in cap_a.items():
        if cap < 1:
            raise InvalidInstanceError(f"capacity of {a} must be positive")
    adj = {(a, i): g.adj_a[a] for a in g.side_a for i in range(cap_a[a])}
    pair_l, _ = hk_matching(adj)
    result = {edge: 0 for edge in g.edges}
    for (a, _i), b in pair_l.items():
        result[(a, b)] = 1
    return result


def has_surplus_q(g: BipartiteGraph, q: int) -> bool:
    """True iff every non-empty X ⊆ A satisfies |N(X)| >= |X| + q.

    Uses the replication criterion: the condition holds iff for every a in A
    the graph with q extra clones of a still has a matching saturating the
    enlarged A-side.  ``q = 0`` degenerates to plain saturation.
    """
    if q < 0:
        raise InvalidInstanceError("q must be non-negative")
    base_adj = {("v", a): g.adj_a[a] for a in g.side_a}
    if q == 0 or not g.side_a:
        pair_l, _ = hk_matching(base_adj)
        return len(pair_l) == len(base_adj)
    for a in sorted(g.side_a):
        adj = dict(base_adj)
        for i in range(q):
            adj[("c", i)] = g.adj_a[a]
        pair_l, _ = hk_matching(adj)
        if len(pair_l) != len(adj):
            return False
    return True
