"""The expansion lemma family: plain q-expansion, weighted, stronger,
additive, and balanced variants.

Each lemma returns a certificate type with an independent verifier; the
constructors re-verify their own output and raise ``ContractViolationError``
if a certificate would not check out, so correctness rests on the verifiers
rather than on the constructions.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import ContractViolationError, InvalidInstanceError, PreconditionError
from .graphs import BipartiteGraph, Edge, WeightedBipartiteGraph
from .matching import alternating_reachability, capacitated_assignment, has_surplus_q, hk_matching

# ---------------------------------------------------------------------------
# certificate types


@dataclass(frozen=True)
class ExpansionCertificate:
    """q-expansion of x into y: every x-vertex has exactly q private
    matched neighbors among y, and y sees nothing outside x."""

    x: frozenset[int]
    y: frozenset[int]
    m: frozenset[Edge]  # oriented (a, b) edges
    q: int


@dataclass(frozen=True)
class WeightedExpansionCertificate:
    """Weighted q-expansion: assignment f: y -> x with per-head load
    w(f^{-1}(a)) >= q - W + 1, where W bounds the B-side weights."""

    x: frozenset[int]
    y: frozenset[int]
    f: Mapping[int, int]
    q: int
    w_cap: int


@dataclass(frozen=True)
class StrongerExpansionCertificate:
    """Sets (a_hat, b_hat), possibly empty, such that every X ⊆ a_hat has
    |N(X) ∩ b_hat| >= q|X|, b_hat sees nothing outside a_hat, and the
    discarded part of B is charged against discarded A at rate q."""

    a_hat: frozenset[int]
    b_hat: frozenset[int]
    q: int


@dataclass(frozen=True)
class AdditiveExpansionCertificate:
    """Sets (a_hat, b_hat) whose induced subgraph has additive surplus q:
    |N(X) ∩ b_hat| >= |X| + q for every non-empty X ⊆ a_hat."""

    a_hat: frozenset[int]
    b_hat: frozenset[int]
    q: int


@dataclass(frozen=True)
class BalancedExpansionResult:
    """Total assignment f: B -> A splitting A into heavy heads a1 and light
    heads a2, with loads within w_b_max - 1 of the threshold q and a1 closed
    under assigned neighborhoods."""

    a1: frozenset[int]
    a2: frozenset[int]
    f: Mapping[int, int]
    q: int


# ---------------------------------------------------------------------------
# independent verifiers


def verify_expansion(g: BipartiteGraph, cert: ExpansionCertificate) -> bool:
    if cert.q < 1:
        return False
    if not cert.x or not cert.x <= g.side_a:
        return False
    if not cert.y or not cert.y <= g.side_b:
        return False
    if not cert.m <= g.edges:
        return False
    per_a: dict[int, int] = {a: 0 for a in cert.x}
    per_b: dict[int, int] = {}
    for a, b in cert.m:
        if a not in cert.x or b not in cert.y:
            return False
        per_a[a] += 1
        per_b[b] = per_b.get(b, 0) + 1
    if any(count != cert.q for count in per_a.values()):
        return False
    if any(count > 1 for count in per_b.values()):
        return False
    if len(per_b) != cert.q * len(cert.x):
        return False
    return g.neighborhood_of_b(cert.y) <= cert.x


def verify_weighted_expansion(g: WeightedBipartiteGraph, cert: WeightedExpansionCertificate) -> bool:
    base = g.base
    if cert.q < 1 or cert.w_cap < 1:
        return False
    if cert.w_cap < g.w_b_max:
        return False
    if not cert.x or not cert.x <= base.side_a:
        return False
    if not cert.y or not cert.y <= base.side_b:
        return False
    if set(cert.f) != set(cert.y):
        return False
    loads = {a: 0 for a in cert.x}
    for b, a in cert.f.items():
        if a not in cert.x or a not in base.adj_b[b]:
            return False
        loads[a] += g.weight(b)
    if any(load < cert.q - cert.w_cap + 1 for load in loads.values()):
        return False
    return base.neighborhood_of_b(cert.y) <= cert.x


def verify_stronger_expansion(g: BipartiteGraph, cert: StrongerExpansionCertificate) -> bool:
    if cert.q < 1:
        return False
    if not cert.a_hat <= g.side_a or not cert.b_hat <= g.side_b:
        return False
    if not cert.b_hat and cert.a_hat:
        return False
    if not g.neighborhood_of_b(cert.b_hat) <= cert.a_hat:
        return False
    if len(g.side_b - cert.b_hat) > cert.q * len(g.side_a - cert.a_hat):
        return False
    if cert.a_hat:
        restricted = BipartiteGraph(
            cert.a_hat, cert.b_hat,
            frozenset(e for e in g.edges if e[0] in cert.a_hat and e[1] in cert.b_hat))
        caps = {a: cert.q for a in cert.a_hat}
        assignment = capacitated_assignment(restricted, caps)
        if sum(assignment.values()) != cert.q * len(cert.a_hat):
            return False
    return True


def verify_additive_expansion(g: BipartiteGraph, cert: AdditiveExpansionCertificate) -> bool:
    if cert.q < 1:
        return False
    if not cert.a_hat or not cert.a_hat <= g.side_a:
        return False
    if not cert.b_hat or not cert.b_hat <= g.side_b:
        return False
    if not g.neighborhood_of_b(cert.b_hat) <= cert.a_hat:
        return False
    restricted = BipartiteGraph(
        cert.a_hat, cert.b_hat,
        frozenset(e for e in g.edges if e[0] in cert.a_hat and e[1] in cert.b_hat))
    return has_surplus_q(restricted, cert.q)


def effective_w_b_max(g: WeightedBipartiteGraph) -> int:
    """Slack term used by the balanced lemma; clamped to >= 1 so the load
    windows stay satisfiable when B is empty."""
    return max(1, g.w_b_max)


def verify_balanced_expansion(g: WeightedBipartiteGraph, res: BalancedExpansionResult) -> bool:
    base = g.base
    if res.q < 0:
        return False
    if res.a1 & res.a2 or (res.a1 | res.a2) != base.side_a:
        return False
    if set(res.f) != set(base.side_b):
        return False
    w_max = effective_w_b_max(g)
    loads = {a: g.weight(a) for a in base.side_a}
    for b, a in res.f.items():
        if a not in base.adj_b[b]:
            return False
        loads[a] += g.weight(b)
    for a in res.a1:
        if loads[a] < res.q - w_max + 1:
            return False
    for a in res.a2:
        if loads[a] > res.q + w_max - 1:
            return False
    assigned_to_a1 = [b for b, a in res.f.items() if a in res.a1]
    return base.neighborhood_of_b(assigned_to_a1) <= res.a1


# ---------------------------------------------------------------------------
# plain q-expansion


def _peel_once(a_cur: set, b_cur: set, neighbors_of, q: int):
    """Try to saturate q clones of every surviving A-vertex inside b_cur.

    Returns ``(assignment, None)`` on success, where assignment pairs each
    a with exactly q distinct b's; otherwise ``(None, (peel_a, peel_b))``,
    the tight region found by alternating reachability from the unsaturated
    clones (peel_b is exactly its b_cur-neighborhood).
    """
    adj = {}
    for a in a_cur:
        nbrs = tuple(b for b in neighbors_of(a) if b in b_cur)
        for i in range(q):
            adj[(a, i)] = nbrs
    pair_l, pair_r = hk_matching(adj)
    unsaturated = [node for node in sorted(adj) if node not in pair_l]
    if not unsaturated:
        return [(a, b) for (a, _i), b in sorted(pair_l.items())], None
    seen_l, seen_r = alternating_reachability(adj, pair_l, pair_r, unsaturated)
    peel_a = {a for a, _i in seen_l}
    return None, (peel_a, set(seen_r))


def _expansion_core(a_all: Iterable, b_all: Iterable, neighbors_of, q: int):
    """Peeling loop behind the q-expansion lemma, over arbitrary sortable
    node labels.  Requires |B| >= q|A| and no isolated b within the given
    universe; returns (x, y, assignment)."""
    a_cur, b_cur = set(a_all), set(b_all)
    while a_cur:
        assignment, tight = _peel_once(a_cur, b_cur, neighbors_of, q)
        if assignment is not None:
            return a_cur, b_cur, assignment
        peel_a, peel_b = tight
        a_cur -= peel_a
        b_cur -= peel_b
    raise ContractViolationError("expansion peeling exhausted side A")


def expansion_lemma(g: BipartiteGraph, q: int) -> ExpansionCertificate:
    """Non-empty X ⊆ A, Y ⊆ B with a q-expansion of X into Y and
    N(Y) ⊆ X.  Requires |B| >= q|A| and no isolated vertex in B."""
    if q < 1:
        raise PreconditionError("q-positive", "q must be a positive integer")
    if not g.side_a or not g.side_b:
        raise PreconditionError("nonempty-sides", "both sides must be non-empty")
    if g.isolated_b():
        raise PreconditionError(
            "no-isolated-b", f"isolated B-vertices {sorted(g.isolated_b())[:5]}")
    if len(g.side_b) < q * len(g.side_a):
        raise PreconditionError(
            "b-size", f"|B| = {len(g.side_b)} < q|A| = {q * len(g.side_a)}")
    x, y, assignment = _expansion_core(g.side_a, g.side_b, lambda a: g.adj_a[a], q)
    cert = ExpansionCertificate(frozenset(x), frozenset(y), frozenset(assignment), q)
    if not verify_expansion(g, cert):
        raise ContractViolationError("expansion certificate failed verification")
    return cert


# ---------------------------------------------------------------------------
# weighted q-expansion


def _rotate_support_acyclic(gamma: dict[Edge, int]) -> dict[Edge, int]:
    """Cancel cycles in the bipartite support of an integral assignment by
    rotating flow; per-a inflows and per-b spends are preserved."""
    gamma = {e: v for e, v in gamma.items() if v > 0}
    while True:
        adj: dict[tuple, list[tuple]] = {}
        for a, b in gamma:
            adj.setdefault(("a", a), []).append(("b", b))
            adj.setdefault(("b", b), []).append(("a", a))
        for node in adj:
            adj[node].sort()
        cycle_edges = _find_support_cycle(adj)
        if cycle_edges is None:
            return gamma
        dec = cycle_edges[0::2]
        inc = cycle_edges[1::2]
        delta = min(gamma[e] for e in dec)
        for e in dec:
            gamma[e] -= delta
        for e in inc:
            gamma[e] = gamma.get(e, 0) + delta
        gamma = {e: v for e, v in gamma.items() if v > 0}


def _find_support_cycle(adj: dict[tuple, list[tuple]]):
    """One cycle of the (bipartite) support graph as a list of (a, b) edges
    in cyclic order, or None if the support is a forest."""
    seen: set[tuple] = set()
    for start in sorted(adj):
        if start in seen:
            continue
        parent: dict[tuple, tuple | None] = {start: None}
        stack = [start]
        while stack:
            node = stack.pop()
            if node in seen:
                continue
            seen.add(node)
            for nxt in adj[node]:
                if nxt == parent[node]:
                    continue
                if nxt in parent and nxt in seen:
                    # found a cycle: climb both branches to their junction
                    path_a = [node]
                    while parent[path_a[-1]] is not None:
                        path_a.append(parent[path_a[-1]])
                    on_a = {n: i for i, n in enumerate(path_a)}
                    path_b = [nxt]
                    while path_b[-1] not in on_a:
                        path_b.append(parent[path_b[-1]])
                    junction = path_b[-1]
                    cycle_nodes = list(reversed(path_a[:on_a[junction] + 1])) + path_b[:-1]
                    edges = []
                    for i, cur in enumerate(cycle_nodes):
                        nxt_node = cycle_nodes[(i + 1) % len(cycle_nodes)]
                        a = cur[1] if cur[0] == "a" else nxt_node[1]
                        b = cur[1] if cur[0] == "b" else nxt_node[1]
                        edges.append((a, b))
                    return edges
                if nxt not in parent:
                    parent[nxt] = node
                    stack.append(nxt)
    return None


def _orient_forest(gamma: dict[Edge, int]):
    """Root every support tree at its smallest A-vertex; returns the parent
    map over tagged nodes ("a", a) / ("b", b)."""
    adj: dict[tuple, list[tuple]] = {}
    for a, b in gamma:
        adj.setdefault(("a", a), []).append(("b", b))
        adj.setdefault(("b", b), []).append(("a", a))
    for node in adj:
        adj[node].sort()
    parent: dict[tuple, tuple | None] = {}
    for root in sorted(node for node in adj if node[0] == "a"):
        if root in parent:
            continue
        parent[root] = None
        queue = deque([root])
        while queue:
            node = queue.popleft()
            for nxt in adj[node]:
                if nxt not in parent:
                    parent[nxt] = node
                    queue.append(nxt)
    return parent


def _unsplit_assignment(gamma: dict[Edge, int], keep_high: bool) -> dict[int, int]:
    """Turn an acyclic fractional assignment into a total one on its support.

    ``keep_high`` assigns every b to its tree parent, losing at most
    W - 1 per head (used where loads must stay high).  Otherwise every split
    b is pushed down to a child so each head gains at most W - 1 (used where
    loads must stay low).
    """
    parent = _orient_forest(gamma)
    children: dict[tuple, list[tuple]] = {}
    for node, par in parent.items():
        if par is not None:
            children.setdefault(par, []).append(node)
    assignment: dict[int, int] = {}
    b_nodes = sorted(node for node in parent if node[0] == "b")
    for node in b_nodes:
        b = node[1]
        par = parent[node]
        assert par is not None and par[0] == "a"
        kids = sorted(children.get(node, []))
        if keep_high or not kids:
            assignment[b] = par[1]
        else:
            assignment[b] = kids[0][1]
    return assignment


def weighted_expansion_lemma(g: WeightedBipartiteGraph, q: int) -> WeightedExpansionCertificate:
    """Non-empty X ⊆ A, Y ⊆ B and f: Y -> X with w(f^{-1}(a)) >= q - W + 1
    and N(Y) ⊆ X.  Requires w(B) >= q|A| and no isolated vertex in B.

    Construction: blow each b up into w(b) unit copies, run the unweighted
    lemma, then unsplit the resulting per-copy assignment along a support
    forest; pushing every b to its tree parent loses at most W - 1 per head.
    """
    base = g.base
    if q < 1:
        raise PreconditionError("q-positive", "q must be a positive integer")
    if not base.side_a or not base.side_b:
        raise PreconditionError("nonempty-sides", "both sides must be non-empty")
    if base.isolated_b():
        raise PreconditionError(
            "no-isolated-b", f"isolated B-vertices {sorted(base.isolated_b())[:5]}")
    total_b = g.weight_of(base.side_b)
    if total_b < q * len(base.side_a):
        raise PreconditionError(
            "b-weight", f"w(B) = {total_b} < q|A| = {q * len(base.side_a)}")

    copies = {b: [(b, j) for j in range(g.weight(b))] for b in base.side_b}
    all_copies = [c for b in sorted(base.side_b) for c in copies[b]]

    def neighbors_of(a: int):
        return tuple(c for b in base.adj_a[a] for c in copies[b])

    x, y_copies, assignment = _expansion_core(base.side_a, all_copies, neighbors_of, q)

    gamma: dict[Edge, int] = {}
    for a, (b, _j) in assignment:
        gamma[(a, b)] = gamma.get((a, b), 0) + 1
    gamma = _rotate_support_acyclic(gamma)
    f = _unsplit_assignment(gamma, keep_high=True)
    y = frozenset(b for b, _j in y_copies)
    for b in sorted(y - set(f)):
        f[b] = min(a for a in base.adj_b[b])

    w_cap = max(1, g.w_b_max)
    cert = WeightedExpansionCertificate(frozenset(x), y, dict(sorted(f.items())), q, w_cap)
    if not verify_weighted_expansion(g, cert):
        raise ContractViolationError("weighted expansion certificate failed verification")
    return cert


# ---------------------------------------------------------------------------
# stronger expansion


def stronger_expansion_lemma(g: BipartiteGraph, q: int) -> StrongerExpansionCertificate:
    """Possibly-empty (a_hat, b_hat) with a stronger q-expansion of a_hat
    into b_hat, N(b_hat) ⊆ a_hat, and |B \\ b_hat| <= q |A \\ a_hat|.

    No preconditions.  Works by greedy peeling: any deficient region found
    by the q-clone matching is moved out of (a_hat, b_hat) wholesale; the
    b_hat returned is the greedy fixpoint and is not guaranteed maximal.
    """
    if q < 1:
        raise PreconditionError("q-positive", "q must be a positive integer")
    a_hat, b_hat = set(g.side_a), set(g.side_b)
    while a_hat:
        assignment, tight = _peel_once(a_hat, b_hat, lambda a: g.adj_a[a], q)
        if assignment is not None:
            break
        peel_a, peel_b = tight
        a_hat -= peel_a
        b_hat -= peel_b
    if not a_hat:
        b_hat = {b for b in b_hat if not g.adj_b[b]}
    cert = StrongerExpansionCertificate(frozenset(a_hat), frozenset(b_hat), q)
    if not verify_stronger_expansion(g, cert):
        raise ContractViolationError("stronger expansion certificate failed verification")
    return cert


def certificate_from_stronger(g: BipartiteGraph, cert: StrongerExpansionCertificate) -> ExpansionCertificate:
    """Extract a plain q-expansion certificate on (a_hat, b_hat) from the
    flow witness guaranteed by a stronger expansion."""
    if not cert.a_hat:
        raise PreconditionError("nonempty-a-hat", "cannot extract from an empty a_hat")
    adj = {}
    for a in cert.a_hat:
        nbrs = tuple(b for b in g.adj_a[a] if b in cert.b_hat)
        for i in range(cert.q):
            adj[(a, i)] = nbrs
    pair_l, _ = hk_matching(adj)
    if len(pair_l) != len(adj):
        raise ContractViolationError("stronger expansion does not carry a full q-assignment")
    m = frozenset((a, b) for (a, _i), b in pair_l.items())
    out = ExpansionCertificate(cert.a_hat, cert.b_hat, m, cert.q)
    if not verify_expansion(g, out):
        raise ContractViolationError("extracted expansion certificate failed verification")
    return out


# ---------------------------------------------------------------------------
# additive expansion


def _find_additive_deficient(g: BipartiteGraph, a_hat: set[int], b_hat: set[int], q: int):
    """A set X ⊆ a_hat with |N(X) ∩ b_hat| < |X| + q, found through the
    replication criterion, or None if the surplus condition holds."""
    base_adj = {("v", a): tuple(b for b in g.adj_a[a] if b in b_hat) for a in a_hat}
    for a in sorted(a_hat):
        adj = dict(base_adj)
        for i in range(q):
            adj[("c", i)] = base_adj[("v", a)]
        pair_l, pair_r = hk_matching(adj)
        unsaturated = [node for node in sorted(adj) if node not in pair_l]
        if not unsaturated:
            continue
        seen_l, seen_r = alternating_reachability(adj, pair_l, pair_r, unsaturated)
        x = {node[1] for node in seen_l if node[0] == "v"}
        if any(node[0] == "c" for node in seen_l):
            x.add(a)
        return x, set(seen_r)
    return None


def additive_expansion_lemma(g: BipartiteGraph, q: int) -> AdditiveExpansionCertificate:
    """Non-empty (a_hat, b_hat) with additive surplus q on the induced
    subgraph and N(b_hat) ⊆ a_hat.  Requires |B| > q|A| and no isolated
    vertex in B."""
    if q < 1:
        raise PreconditionError("q-positive", "q must be a positive integer")
    if g.isolated_b():
        raise PreconditionError(
            "no-isolated-b", f"isolated B-vertices {sorted(g.isolated_b())[:5]}")
    if len(g.side_b) <= q * len(g.side_a):
        raise PreconditionError(
            "b-size-strict", f"need |B| > q|A|, got {len(g.side_b)} <= {q * len(g.side_a)}")
    a_hat, b_hat = set(g.side_a), set(g.side_b)
    while True:
        deficient = _find_additive_deficient(g, a_hat, b_hat, q)
        if deficient is None:
            break
        x, nb = deficient
        a_hat -= x
        b_hat -= nb
        if not a_hat:
            raise ContractViolationError("additive peeling exhausted side A")
    cert = AdditiveExpansionCertificate(frozenset(a_hat), frozenset(b_hat), q)
    if not verify_additive_expansion(g, cert):
        raise ContractViolationError("additive expansion certificate failed verification")
    return cert


# ---------------------------------------------------------------------------
# balanced expansion


def _fill_flow(g: WeightedBipartiteGraph, cap: Mapping[int, int]) -> dict[Edge, int]:
    """Max integral flow from B-supplies w(b) into A-sinks with capacities
    ``cap``, along the edges of the bipartite graph (BFS augmentation)."""
    base = g.base
    gamma: dict[Edge, int] = {}
    spent = {b: 0 for b in base.side_b}
    fill = {a: 0 for a in base.side_a}
    while True:
        parent: dict[tuple, tuple | None] = {}
        queue: deque = deque()
        for b in sorted(base.side_b):
            if spent[b] < g.weight(b):
                parent[("b", b)] = None
                queue.append(("b", b))
        goal = None
        while queue and goal is None:
            node = queue.popleft()
            if node[0] == "b":
                b = node[1]
                for a in base.adj_b[b]:
                    if ("a", a) not in parent:
                        parent[("a", a)] = node
                        if fill[a] < cap[a]:
                            goal = ("a", a)
                            break
                        queue.append(("a", a))
            else:
                a = node[1]
                for b in base.adj_a[a]:
                    if gamma.get((a, b), 0) > 0 and ("b", b) not in parent:
                        parent[("b", b)] = node
                        queue.append(("b", b))
        if goal is None:
            return gamma
        path = [goal]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        path.reverse()
        root_b = path[0][1]
        bottleneck = min(g.weight(root_b) - spent[root_b], cap[goal[1]] - fill[goal[1]])
        for i in range(len(path) - 1):
            u, v = path[i], path[i + 1]
            if u[0] == "a":  # residual edge a -> b cancels existing flow
                bottleneck = min(bottleneck, gamma[(u[1], v[1])])
        for i in range(len(path) - 1):
            u, v = path[i], path[i + 1]
            if u[0] == "b":
                edge = (v[1], u[1])
                gamma[edge] = gamma.get(edge, 0) + bottleneck
            else:
                edge = (u[1], v[1])
                gamma[edge] -= bottleneck
        spent[root_b] += bottleneck
        fill[goal[1]] += bottleneck


def balanced_expansion(g: WeightedBipartiteGraph, q: int) -> BalancedExpansionResult:
    """Balanced expansion (a1, a2, f, q): heavy heads a1 with load
    >= q - W + 1, light heads a2 with load <= q + W - 1, f total with
    f(b) ∈ N(b), and a1 closed under assigned neighborhoods.  Additionally
    a1 is non-empty whenever w(A) + w(B) >= q|A|.

    Requires no isolated vertex in B and q >= max weight over B.

    Construction: fill A-sinks of capacity max(0, q - w(a)) from B-supplies
    by max flow, make the support acyclic, classify A by whether a vertex
    can still reach spare sink capacity in the residual graph (closure falls
    out of the cut structure), then unsplit each side along its forest.
    """
    base = g.base
    if q < 0:
        raise PreconditionError("q-non-negative", "q must be non-negative")
    if q < g.w_b_max:
        raise PreconditionError(
            "q-at-least-wbmax", f"q = {q} < max B-weight = {g.w_b_max}")
    if base.isolated_b():
        raise PreconditionError(
            "no-isolated-b", f"isolated B-vertices {sorted(base.isolated_b())[:5]}")
    if not base.side_a and base.side_b:
        raise PreconditionError("no-isolated-b", "side B non-empty while side A is empty")
    if not base.side_a:
        raise PreconditionError("nonempty-side-a", "side A must be non-empty")

    cap = {a: max(0, q - g.weight(a)) for a in base.side_a}
    gamma = _rotate_support_acyclic(_fill_flow(g, cap))
    fill = {a: 0 for a in base.side_a}
    for (a, _b), value in gamma.items():
        fill[a] += value

    # vertices that can still reach spare sink capacity in the residual graph
    reach_a = {a for a in base.side_a if fill[a] < cap[a]}
    reach_b: set[int] = set()
    queue = deque(sorted(reach_a))
    while queue:
        a = queue.popleft()
        for b in base.adj_a[a]:
            if b not in reach_b:
                reach_b.add(b)
                for a2 in base.adj_b[b]:
                    if gamma.get((a2, b), 0) > 0 and a2 not in reach_a:
                        reach_a.add(a2)
                        queue.append(a2)

    a1 = frozenset(base.side_a - reach_a)
    a2 = frozenset(reach_a)
    gamma1 = {(a, b): v for (a, b), v in gamma.items() if a in a1}
    gamma2 = {(a, b): v for (a, b), v in gamma.items() if a in a2}
    f = _unsplit_assignment(gamma1, keep_high=True)
    f.update(_unsplit_assignment(gamma2, keep_high=False))
    for b in sorted(base.side_b - set(f)):
        candidates = [a for a in base.adj_b[b] if a in a1] or list(base.adj_b[b])
        f[b] = min(candidates)

    result = BalancedExpansionResult(a1, a2, dict(sorted(f.items())), q)
    if not verify_balanced_expansion(g, result):
        raise ContractViolationError("balanced expansion failed verification")
    if g.weight_of(base.side_a) + g.weight_of(base.side_b) >= q * len(base.side_a) and not a1:
        raise ContractViolationError("balanced expansion produced empty a1 on heavy input")
    return result
