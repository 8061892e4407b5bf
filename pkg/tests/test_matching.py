import random
from itertools import combinations

import pytest

from crownkit.errors import GuardError, InvalidInstanceError
from crownkit.graphs import BipartiteGraph, Graph, normalize_edge
from crownkit.matching import (
    Matching,
    capacitated_assignment,
    has_surplus_q,
    max_matching,
    minimal_hall_set,
    violator_is_minimal,
)
from crownkit.oracles import exact_vertex_cover

from helpers import brute_max_matching_size, hall_says_saturating


def random_bip(rng, na, nb, density):
    edges = [(a, b) for a in range(1, na + 1)
             for b in range(na + 1, na + nb + 1) if rng.random() < density]
    return BipartiteGraph.build(range(1, na + 1), range(na + 1, na + nb + 1), edges)


def brute_capacitated_total(g: BipartiteGraph, caps) -> int:
    """Exhaustive search over per-b choices (send to one a or nowhere)."""
    bs = sorted(g.side_b)

    def go(i, load):
        if i == len(bs):
            return 0
        b = bs[i]
        best = go(i + 1, load)
        for a in g.adj_b[b]:
            if load[a] < caps[a]:
                load[a] += 1
                best = max(best, 1 + go(i + 1, load))
                load[a] -= 1
        return best

    return go(0, {a: 0 for a in g.side_a})


class TestMaxMatching:
    def test_complete_33(self):
        g = random_bip(random.Random(0), 3, 3, 1.1)
        assert max_matching(g).size == 3

    def test_star(self):
        g = BipartiteGraph.build([1], range(2, 7), [(1, b) for b in range(2, 7)])
        assert max_matching(g).size == 1

    def test_matches_brute_force(self, rng):
        for _ in range(80):
            g = random_bip(rng, rng.randint(0, 8), rng.randint(0, 8), rng.uniform(0.1, 0.7))
            m = max_matching(g)
            assert m.is_matching_of(g)
            assert m.size == brute_max_matching_size(
                [normalize_edge(a, b) for a, b in g.edges])

    def test_matching_type_rejects_shared_endpoint(self):
        with pytest.raises(InvalidInstanceError):
            Matching(frozenset({(1, 3), (1, 4)}))

    def test_konig_duality(self, rng):
        # max matching equals min vertex cover on bipartite hosts
        for _ in range(40):
            na = rng.randint(0, 6)
            nb = rng.randint(0, min(6, 12 - na))
            g = random_bip(rng, na, nb, rng.uniform(0.1, 0.7))
            assert max_matching(g).size == exact_vertex_cover(g.as_graph())


class TestMinimalHallSet:
    def test_absent_on_perfect_matching(self):
        g = BipartiteGraph.build([1, 2], [3, 4], [(1, 3), (2, 4)])
        assert minimal_hall_set(g) is None

    def test_two_a_sharing_one_b(self):
        g = BipartiteGraph.build([1, 2], [3], [(1, 3), (2, 3)])
        violator = minimal_hall_set(g)
        assert violator is not None
        assert violator.x == frozenset({1, 2})
        assert violator.neighborhood == frozenset({3})

    def test_presence_matches_hall(self, rng):
        for _ in range(80):
            g = random_bip(rng, rng.randint(1, 8), rng.randint(0, 8), rng.uniform(0.1, 0.6))
            violator = minimal_hall_set(g)
            assert (violator is None) == hall_says_saturating(g)
            assert (violator is None) == max_matching(g).saturates(g.side_a)

    def test_violator_structure_and_minimality(self, rng):
        found = 0
        for _ in range(200):
            g = random_bip(rng, rng.randint(1, 7), rng.randint(0, 6), rng.uniform(0.1, 0.5))
            violator = minimal_hall_set(g)
            if violator is None:
                continue
            found += 1
            assert len(violator.neighborhood) < len(violator.x)
            assert g.neighborhood_of_a(violator.x) == violator.neighborhood
            assert violator_is_minimal(g, violator)
        assert found >= 20

    def test_minimality_guard(self):
        side_a = list(range(1, 15))
        side_b = list(range(100, 113))
        g = BipartiteGraph.build(side_a, side_b,
                                 [(a, b) for a in side_a for b in side_b])
        violator = minimal_hall_set(g)
        assert len(violator.x) == 14
        with pytest.raises(GuardError):
            violator_is_minimal(g, violator)


class TestCapacitatedAssignment:
    def test_caps_one_reduce_to_matching(self, rng):
        for _ in range(30):
            g = random_bip(rng, rng.randint(1, 5), rng.randint(0, 6), rng.uniform(0.2, 0.7))
            total = sum(capacitated_assignment(g, {a: 1 for a in g.side_a}).values())
            assert total == max_matching(g).size

    def test_star_with_capacity_two(self):
        g = BipartiteGraph.build([1], [2, 3, 4, 5], [(1, b) for b in (2, 3, 4, 5)])
        assignment = capacitated_assignment(g, {1: 2})
        assert sum(assignment.values()) == 2

    def test_matches_exhaustive(self, rng):
        for _ in range(40):
            g = random_bip(rng, rng.randint(1, 5), rng.randint(0, 6), rng.uniform(0.2, 0.7))
            caps = {a: rng.randint(1, 3) for a in g.side_a}
            assignment = capacitated_assignment(g, caps)
            loads = {a: 0 for a in g.side_a}
            sent = {b: 0 for b in g.side_b}
            for (a, b), value in assignment.items():
                assert value in (0, 1)
                loads[a] += value
                sent[b] += value
            assert all(loads[a] <= caps[a] for a in g.side_a)
            assert all(v <= 1 for v in sent.values())
            assert sum(assignment.values()) == brute_capacitated_total(g, caps)

    def test_missing_capacity_rejected(self):
        g = BipartiteGraph.build([1, 2], [3], [(1, 3)])
        with pytest.raises(InvalidInstanceError):
            capacitated_assignment(g, {1: 1})


def brute_surplus(g: BipartiteGraph, q: int) -> bool:
    side_a = sorted(g.side_a)
    for size in range(1, len(side_a) + 1):
        for combo in combinations(side_a, size):
            if len(g.neighborhood_of_a(combo)) < size + q:
                return False
    return True


def definitional_surplus(g: BipartiteGraph, q: int) -> bool:
    """Saturating matching survives deletion of every q-subset of B."""
    bs = sorted(g.side_b)
    if len(bs) < q:
        return not g.side_a
    for removed in combinations(bs, q):
        gone = set(removed)
        sub = BipartiteGraph(g.side_a, g.side_b - gone,
                             frozenset(e for e in g.edges if e[1] not in gone))
        if not max_matching(sub).saturates(g.side_a):
            return False
    return True


class TestHasSurplus:
    def test_k35(self):
        g = random_bip(random.Random(0), 3, 5, 1.1)
        assert has_surplus_q(g, 2)

    def test_degree_q_vertex_fails(self):
        g = BipartiteGraph.build([1], [2, 3], [(1, 2), (1, 3)])
        assert not has_surplus_q(g, 2)

    def test_matches_subset_enumeration(self, rng):
        for _ in range(60):
            g = random_bip(rng, rng.randint(1, 7), rng.randint(0, 7), rng.uniform(0.2, 0.8))
            q = rng.randint(0, 3)
            assert has_surplus_q(g, q) == brute_surplus(g, q)

    def test_q_zero_is_saturation(self, rng):
        for _ in range(30):
            g = random_bip(rng, rng.randint(1, 6), rng.randint(0, 6), rng.uniform(0.2, 0.7))
            assert has_surplus_q(g, 0) == max_matching(g).saturates(g.side_a)

    def test_replication_equals_definitional(self, rng):
        # |B| <= 10, q <= 3 per the contract
        for _ in range(40):
            g = random_bip(rng, rng.randint(1, 5), rng.randint(0, 10), rng.uniform(0.2, 0.8))
            q = rng.randint(1, 3)
            assert has_surplus_q(g, q) == definitional_surplus(g, q)
