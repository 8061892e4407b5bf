import random
from itertools import combinations

import pytest

from crownkit.errors import GuardError
from crownkit.graphs import CnfFormula, Graph
from crownkit.generators import random_cnf
from crownkit.oracles import (
    exact_chromatic_number,
    exact_cvd,
    exact_list_coloring,
    exact_maxsat,
    exact_pcoc,
    exact_vertex_cover,
    has_cycle_of_length,
)

from helpers import random_simple_graph


def cycle(n):
    return Graph.build(range(1, n + 1),
                       [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete(n):
    return Graph.build(range(1, n + 1),
                       [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


class TestVertexCover:
    def test_single_edge(self):
        assert exact_vertex_cover(Graph.build([1, 2], [(1, 2)])) == 1

    def test_c5(self):
        assert exact_vertex_cover(cycle(5)) == 3

    def test_k33(self):
        edges = [(a, b) for a in (1, 2, 3) for b in (4, 5, 6)]
        assert exact_vertex_cover(Graph.build(range(1, 7), edges)) == 3

    def test_guard(self):
        with pytest.raises(GuardError):
            exact_vertex_cover(Graph.build(range(1, 22)))


def chromatic_by_independent_set_cover(g: Graph) -> int:
    """Second oracle: cover V by a minimum number of independent sets."""
    vs = g.sorted_vertices()
    if not vs:
        return 0
    index = {v: i for i, v in enumerate(vs)}
    n = len(vs)
    independent = []
    for mask in range(1, 1 << n):
        members = [vs[i] for i in range(n) if mask >> i & 1]
        if all(not g.has_edge(u, v) for u, v in combinations(members, 2)):
            independent.append(mask)
    best = {0: 0}
    frontier = {0}
    count = 0
    while True:
        if (1 << n) - 1 in frontier:
            return count
        count += 1
        frontier = {mask | ind for mask in frontier for ind in independent}


class TestChromaticNumber:
    def test_edgeless(self):
        assert exact_chromatic_number(Graph.build([1, 2, 3])) == 1

    def test_odd_cycle(self):
        assert exact_chromatic_number(cycle(5)) == 3

    def test_even_cycle_bipartite(self):
        assert exact_chromatic_number(cycle(6)) == 2

    def test_clique(self):
        assert exact_chromatic_number(complete(5)) == 5

    def test_matches_independent_set_cover(self, rng):
        for _ in range(25):
            g = random_simple_graph(rng, rng.randint(1, 7), rng.uniform(0.2, 0.8))
            assert exact_chromatic_number(g) == chromatic_by_independent_set_cover(g)


class TestMaxSat:
    def test_unit_clause(self):
        assert exact_maxsat(CnfFormula(1, (frozenset({1}),))) == 1

    def test_contradictory_units(self):
        phi = CnfFormula(1, (frozenset({1}), frozenset({-1})))
        assert exact_maxsat(phi) == 1

    def test_half_clauses_anchor(self, rng):
        for _ in range(60):
            n = rng.randint(1, 8)
            phi = random_cnf(rng, n, rng.randint(1, 16))
            assert exact_maxsat(phi) >= (phi.num_clauses + 1) // 2

    def test_guard(self):
        with pytest.raises(GuardError):
            exact_maxsat(CnfFormula(17, (frozenset({1}),)))


class TestDeletionOracles:
    def test_pcoc_equals_vc_at_p1(self, rng):
        for _ in range(30):
            g = random_simple_graph(rng, rng.randint(1, 9), rng.uniform(0.1, 0.6))
            assert exact_pcoc(g, 1) == exact_vertex_cover(g)

    def test_path_pcoc(self):
        g = Graph.build(range(1, 6), [(i, i + 1) for i in range(1, 5)])
        assert exact_pcoc(g, 2) == 1

    def test_cluster_graph_cvd_zero(self):
        g = Graph.build(range(1, 6), [(1, 2), (1, 3), (2, 3), (4, 5)])
        assert exact_cvd(g) == 0

    def test_p3_needs_one_deletion(self):
        g = Graph.build([1, 2, 3], [(1, 2), (2, 3)])
        assert exact_cvd(g) == 1


class TestCycles:
    def test_c_ell_has_cycle(self):
        for ell in (3, 4, 5, 6):
            assert has_cycle_of_length(cycle(ell), ell)

    def test_c5_has_no_c4(self):
        assert not has_cycle_of_length(cycle(5), 4)

    def test_short_lengths_rejected(self):
        assert not has_cycle_of_length(complete(4), 2)

    def test_matches_manual(self):
        # square plus chord: has 3-cycles and the 4-cycle
        g = Graph.build(range(1, 5), [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)])
        assert has_cycle_of_length(g, 3)
        assert has_cycle_of_length(g, 4)
        assert not has_cycle_of_length(g, 5)


class TestListColoring:
    def test_trivial_yes(self):
        g = Graph.build([1, 2], [(1, 2)])
        assert exact_list_coloring(g, {1: frozenset({1}), 2: frozenset({2})})

    def test_trivial_no(self):
        g = Graph.build([1, 2], [(1, 2)])
        assert not exact_list_coloring(g, {1: frozenset({1}), 2: frozenset({1})})
