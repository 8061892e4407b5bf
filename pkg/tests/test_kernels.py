import random

import pytest

from crownkit.errors import PreconditionError
from crownkit.formats import serialize_cnf, serialize_graph
from crownkit.generators import greedy_vertex_cover, random_cnf, random_instance
from crownkit.graphs import CnfFormula, Graph, ProblemInstance, ProblemTag
from crownkit.kernels import (
    bound_cvd_cliques,
    kernelize_instance,
    kernelize_maxsat,
    kernelize_nk_coloring,
    kernelize_pcoc,
    kernelize_pcoc_weighted,
    kernelize_vertex_cover,
    oracle_answer,
    outcome_answer,
    reduce_list_coloring_colors,
    reduce_longest_cycle_vc,
    replay_trace,
)
from crownkit.kernels.cvd import greedy_p3_packing
from crownkit.kernels.coc import greedy_packing, _component_layout
from crownkit import oracles

from helpers import random_simple_graph


def star(leaves):
    return Graph.build(range(1, leaves + 2), [(1, v) for v in range(2, leaves + 2)])


def check_equivalence_and_replay(instance, outcome, samples=()):
    assert oracle_answer(instance) == outcome_answer(outcome)
    if outcome.reduced is not None:
        replayed = replay_trace(instance, outcome.trace)
        assert replayed.payload == outcome.reduced.payload
        assert replayed.k == outcome.reduced.k
        if isinstance(outcome.reduced.payload, Graph):
            assert (serialize_graph(replayed.graph)
                    == serialize_graph(outcome.reduced.graph))
        else:
            assert (serialize_cnf(replayed.formula)
                    == serialize_cnf(outcome.reduced.formula))
        assert outcome.reduced.k <= instance.k and outcome.reduced.k >= 0
        for app in outcome.trace:
            assert app.budget_delta <= 0


class TestVertexCoverKernel:
    def test_star_decides_yes(self):
        out = kernelize_vertex_cover(star(8), 1)
        assert out.decided is True

    def test_matching_of_k_plus_one_decides_no(self):
        g = Graph.build(range(1, 5), [(1, 2), (3, 4)])
        out = kernelize_vertex_cover(g, 1)
        assert out.decided is False
        assert any(app.rule == "vc.large-matching" for app in out.trace)

    def test_k_zero_with_edge_decides_no(self):
        out = kernelize_vertex_cover(Graph.build([1, 2], [(1, 2)]), 0)
        assert out.decided is False

    def test_random_equivalence_and_bound(self, rng):
        for _ in range(120):
            g = random_simple_graph(rng, rng.randint(1, 12), rng.uniform(0.05, 0.5))
            k = rng.randint(0, 5)
            inst = ProblemInstance(ProblemTag.VC, g, k)
            out = kernelize_vertex_cover(g, k)
            check_equivalence_and_replay(inst, out)
            if out.reduced is not None:
                assert out.reduced.graph.n <= 3 * out.reduced.k


class TestNkColoringKernel:
    def test_clique_is_no(self):
        g = Graph.build(range(1, 5), [(u, v) for u in range(1, 5)
                                      for v in range(u + 1, 5)])
        assert kernelize_nk_coloring(g, 1).decided is False

    def test_edgeless_is_yes(self):
        assert kernelize_nk_coloring(Graph.build(range(1, 5)), 3).decided is True

    def test_random_equivalence(self, rng):
        for _ in range(100):
            g = random_simple_graph(rng, rng.randint(1, 9), rng.uniform(0.1, 0.9))
            k = rng.randint(0, 3)
            inst = ProblemInstance(ProblemTag.NK_COLORING, g, k)
            out = kernelize_nk_coloring(g, k)
            check_equivalence_and_replay(inst, out)
            if out.reduced is not None:
                assert out.reduced.graph.n <= 3 * out.reduced.k


class TestMaxSatKernel:
    def test_many_clauses_decides_yes(self):
        phi = random_cnf(random.Random(5), 4, 10)
        assert kernelize_maxsat(phi, 5).decided is True

    def test_k_zero_decides_yes(self):
        phi = CnfFormula(1, (frozenset({1}),))
        assert kernelize_maxsat(phi, 0).decided is True

    def test_budget_beyond_clauses_decides_no(self):
        phi = CnfFormula(2, (frozenset({1}), frozenset({2})))
        assert kernelize_maxsat(phi, 3).decided is False

    def test_unsat_pair_with_spare_vars(self):
        # n >= m does not make a formula satisfiable; the kernel must not
        # pretend otherwise
        phi = CnfFormula(4, (frozenset({1}), frozenset({-1}),
                             frozenset({2, 3}), frozenset({4})))
        inst = ProblemInstance(ProblemTag.MAXSAT, phi, 4)
        out = kernelize_maxsat(phi, 4)
        assert oracle_answer(inst) == outcome_answer(out) is False

    def test_random_equivalence_and_bounds(self, rng):
        for _ in range(150):
            n = rng.randint(1, 12)
            phi = random_cnf(rng, n, rng.randint(1, 20))
            k = rng.randint(0, 14)
            inst = ProblemInstance(ProblemTag.MAXSAT, phi, k)
            out = kernelize_maxsat(phi, k)
            check_equivalence_and_replay(inst, out)
            if out.reduced is not None:
                reduced = out.reduced.formula
                assert reduced.num_vars < out.reduced.k
                assert reduced.num_clauses < 2 * out.reduced.k


class TestListColoringReduction:
    def test_identity_when_colors_already_few(self):
        g = Graph.build([1, 2], [(1, 2)])
        lists = {1: frozenset({1, 2}), 2: frozenset({1, 2})}
        out = reduce_list_coloring_colors(g, 0, lists)
        assert out.reduced.graph == g
        assert dict(out.reduced.lists) == lists

    def test_list_size_mismatch_rejected(self):
        g = Graph.build([1, 2], [(1, 2)])
        with pytest.raises(PreconditionError):
            reduce_list_coloring_colors(g, 0, {1: frozenset({1}), 2: frozenset({1, 2})})

    def test_random_equivalence_and_color_bound(self, rng):
        for _ in range(100):
            n = rng.randint(1, 7)
            g = random_simple_graph(rng, n, rng.uniform(0.1, 0.7))
            k = rng.randint(0, min(2, n))
            universe = list(range(1, n + 5))
            lists = {v: frozenset(rng.sample(universe, n - k)) for v in g.vertices}
            inst = ProblemInstance(ProblemTag.NK_LIST_COLORING, g, k, lists=lists)
            out = reduce_list_coloring_colors(g, k, lists)
            red = out.reduced
            colors = set().union(*red.lists.values()) if red.lists else set()
            assert len(colors) <= red.graph.n
            assert (oracles.exact_list_coloring(g, lists)
                    == oracles.exact_list_coloring(red.graph, red.lists))
            replayed = replay_trace(inst, out.trace)
            assert replayed.payload == red.payload
            assert dict(replayed.lists) == dict(red.lists)


class TestLongestCycleReduction:
    def test_triangle_unchanged(self):
        g = Graph.build([1, 2, 3], [(1, 2), (2, 3), (1, 3)])
        out = reduce_longest_cycle_vc(g, 2, 3, frozenset({1, 2}))
        assert out.reduced is not None
        assert out.reduced.graph == g

    def test_twin_deleted_cycle_preserved(self):
        # C4 = 1-3-2-4 plus vertex 5 duplicating 3's attachments
        g = Graph.build(range(1, 6), [(1, 3), (2, 3), (1, 4), (2, 4), (1, 5), (2, 5)])
        out = reduce_longest_cycle_vc(g, 2, 4, frozenset({1, 2}))
        assert out.reduced is not None
        assert out.reduced.graph.n == 4
        assert oracles.has_cycle_of_length(out.reduced.graph, 4)

    def test_not_a_cover_rejected(self):
        g = Graph.build([1, 2, 3], [(1, 2), (2, 3)])
        with pytest.raises(PreconditionError):
            reduce_longest_cycle_vc(g, 1, 3, frozenset({1}))

    def test_random_equivalence_and_bound(self, rng):
        for _ in range(150):
            g = random_simple_graph(rng, rng.randint(3, 10), rng.uniform(0.15, 0.6))
            cover = greedy_vertex_cover(g)
            if not cover:
                continue
            k = len(cover)
            ell = rng.randint(3, 6)
            inst = ProblemInstance(ProblemTag.LONGEST_CYCLE_VC, g, k,
                                   ell=ell, modulator=cover)
            out = reduce_longest_cycle_vc(g, k, ell, cover)
            check_equivalence_and_replay(inst, out)
            if out.reduced is not None:
                mult = 2 if ell == 4 else 1
                assert out.reduced.graph.n <= k + mult * k * (k - 1) // 2


class TestCocKernels:
    def test_short_path_budget_zero(self):
        for p in (1, 2, 3):
            g = Graph.build(range(1, p + 2), [(i, i + 1) for i in range(1, p + 1)])
            assert kernelize_pcoc(g, 0, p).decided is False

    def test_all_small_components_yes(self):
        g = Graph.build(range(1, 7), [(1, 2), (3, 4), (5, 6)])
        assert kernelize_pcoc(g, 0, 2).decided is True

    def test_random_equivalence_and_bounds(self, rng):
        for _ in range(100):
            g = random_simple_graph(rng, rng.randint(1, 11), rng.uniform(0.05, 0.5))
            k = rng.randint(0, 3)
            p = rng.choice([1, 2, 3])
            inst = ProblemInstance(ProblemTag.PCOC, g, k, p=p)
            out = kernelize_pcoc(g, k, p)
            check_equivalence_and_replay(inst, out)
            instw = ProblemInstance(ProblemTag.PCOC_WEIGHTED, g, k, p=p)
            outw = kernelize_pcoc_weighted(g, k, p)
            check_equivalence_and_replay(instw, outw)
            if out.decided is not None and outw.decided is not None:
                assert out.decided == outw.decided
            if out.reduced is not None:
                red = out.reduced
                modulator, packs = greedy_packing(red.graph, p)
                comps, _links = _component_layout(red.graph, modulator)
                assert len(modulator) <= (p + 1) * red.k
                assert len(comps) <= p * (p + 1) * red.k
                assert all(len(c) <= p for c in comps.values())
            if outw.reduced is not None:
                red = outw.reduced
                modulator, packs = greedy_packing(red.graph, p)
                outside = red.graph.n - len(modulator)
                assert outside <= (2 * p - 1) * (p + 1) * red.k

    def test_weighted_kernel_strictly_smaller_when_plain_overshoots(self):
        # hub triangle with five pendant 2-paths: the plain kernel's fixpoint
        # keeps 10 non-modulator vertices (five components, within p(p+1)k),
        # which is more than the weighted bound (2p-1)(p+1)k = 9, so only
        # the weighted rule can still fire
        p, k = 2, 1
        edges = [(1, 2), (1, 3), (2, 3)]
        for i in range(5):
            a, b = 4 + 2 * i, 5 + 2 * i
            edges += [(a, b), (1, a)]
        built = Graph.build(range(1, 14), edges)
        plain_out = kernelize_pcoc(built, k, p)
        weighted_out = kernelize_pcoc_weighted(built, k, p)
        plain = plain_out.reduced
        assert plain is not None
        plain_mod, _ = greedy_packing(plain.graph, p)
        assert plain.graph.n - len(plain_mod) > (2 * p - 1) * (p + 1) * plain.k
        assert any(app.rule == "pcocw.expansion" for app in weighted_out.trace)
        weighted_size = (0 if weighted_out.decided is not None
                         else weighted_out.reduced.graph.n)
        assert weighted_size < plain.graph.n
        inst = ProblemInstance(ProblemTag.PCOC, built, k, p=p)
        assert oracle_answer(inst) == outcome_answer(plain_out)
        instw = ProblemInstance(ProblemTag.PCOC_WEIGHTED, built, k, p=p)
        assert oracle_answer(instw) == outcome_answer(weighted_out)


class TestCvdKernel:
    def test_cluster_graph_yes(self):
        g = Graph.build(range(1, 7), [(1, 2), (1, 3), (2, 3), (4, 5)])
        out = bound_cvd_cliques(g, 0)
        assert out.decided is True

    def test_disjoint_p3s_decide_no(self):
        edges = []
        for i in range(3):  # k+1 = 3 disjoint P3s, budget 2
            base = 3 * i + 1
            edges += [(base, base + 1), (base + 1, base + 2)]
        g = Graph.build(range(1, 10), edges)
        assert bound_cvd_cliques(g, 2).decided is False

    def test_random_equivalence_and_clique_bound(self, rng):
        for _ in range(100):
            g = random_simple_graph(rng, rng.randint(1, 11), rng.uniform(0.1, 0.6))
            k = rng.randint(0, 4)
            inst = ProblemInstance(ProblemTag.CVD_CLIQUE_BOUND, g, k)
            out = bound_cvd_cliques(g, k)
            check_equivalence_and_replay(inst, out)
            if out.reduced is not None:
                red = out.reduced
                packing = greedy_p3_packing(red.graph)
                modulator = frozenset(v for triple in packing for v in triple)
                comps, _links = _component_layout(red.graph, modulator)
                assert len(comps) <= 6 * red.k


class TestDispatchDeterminism:
    def test_two_runs_identical(self, rng):
        for tag in ProblemTag:
            local = random.Random(4242)
            insts = [random_instance(tag, local) for _ in range(10)]
            for inst in insts:
                first = kernelize_instance(inst)
                second = kernelize_instance(inst)
                assert first == second
                if first.reduced is not None:
                    if isinstance(first.reduced.payload, Graph):
                        assert (serialize_graph(first.reduced.graph)
                                == serialize_graph(second.reduced.graph))
                    else:
                        assert (serialize_cnf(first.reduced.formula)
                                == serialize_cnf(second.reduced.formula))
