import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crownkit.errors import FormatError
from crownkit.formats import (
    format_record,
    parse_bipartite,
    parse_cnf,
    parse_graph,
    parse_lists,
    parse_record,
    parse_vertex_set,
    serialize_bipartite,
    serialize_cnf,
    serialize_graph,
    serialize_lists,
)
from crownkit.graphs import CnfFormula, Graph


class TestParseGraph:
    def test_smallest_graph(self):
        g = parse_graph("p edge 2 1\ne 1 2\n")
        assert g.n == 2 and g.m == 1

    def test_triangle(self):
        g = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
        assert g.edges == frozenset({(1, 2), (2, 3), (1, 3)})

    def test_endpoint_out_of_range_names_line(self):
        with pytest.raises(FormatError) as err:
            parse_graph("p edge 2 1\ne 1 3\n")
        assert err.value.line_no == 2
        assert "out of range" in str(err.value)

    def test_duplicate_edge(self):
        with pytest.raises(FormatError) as err:
            parse_graph("p edge 2 2\ne 1 2\ne 2 1\n")
        assert err.value.line_no == 3

    def test_self_loop(self):
        with pytest.raises(FormatError):
            parse_graph("p edge 2 1\ne 1 1\n")

    def test_count_mismatch(self):
        with pytest.raises(FormatError):
            parse_graph("p edge 3 2\ne 1 2\n")

    def test_weights(self):
        g = parse_graph("p edge 2 1\ne 1 2\nw 2 7\n")
        assert g.weight(2) == 7 and g.weight(1) == 1

    def test_comments_ignored(self):
        g = parse_graph("c hello\np edge 1 0\n")
        assert g.n == 1


def canonical_graphs():
    edge_pool = [(u, v) for u in range(1, 8) for v in range(u + 1, 8)]
    return st.builds(
        lambda n, picks, ws: Graph.build(
            range(1, n + 1),
            [(u, v) for u, v in picks if v <= n],
            {v: w for v, w in ws.items() if v <= n}),
        st.integers(min_value=1, max_value=7),
        st.lists(st.sampled_from(edge_pool), max_size=12),
        st.dictionaries(st.integers(1, 7), st.integers(1, 5), max_size=4))


class TestRoundTrips:
    @given(canonical_graphs())
    @settings(max_examples=100, deadline=None)
    def test_graph_parse_serialize_identity(self, g):
        assert parse_graph(serialize_graph(g)) == g

    def test_serialize_then_parse_text_identity(self):
        text = "p edge 3 2\ne 1 2\ne 1 3\n"
        assert serialize_graph(parse_graph(text)) == text

    def test_noncontiguous_ids_are_renumbered(self):
        g = Graph.build([2, 5, 9], [(2, 9)])
        assert serialize_graph(g) == "p edge 3 1\ne 1 3\n"

    def test_cnf_roundtrip(self):
        phi = CnfFormula(3, (frozenset({1, -2}), frozenset({3}),))
        assert parse_cnf(serialize_cnf(phi)) == phi


class TestParseCnf:
    def test_basic(self):
        phi = parse_cnf("p cnf 2 2\n1 -2 0\n2 0\n")
        assert phi.num_vars == 2 and phi.num_clauses == 2

    def test_empty_clause_rejected(self):
        with pytest.raises(FormatError):
            parse_cnf("p cnf 1 1\n0\n")

    def test_missing_terminator(self):
        with pytest.raises(FormatError):
            parse_cnf("p cnf 1 1\n1\n")

    def test_tautology_rejected(self):
        with pytest.raises(FormatError):
            parse_cnf("p cnf 1 1\n1 -1 0\n")


class TestBipartiteFile:
    def test_roundtrip(self):
        text = "p edge 4 3\ne 1 3\ne 1 4\ne 2 4\na 1 2\n"
        g, weights = parse_bipartite(text)
        assert g.side_a == frozenset({1, 2})
        assert weights is None
        assert serialize_bipartite(g) == text

    def test_side_line_required(self):
        with pytest.raises(FormatError):
            parse_bipartite("p edge 2 1\ne 1 2\n")

    def test_edge_must_cross(self):
        with pytest.raises(FormatError):
            parse_bipartite("p edge 3 2\ne 1 2\ne 2 3\na 1 2\n")

    def test_weights_carried(self):
        _, weights = parse_bipartite("p edge 2 1\ne 1 2\nw 2 3\na 1\n")
        assert weights == {2: 3}


class TestListsAndSets:
    def test_lists_roundtrip(self):
        lists = {1: frozenset({4, 5}), 2: frozenset({6})}
        assert parse_lists(serialize_lists(lists)) == lists

    def test_duplicate_list_rejected(self):
        with pytest.raises(FormatError):
            parse_lists("l 1 2\nl 1 3\n")

    def test_vertex_set(self):
        assert parse_vertex_set("c s\n1 2\n9\n") == frozenset({1, 2, 9})


class TestRecords:
    def test_roundtrip(self):
        line = format_record([("rule", "vc.crown"), ("certificate", "crown:c=1:h=2:w=2-1")])
        assert parse_record(line) == {"rule": "vc.crown",
                                      "certificate": "crown:c=1:h=2:w=2-1"}

    def test_rejects_spaces(self):
        with pytest.raises(ValueError):
            format_record([("rule", "a b")])
