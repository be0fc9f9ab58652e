import pytest
from hypothesis import given, settings

from sparsedense.graph import (
    Graph,
    GraphFormatError,
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    generate_kl_graph,
    induced_subgraph,
    is_clique,
    is_independent_set,
    parse_dimacs,
    parse_edge_list,
    path_graph,
    subdivide_edges,
    to_dimacs,
    to_edge_list,
)
from sparsedense.oracle import brute_force_alpha
from sparsedense.partition import SparseDensePartition, verify_partition
from sparsedense.recognizers import ClassSpec

from conftest import graphs

P4 = path_graph(4)
K3 = complete_graph(3)


def test_graph_rejects_bad_adjacency():
    with pytest.raises(ValueError):
        Graph(2, (frozenset({1}), frozenset()))
    with pytest.raises(ValueError):
        Graph(1, (frozenset({0}),))
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])


class TestParseEdgeList:
    def test_k2(self):
        g = parse_edge_list("2 1\n0 1")
        assert g.n == 2 and g.edges() == [(0, 1)]

    def test_p4(self):
        assert parse_edge_list("4 3\n0 1\n1 2\n2 3") == P4

    def test_edgeless(self):
        g = parse_edge_list("3 0")
        assert g.n == 3 and g.m == 0

    def test_duplicates_collapse(self):
        g = parse_edge_list("3 3\n0 1\n1 0\n0 1")
        assert g.edges() == [(0, 1)]

    @pytest.mark.parametrize(
        "text, line",
        [
            ("2 1\n0 x", 2),
            ("2 1\n0 2", 2),
            ("2 1\n1 1", 2),
            ("3 2\n0 1\n0 1 2", 3),
            ("3", 1),
        ],
    )
    def test_errors_name_line(self, text, line):
        with pytest.raises(GraphFormatError) as err:
            parse_edge_list(text)
        assert err.value.line == line
        assert f"line {line}" in str(err.value)

    def test_wrong_edge_count(self):
        with pytest.raises(GraphFormatError):
            parse_edge_list("3 2\n0 1")


class TestParseDimacs:
    def test_k2(self):
        assert parse_dimacs("p edge 2 1\ne 1 2") == complete_graph(2)

    def test_k3_with_comment(self):
        assert parse_dimacs("c hi\np edge 3 3\ne 1 2\ne 2 3\ne 1 3") == K3

    def test_out_of_range(self):
        with pytest.raises(GraphFormatError, match="out of range"):
            parse_dimacs("p edge 3 1\ne 1 4")

    def test_missing_problem_line(self):
        with pytest.raises(GraphFormatError, match="problem line"):
            parse_dimacs("e 1 2")

    def test_self_loop(self):
        with pytest.raises(GraphFormatError, match="self-loop"):
            parse_dimacs("p edge 2 1\ne 2 2")


@given(graphs(max_n=9))
def test_round_trip_both_formats(g):
    assert parse_edge_list(to_edge_list(g)) == g
    assert parse_dimacs(to_dimacs(g)) == g


def test_serialization_is_sorted():
    g = Graph.from_edges(3, [(2, 1), (1, 0)])
    assert to_edge_list(g) == "3 2\n0 1\n1 2\n"
    assert to_dimacs(g) == "p edge 3 2\ne 1 2\ne 2 3\n"


class TestComplement:
    def test_k3(self):
        assert complement(K3) == empty_graph(3)

    def test_p4_self_complementary(self):
        # complement of 0-1-2-3 has edges 02, 03, 13: the path 2-0-3-1
        co = complement(P4)
        assert co.edges() == [(0, 2), (0, 3), (1, 3)]
        assert co == Graph.from_edges(4, [(2, 0), (0, 3), (3, 1)])

    def test_single_vertex(self):
        assert complement(empty_graph(1)) == empty_graph(1)

    @given(graphs(max_n=9))
    def test_involution(self, g):
        assert complement(complement(g)) == g


class TestInducedSubgraph:
    def test_edge(self):
        sub, id_map = induced_subgraph(P4, {0, 1})
        assert sub == complete_graph(2) and id_map == (0, 1)

    def test_nonadjacent(self):
        sub, id_map = induced_subgraph(P4, {0, 2})
        assert sub == empty_graph(2) and id_map == (0, 2)

    def test_c5_arc_is_p3(self):
        sub, _ = induced_subgraph(cycle_graph(5), {0, 1, 2})
        assert sub == path_graph(3)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            induced_subgraph(P4, {4})


class TestPredicates:
    def test_independent(self):
        assert is_independent_set(P4, {0, 2})
        assert not is_independent_set(P4, {0, 1})
        assert is_independent_set(P4, set())

    def test_clique(self):
        assert is_clique(K3, {0, 1, 2})
        assert is_clique(P4, {1, 2})
        assert not is_clique(P4, {0, 3})
        assert is_clique(P4, {3}) and is_clique(P4, set())

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            is_independent_set(P4, {7})

    @given(graphs(max_n=8), graphs(max_n=8))
    def test_duality(self, g, h):
        s = {v for v in range(g.n) if v < h.n and h.degree(v) % 2 == 0}
        assert is_independent_set(g, s) == is_clique(complement(g), s)


class TestSubdivide:
    def test_k2_becomes_p4(self):
        g = subdivide_edges(complete_graph(2))
        # 0 - x=2 - y=3 - 1
        assert g.edges() == [(0, 2), (1, 3), (2, 3)]
        assert brute_force_alpha(complete_graph(2)) == 1 and brute_force_alpha(g) == 2

    def test_k3_becomes_c9(self):
        g = subdivide_edges(K3)
        assert g.n == 9 and g.m == 9 and all(g.degree(v) == 2 for v in range(9))
        assert brute_force_alpha(g) == 4

    def test_edgeless_is_identity(self):
        assert subdivide_edges(empty_graph(3)) == empty_graph(3)

    def test_vertex_numbering(self):
        g = subdivide_edges(P4)
        # edges (0,1),(1,2),(2,3) -> x/y pairs (4,5),(6,7),(8,9)
        assert g.edges() == [(0, 4), (1, 5), (1, 6), (2, 7), (2, 8), (3, 9), (4, 5), (6, 7), (8, 9)]

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=7))
    def test_alpha_shift(self, g):
        h = subdivide_edges(g)
        assert h.n == g.n + 2 * g.m and h.m == 3 * g.m
        assert brute_force_alpha(h) == brute_force_alpha(g) + g.m


class TestGenerateKL:
    def test_no_cross_edges(self):
        g, parts = generate_kl_graph(1, 1, [2, 2], 0.0, seed=5)
        assert g.m == 1
        indep, clique = parts
        assert is_independent_set(g, indep) and is_clique(g, clique)
        assert len(indep) == len(clique) == 2

    def test_single_clique(self):
        g, _ = generate_kl_graph(0, 1, [4])
        assert g == complete_graph(4)

    def test_planted_partition_verifies(self):
        g, parts = generate_kl_graph(1, 2, [3, 2, 2], 0.5, seed=11)
        assert g.n == 7
        p = SparseDensePartition(parts[0], parts[1] | parts[2])
        assert verify_partition(g, ClassSpec.kl(1, 2), p)

    def test_seed_determinism(self):
        a = generate_kl_graph(2, 2, [3, 3, 2, 2], 0.4, seed=9)
        b = generate_kl_graph(2, 2, [3, 3, 2, 2], 0.4, seed=9)
        assert a == b

    def test_full_cross_edges(self):
        g, _ = generate_kl_graph(3, 0, [2, 2, 2], 1.0, seed=1)
        assert g.m == 12
        assert all(g.degree(v) == 4 for v in range(6))

    def test_unshuffled_layout(self):
        g, parts = generate_kl_graph(1, 1, [2, 3], 0.0, shuffle=False)
        assert parts == [frozenset({0, 1}), frozenset({2, 3, 4})]
        assert g == disjoint_union(empty_graph(2), complete_graph(3))

    @pytest.mark.parametrize(
        "args",
        [(1, 1, [2]), (1, 1, [2, -1]), (-1, 1, [2]), (1, 0, [2], 1.5)],
    )
    def test_errors(self, args):
        with pytest.raises(ValueError):
            generate_kl_graph(*args)

