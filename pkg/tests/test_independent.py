import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sparsedense.graph import (
    Graph,
    complement,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    generate_kl_graph,
    is_independent_set,
    path_graph,
    star_graph,
)
from sparsedense.independent import (
    ContractError,
    DenseSideViolation,
    UnsupportedClassError,
    enumerate_dense_side_is,
    enumerate_maximal_is,
    is_maximal_is,
    max_is,
    maximal_extension,
    solve_max_is,
    sparse_mis_enumerate,
)
from sparsedense.matching import bipartite_max_is, hopcroft_karp
from sparsedense.oracle import bron_kerbosch_mis, brute_force_alpha, maximal_cliques
from sparsedense.partition import NotInClassError
from sparsedense.recognizers import BIPARTITE, EDGELESS, is_bipartite, parse_spec

from conftest import graphs

P4 = path_graph(4)
C5 = cycle_graph(5)
C6 = cycle_graph(6)


class TestDenseSide:
    def test_p3(self):
        sets = enumerate_dense_side_is(path_graph(3), {0, 1, 2}, 3)
        assert sets == [frozenset(), frozenset({0}), frozenset({0, 2}), frozenset({1}), frozenset({2})]

    def test_clique(self):
        sets = enumerate_dense_side_is(complete_graph(3), {0, 1, 2}, 2)
        assert sets == [frozenset(), frozenset({0}), frozenset({1}), frozenset({2})]

    def test_empty(self):
        assert enumerate_dense_side_is(P4, set(), 2) == [frozenset()]

    def test_violation(self):
        with pytest.raises(DenseSideViolation) as err:
            enumerate_dense_side_is(P4, {0, 1, 2, 3}, 2)
        assert len(err.value.witness) == 2

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=9), st.integers(min_value=1, max_value=4))
    def test_all_small_independent_subsets(self, g, t):
        if brute_force_alpha(g) >= t:
            return
        expected = {frozenset(c) for r in range(t) for c in combinations(range(g.n), r) if is_independent_set(g, c)}
        got = enumerate_dense_side_is(g, range(g.n), t)
        assert set(got) == expected and len(got) == len(expected)


class TestSparseSide:
    def test_edgeless(self):
        assert sparse_mis_enumerate(P4, {0, 3}, EDGELESS) == [frozenset({0, 3})]

    def test_empty(self):
        assert sparse_mis_enumerate(P4, set(), EDGELESS) == [frozenset()]

    def test_not_edgeless(self):
        with pytest.raises(ContractError):
            sparse_mis_enumerate(P4, {0, 1}, EDGELESS)

    def test_bipartite_rejected(self):
        with pytest.raises(UnsupportedClassError, match="exponential"):
            sparse_mis_enumerate(P4, {0, 1}, BIPARTITE)


class TestExtension:
    def test_p4(self):
        assert maximal_extension(P4, {1}, {0, 3}) == {1, 3}

    def test_identity(self):
        assert maximal_extension(C6, set(), {0, 2, 4}) == {0, 2, 4}

    def test_k2(self):
        assert maximal_extension(complete_graph(2), {0}, {1}) == {0}

    def test_contract(self):
        with pytest.raises(ContractError):
            maximal_extension(P4, {0, 1}, {3})

    @given(graphs(max_n=9), st.data())
    def test_independent_and_maximal_within_union(self, g, data):
        def indep(label):
            order = data.draw(st.permutations(range(g.n)), label=label)
            chosen: set[int] = set()
            for v in order[: data.draw(st.integers(0, g.n), label=label + "_len")]:
                if g.adj[v].isdisjoint(chosen):
                    chosen.add(v)
            return chosen

        r_d, r_s = indep("r_d"), indep("r_s")
        out = maximal_extension(g, r_d, r_s)
        assert is_independent_set(g, out) and r_d <= out <= r_d | r_s
        assert all(not g.adj[v].isdisjoint(out) for v in (r_d | r_s) - out)


class TestIsMaximal:
    def test_examples(self):
        assert is_maximal_is(P4, {0, 2})
        assert not is_maximal_is(P4, {0})
        assert not is_maximal_is(P4, {0, 1})

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            is_maximal_is(P4, {5})


class TestEnumerateMaximal:
    def test_p4(self):
        expected = [frozenset({0, 2}), frozenset({0, 3}), frozenset({1, 3})]
        assert bron_kerbosch_mis(P4) == expected
        assert enumerate_maximal_is(P4, parse_spec("1,1")).sets == expected

    def test_star(self):
        g = star_graph(3)
        expected = {frozenset({0}), frozenset({1, 2, 3})}
        assert set(bron_kerbosch_mis(g)) == expected
        assert set(enumerate_maximal_is(g, parse_spec("1,1")).sets) == expected

    def test_c5(self):
        got = enumerate_maximal_is(C5, parse_spec("1,2"))
        assert set(got.sets) == {frozenset({i, (i + 2) % 5}) for i in range(5)}
        assert set(got.sets) == set(bron_kerbosch_mis(C5))

    def test_not_in_class(self):
        with pytest.raises(NotInClassError):
            enumerate_maximal_is(C5, parse_spec("1,1"))

    def test_bipartite_spec_unsupported(self):
        with pytest.raises(UnsupportedClassError):
            enumerate_maximal_is(P4, parse_spec("2,1"))

    def test_source_partition_reported(self):
        got = enumerate_maximal_is(P4, parse_spec("1,1"))
        assert got.source_partition.sparse_side == {0, 3}
        assert got.to_dict()["count"] == 3

    @pytest.mark.parametrize("l", [0, 1, 2, 3])
    def test_random_kl_graphs(self, l):
        rng = random.Random(l)
        spec = parse_spec(f"1,{l}")
        for trial in range(30):
            sizes = [rng.randint(0, 4)] + [rng.randint(0, 3) for _ in range(l)]
            g, _ = generate_kl_graph(1, l, sizes, rng.random(), seed=trial)
            got = enumerate_maximal_is(g, spec)
            assert got.sets == bron_kerbosch_mis(g)
            assert all(is_maximal_is(g, s) for s in got)

    def test_clique_duality_on_split_graphs(self):
        # maximal cliques of a split graph = maximal independent sets of its (split) complement
        spec = parse_spec("1,1")
        for seed in range(25):
            g, _ = generate_kl_graph(1, 1, [4, 4], 0.5, seed=seed)
            assert enumerate_maximal_is(complement(g), spec).sets == maximal_cliques(g)


class TestMatching:
    def _coloring(self, g):
        coloring, _ = is_bipartite(g)
        return coloring

    def test_k33(self):
        g = complete_bipartite_graph(3, 3)
        assert hopcroft_karp(g, self._coloring(g)).size == 3

    def test_p4(self):
        result = hopcroft_karp(P4, self._coloring(P4))
        assert result.size == 2 and result.matched_pairs == [(0, 1), (2, 3)]

    def test_edgeless(self):
        g = empty_graph(4)
        assert hopcroft_karp(g, self._coloring(g)).size == 0

    def test_invalid_coloring(self):
        bad = self._coloring(P4)
        with pytest.raises(ValueError):
            hopcroft_karp(Graph.from_edges(4, [(0, 2)]), bad)

    @given(graphs(max_n=10))
    def test_matching_is_valid(self, g):
        coloring = self._coloring(g)
        if coloring is None:
            return
        result = hopcroft_karp(g, coloring)
        used = [v for pair in result.matched_pairs for v in pair]
        assert len(used) == len(set(used))
        assert all(g.has_edge(u, w) and coloring.side[u] != coloring.side[w] for u, w in result.matched_pairs)


class TestKonig:
    def test_c6(self):
        s = bipartite_max_is(C6, is_bipartite(C6)[0])
        assert len(s) == 3 and is_independent_set(C6, s)

    def test_k33(self):
        g = complete_bipartite_graph(3, 3)
        assert bipartite_max_is(g, is_bipartite(g)[0]) in ({0, 1, 2}, {3, 4, 5})

    def test_p4(self):
        s = bipartite_max_is(P4, is_bipartite(P4)[0])
        assert brute_force_alpha(P4) == 2 and len(s) == 2 and is_independent_set(P4, s)

    def test_identity_random(self):
        rng = random.Random(99)
        for _ in range(60):
            a, b = rng.randint(0, 25), rng.randint(0, 25)
            p = rng.choice([0.05, 0.2, 0.5])
            g = Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b) if rng.random() < p])
            coloring = is_bipartite(g)[0]
            s = bipartite_max_is(g, coloring)
            assert is_independent_set(g, s)
            assert len(s) + hopcroft_karp(g, coloring).size == g.n
            if g.n <= 20:
                assert len(s) == brute_force_alpha(g)


class TestMaxIS:
    def test_p4_all_sparse(self):
        res = solve_max_is(P4, parse_spec("2,0"))
        assert res.size == 2 == brute_force_alpha(P4)
        assert res.dense_part == frozenset()

    def test_c5(self):
        assert len(max_is(C5, parse_spec("1,2"))) == 2 == brute_force_alpha(C5)

    def test_c6_plus_k4(self):
        g = disjoint_union(C6, complete_graph(4))
        assert brute_force_alpha(g) == 4
        s = max_is(g, parse_spec("2,3"))
        assert len(s) == 4 and is_independent_set(g, s)

    def test_k4(self):
        assert len(max_is(complete_graph(4), parse_spec("1,3"))) == 1

    def test_not_in_class(self):
        with pytest.raises(NotInClassError):
            max_is(C5, parse_spec("2,0"))

    def test_tie_break_least_serialization(self):
        # P4 maximum sets {0,2},{0,3},{1,3}; least ascending tuple is (0, 2)
        assert max_is(P4, parse_spec("1,1")) == {0, 2}

    @pytest.mark.parametrize("l", [0, 1, 2])
    def test_random_2l_graphs(self, l):
        rng = random.Random(100 + l)
        spec = parse_spec(f"2,{l}")
        for trial in range(25):
            sizes = [rng.randint(0, 4) for _ in range(2)] + [rng.randint(0, 3) for _ in range(l)]
            g, _ = generate_kl_graph(2, l, sizes, rng.random(), seed=trial)
            s = max_is(g, spec)
            assert is_independent_set(g, s) and len(s) == brute_force_alpha(g)
