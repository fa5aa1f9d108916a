import random
import pytest

from oracles import all_trees, brute_exact, literal_p, random_graph
from vrank.errors import Infeasible, NotATree, SearchBudgetExceeded
from vrank.exact import exact_rank_number, min_f, p_predicate, p_table
from vrank.generators import complete_kary_tree, path, subdivided_replicated_clique
from vrank.graph import Graph
from vrank.rooted_trees import rooted_trees
from vrank.validators import is_l_vr, is_us, is_vr

K2 = Graph(2, [(0, 1)])


def star(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


class TestExactExamples:
    def test_t3(self):
        T, _, _ = complete_kary_tree(3)
        k, c = exact_rank_number(T, "us")
        assert k == 3 and is_us(T, c) is None

    @pytest.mark.parametrize("kind,l", [("us", None), ("lvr", 1), ("lvr", 3), ("vr", None)])
    def test_k2(self, kind, l):
        assert exact_rank_number(K2, kind, l=l)[0] == 2

    def test_p8_vr(self):
        k, c = exact_rank_number(path(8), "vr")
        assert k == 4 and is_vr(path(8), c) is None

    def test_subclique_infeasible(self):
        with pytest.raises(Infeasible):
            exact_rank_number(subdivided_replicated_clique(3), "us", max_k=2)

    def test_empty(self):
        assert exact_rank_number(Graph(0), "us") == (0, [])

    def test_lvr_needs_l(self):
        with pytest.raises(ValueError):
            exact_rank_number(K2, "lvr")

    def test_budget(self):
        with pytest.raises(SearchBudgetExceeded):
            exact_rank_number(subdivided_replicated_clique(3), "us", max_k=3, budget=10)


class TestExactAgainstBruteForce:
    def test_random_small_graphs(self):
        rng = random.Random(21)
        for _ in range(60):
            n = rng.randint(1, 6)
            G = random_graph(rng, n, rng.random())
            for kind, l in (("us", None), ("vr", None), ("lvr", 1), ("lvr", 3)):
                k, c = exact_rank_number(G, kind, l=l)
                assert k == brute_exact(G, kind, l)
                check = {"us": lambda: is_us(G, c), "vr": lambda: is_vr(G, c),
                         "lvr": lambda: is_l_vr(G, c, l)}[kind]
                assert check() is None

    def test_trees_up_to_seven(self):
        for n in range(1, 8):
            for T in all_trees(n):
                assert exact_rank_number(T, "us")[0] == brute_exact(T, "us")

    def test_hierarchy_random(self):
        rng = random.Random(22)
        for _ in range(40):
            G = random_graph(rng, rng.randint(1, 9), rng.random() * 0.6)
            us = exact_rank_number(G, "us")[0]
            lvr = [exact_rank_number(G, "lvr", l=l)[0] for l in (2, 3, 4)]
            vr = exact_rank_number(G, "vr")[0]
            assert us == lvr[0]
            assert lvr == sorted(lvr) and lvr[-1] <= vr


class TestPPredicate:
    def test_single_vertex(self):
        assert p_predicate(Graph(1), 0, 1, 4)

    def test_cherry(self):
        assert not p_predicate(star(2), 0, 1, 4)

    def test_edge(self):
        assert p_predicate(K2, 0, 1, 4)

    def test_not_tree(self):
        with pytest.raises(NotATree):
            p_predicate(Graph(3, [(0, 1), (1, 2), (0, 2)]), 0, 1, 4)

    def test_bad_i(self):
        with pytest.raises(ValueError):
            p_predicate(K2, 0, 4, 4)

    @pytest.mark.parametrize("k", [3, 4])
    def test_matches_literal_enumeration(self, k):
        for n in range(1, 6):
            for T, r in rooted_trees(n):
                for i in range(1, k):
                    assert p_predicate(T, r, i, k) == literal_p(T, r, i, k)

    def test_matches_literal_k5_small(self):
        for n in range(1, 5):
            for T, r in rooted_trees(n):
                for i in range(1, 5):
                    assert p_predicate(T, r, i, 5) == literal_p(T, r, i, 5)

    def test_every_root(self):
        for T in all_trees(5):
            for r in range(T.n):
                assert p_predicate(T, r, 2, 4) == literal_p(T, r, 2, 4)

    def test_monotone_in_i(self):
        for n in range(1, 7):
            for T, r in rooted_trees(n):
                table = p_table(T, r, 4)
                for i in range(1, 3):
                    assert not table[i] or table[i + 1]

    def test_observation(self):
        # us(T) >= k forces every p_i false
        for n in range(1, 7):
            for T, r in rooted_trees(n):
                us = exact_rank_number(T, "us")[0]
                if us >= 2:
                    assert not any(p_table(T, r, us).values())


class TestMinF:
    def test_f1_k4(self):
        n, T, r = min_f(1, 4, 6)
        assert n == 3 and sorted(T.adj[r]) == [1, 2]

    def test_f1_k3_single_tree(self):
        assert min_f(1, 3, 1) is None

    def test_empty_range(self):
        assert min_f(1, 4, 0) is None

    def test_recursion_inequality(self):
        # f(i) >= 1 + (k-i-1) f(i-1) wherever both sides are pinned
        n_max = 8
        for k in (3, 4, 5):
            f = {i: min_f(i, k, n_max) for i in range(1, k)}
            for i in range(2, k):
                if f[i - 1] is None or f[i] is None:
                    continue  # undetermined within n_max
                assert f[i][0] >= 1 + (k - i - 1) * f[i - 1][0]

    def test_witness_is_minimal(self):
        n, T, r = min_f(1, 4, 6)
        for m in range(1, n):
            assert all(p_predicate(S, s, 1, 4) for S, s in rooted_trees(m))
