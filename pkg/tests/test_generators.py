import networkx as nx
import pytest
from math import comb

from oracles import to_nx
from vrank.errors import SizeOverflow
from vrank.generators import (
    XorShift64Star,
    apollonian,
    complete_kary_tree,
    grid,
    kary_tree_size,
    path,
    subdivided_replicated_clique,
)
from vrank.graph import Graph, degeneracy_ordering


class TestPrng:
    def test_splitmix_seed_vector(self):
        # the first splitmix64 output for seed 0 is a published test vector
        assert XorShift64Star(0).state == 0xE220A8397B1DCDAF

    def test_frozen_stream(self):
        r = XorShift64Star(42)
        assert [r.next_u64() for _ in range(3)] == [
            3580622183945639842, 10378725325292465923, 8967075514996744559]

    def test_below_range(self):
        r = XorShift64Star(5)
        draws = [r.below(7) for _ in range(7000)]
        assert set(draws) == set(range(7))
        assert all(800 < draws.count(x) < 1200 for x in range(7))

    def test_below_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            XorShift64Star(1).below(0)


class TestKary:
    @pytest.mark.parametrize("k,n", [(1, 1), (3, 13), (4, 85)])
    def test_sizes(self, k, n):
        T, root, level = complete_kary_tree(k)
        assert T.n == n == kary_tree_size(k) and root == 0

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_shape(self, k):
        T, root, level = complete_kary_tree(k)
        assert T.m == T.n - 1 and nx.is_connected(to_nx(T))
        for v in range(T.n):
            children = [u for u in T.adj[v] if level[u] == level[v] + 1]
            assert len(children) == (k if level[v] < k - 1 else 0)
        assert max(level) == k - 1

    def test_overflow(self):
        with pytest.raises(SizeOverflow):
            complete_kary_tree(9, size_limit=10**6)


class TestSubclique:
    def test_k2(self):
        assert subdivided_replicated_clique(2).n == 4

    def test_k3(self):
        G = subdivided_replicated_clique(3)
        assert (G.n, G.m) == (12, 18)
        assert degeneracy_ordering(G).d == 2

    @pytest.mark.parametrize("k", range(2, 8))
    def test_degrees(self, k):
        G = subdivided_replicated_clique(k)
        assert G.n == k + k * comb(k, 2) and G.m == 2 * k * comb(k, 2)
        assert [G.degree(v) for v in range(k)] == [k * (k - 1)] * k
        assert all(G.degree(v) == 2 for v in range(k, G.n))
        assert degeneracy_ordering(G).d == 2

    def test_overflow(self):
        with pytest.raises(SizeOverflow):
            subdivided_replicated_clique(50, size_limit=1000)


class TestPathGrid:
    def test_path1(self):
        assert path(1) == Graph(1)

    def test_grid_c4(self):
        assert nx.is_isomorphic(to_nx(grid(2, 2)), nx.cycle_graph(4))

    def test_grid_3x3(self):
        G = grid(3, 3)
        assert (G.n, G.m) == (9, 12)

    def test_grid_matches_networkx(self):
        want = nx.convert_node_labels_to_integers(nx.grid_2d_graph(4, 6), ordering="sorted")
        assert grid(4, 6).edges == tuple(sorted(tuple(sorted(e)) for e in want.edges()))

    def test_bad_args(self):
        with pytest.raises(ValueError):
            path(0)
        with pytest.raises(ValueError):
            grid(0, 3)


class TestApollonian:
    def test_triangle(self):
        assert apollonian(3, 1) == Graph(3, [(0, 1), (0, 2), (1, 2)])

    def test_k4(self):
        G = apollonian(4, 9)
        assert G.m == 6 and G.n == 4

    @pytest.mark.parametrize("seed", range(5))
    def test_structure(self, seed):
        G = apollonian(200, seed)
        assert G.n == 200 and G.m == 3 * G.n - 6
        assert degeneracy_ordering(G).d <= 3
        assert nx.check_planarity(to_nx(G))[0]

    def test_deterministic(self):
        assert apollonian(300, 17) == apollonian(300, 17)
        assert apollonian(300, 17) != apollonian(300, 18)

    def test_frozen_instance(self):
        assert apollonian(10, 3).edges == (
            (0, 1), (0, 2), (0, 3), (0, 4), (0, 6), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6),
            (1, 7), (1, 9), (2, 3), (2, 5), (2, 7), (2, 8), (2, 9), (3, 4), (3, 5), (4, 6),
            (5, 7), (5, 8), (7, 8), (7, 9))

    def test_too_small(self):
        with pytest.raises(ValueError):
            apollonian(2, 0)
