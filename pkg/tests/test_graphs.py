import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvlab.errors import DisconnectedGraph
from curvlab.graphs import (
    Graph,
    attach_leaf,
    block_decomposition,
    cartesian_product,
    diameter,
    distance_matrix,
    eccentricity,
    find_bridges,
    is_antipodal,
    is_bipartite,
    is_connected,
    is_self_centered,
)
from curvlab.families import complete, cycle, hypercube, path
from curvlab.enumeration import connected_graphs

from helpers import random_connected_graph


K3 = complete(3)
P3 = path(3)
C4 = cycle(4)


def nx_of(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


class TestGraphBasics:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 2)])

    def test_edges_normalized(self):
        g = Graph.from_edges(3, [(2, 0), (1, 0)])
        assert g.sorted_edges() == [(0, 1), (0, 2)]

    def test_duplicate_edges_collapse(self):
        g = Graph.from_edges(2, [(0, 1), (1, 0)])
        assert g.m == 1


class TestDistances:
    def test_k3(self):
        assert distance_matrix(K3).rows == ((0, 1, 1), (1, 0, 1), (1, 1, 0))

    def test_p3(self):
        assert distance_matrix(P3).rows == ((0, 1, 2), (1, 0, 1), (2, 1, 0))

    def test_c4_rows_are_permutations(self):
        d = distance_matrix(C4)
        for row in d.rows:
            assert sorted(row) == [0, 1, 1, 2]

    def test_disconnected_raises(self):
        g = Graph.from_edges(3, [(0, 1)])
        with pytest.raises(DisconnectedGraph):
            distance_matrix(g)

    def test_diameters(self):
        assert diameter(cycle(6)) == 3
        assert diameter(complete(5)) == 1
        assert eccentricity(P3, 1) == 1
        assert eccentricity(P3, 0) == 2

    def test_invariants_on_random_graphs(self):
        rng = random.Random(20240511)
        for _ in range(60):
            n = rng.randint(2, 12)
            g = random_connected_graph(rng, n)
            d = distance_matrix(g)
            ref = dict(nx.all_pairs_shortest_path_length(nx_of(g)))
            for i in range(n):
                assert d[i, i] == 0
                for j in range(n):
                    assert d[i, j] == d[j, i]
                    assert d[i, j] == ref[i][j]
                    assert (d[i, j] == 1) == g.has_edge(i, j) if i != j else True
                    for k in range(n):
                        assert d[i, k] <= d[i, j] + d[j, k]


class TestBridges:
    def brute_force_bridges(self, g: Graph):
        out = []
        for e in g.sorted_edges():
            reduced = Graph(g.n, g.edges - {e})
            if not is_connected(reduced):
                out.append(e)
        return out

    def test_tree_all_edges(self):
        g = path(6)
        assert find_bridges(g) == g.sorted_edges()

    def test_cycle_none(self):
        assert find_bridges(cycle(5)) == []

    def test_two_triangles_joined(self):
        g = Graph.from_edges(
            6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]
        )
        assert find_bridges(g) == [(2, 3)]
        assert self.brute_force_bridges(g) == [(2, 3)]

    def test_against_brute_force_random(self):
        rng = random.Random(7)
        for _ in range(50):
            g = random_connected_graph(rng, rng.randint(2, 10), extra=0.2)
            assert find_bridges(g) == self.brute_force_bridges(g)


class TestBlocks:
    def test_tree_blocks_are_edges(self):
        g = path(5)
        dec = block_decomposition(g)
        assert sorted(dec.block_sizes) == [2, 2, 2, 2]
        assert dec.is_block_graph
        assert dec.cut_vertices == frozenset({1, 2, 3})

    def test_c4_single_non_clique_block(self):
        dec = block_decomposition(C4)
        assert dec.block_sizes == (4,)
        assert not dec.is_block_graph
        assert dec.cut_vertices == frozenset()

    def test_chain_of_cliques(self):
        # K4 - K2 - K5 - K3 sharing one cut vertex at each junction
        edges = set(combinations(range(4), 2))
        edges.add((3, 4))
        edges.update(combinations(range(4, 9), 2))
        edges.update(combinations([8, 9, 10], 2))
        g = Graph.from_edges(11, edges)
        dec = block_decomposition(g)
        assert sorted(dec.block_sizes) == [2, 3, 4, 5]
        assert dec.is_block_graph
        assert dec.cut_vertices == frozenset({3, 4, 8})
        assert len(dec.blocks_at(8)) == 2

    def test_every_edge_in_exactly_one_block(self):
        rng = random.Random(99)
        for _ in range(30):
            g = random_connected_graph(rng, rng.randint(2, 10), extra=0.15)
            dec = block_decomposition(g)
            count = {e: 0 for e in g.edges}
            for verts in dec.blocks:
                for u in verts:
                    for v in verts:
                        if u < v and g.has_edge(u, v):
                            count[(u, v)] += 1
            assert all(c == 1 for c in count.values())
            ref = [frozenset(b) for b in nx.biconnected_components(nx_of(g))]
            assert sorted(map(sorted, dec.blocks)) == sorted(map(sorted, ref))
            assert dec.cut_vertices == frozenset(nx.articulation_points(nx_of(g)))


class TestCenterAndAntipodes:
    def test_self_centered_examples(self):
        assert is_self_centered(cycle(6))
        assert not is_self_centered(P3)

    def test_antipodal_even_cycle(self):
        ok, partner = is_antipodal(cycle(8))
        assert ok
        assert partner == {v: (v + 4) % 8 for v in range(8)}

    def test_antipodal_hypercube_partner_is_complement(self):
        ok, partner = is_antipodal(hypercube(3))
        assert ok
        assert partner == {v: v ^ 0b111 for v in range(8)}

    def test_not_antipodal(self):
        ok, partner = is_antipodal(P3)
        assert not ok and partner is None

    def test_antipodal_implies_self_centered_exhaustive(self):
        for n in range(2, 8):
            for g in connected_graphs(n):
                ok, partner = is_antipodal(g)
                if ok:
                    assert is_self_centered(g)
                    assert g.n % 2 == 0
                    pairs = {frozenset((x, y)) for x, y in partner.items()}
                    assert len(pairs) == g.n // 2


class TestBuilders:
    def test_attach_leaf(self):
        g = attach_leaf(path(2), 1)
        assert g.n == 3 and g.sorted_edges() == [(0, 1), (1, 2)]
        paw = attach_leaf(K3, 0)
        assert paw.n == 4 and paw.m == 4

    def test_attach_leaf_out_of_range(self):
        with pytest.raises(ValueError):
            attach_leaf(K3, 3)

    def test_k2_squared_is_c4(self):
        g = cartesian_product(path(2), path(2))
        assert g.n == 4 and g.m == 4
        assert diameter(g) == 2

    def test_k2_cubed_is_q3(self):
        g = cartesian_product(cartesian_product(path(2), path(2)), path(2))
        assert g.n == 8 and g.m == 12
        assert diameter(g) == 3

    def test_product_distances_add(self):
        rng = random.Random(5)
        for _ in range(10):
            g1 = random_connected_graph(rng, rng.randint(2, 5))
            g2 = random_connected_graph(rng, rng.randint(2, 5))
            prod = cartesian_product(g1, g2)
            d1, d2, dp = distance_matrix(g1), distance_matrix(g2), distance_matrix(prod)
            for a in range(g1.n):
                for b in range(g2.n):
                    for a2 in range(g1.n):
                        for b2 in range(g2.n):
                            assert dp[a * g2.n + b, a2 * g2.n + b2] == d1[a, a2] + d2[b, b2]

    def test_bipartite(self):
        assert is_bipartite(cycle(6))
        assert not is_bipartite(cycle(5))
        assert is_bipartite(hypercube(4))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_distance_matrix_properties(data):
    n = data.draw(st.integers(min_value=2, max_value=9))
    seed = data.draw(st.integers(min_value=0, max_value=10**6))
    g = random_connected_graph(random.Random(seed), n)
    d = distance_matrix(g)
    for i in range(n):
        assert d[i, i] == 0
        for j in range(i + 1, n):
            assert d[i, j] >= 1
            assert d[i, j] == d[j, i]
            assert (d[i, j] == 1) == g.has_edge(i, j)
