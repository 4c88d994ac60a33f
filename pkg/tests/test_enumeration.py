import random

import networkx as nx
import pytest

from curvlab.enumeration import (
    automorphism_group,
    canonical_code,
    canonical_graph,
    connected_graph_count,
    connected_graphs,
    graph_count,
    graph_to_masks,
    mask_connected,
)
from curvlab.families import complete, cycle, path, star
from curvlab.graphs import Graph

from helpers import random_connected_graph, relabeled


class TestCanonicalCode:
    def test_stable_under_relabeling(self):
        rng = random.Random(17)
        for base in [cycle(7), complete(6), star(5), path(8)]:
            code = canonical_code(graph_to_masks(base))
            for _ in range(6):
                h = relabeled(rng, base)
                assert canonical_code(graph_to_masks(h)) == code

    def test_separates_non_isomorphic(self):
        rng = random.Random(18)
        graphs = [random_connected_graph(rng, 7) for _ in range(30)]
        for i, g in enumerate(graphs):
            for h in graphs[i + 1 :]:
                same_code = canonical_code(graph_to_masks(g)) == canonical_code(
                    graph_to_masks(h)
                )
                gn, hn = nx.Graph(g.edges), nx.Graph(h.edges)
                gn.add_nodes_from(range(g.n))
                hn.add_nodes_from(range(h.n))
                assert same_code == nx.is_isomorphic(gn, hn)

    def test_canonical_graph_is_fixed_point(self):
        rng = random.Random(19)
        for _ in range(15):
            g = random_connected_graph(rng, rng.randint(2, 8))
            cg = canonical_graph(g)
            assert canonical_graph(cg) == cg
            assert canonical_code(graph_to_masks(cg)) == canonical_code(graph_to_masks(g))


class TestCounts:
    def test_total_graph_counts(self):
        assert [graph_count(n) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]

    def test_connected_counts_standard_sequence(self):
        assert [connected_graph_count(n) for n in range(2, 8)] == [1, 2, 6, 21, 112, 853]

    def test_matches_networkx_atlas_at_n6(self):
        atlas = pytest.importorskip("networkx.generators.atlas")
        wanted = [
            g
            for g in atlas.graph_atlas_g()
            if g.number_of_nodes() == 6 and nx.is_connected(g)
        ]
        assert len(wanted) == connected_graph_count(6)

    def test_enumerated_graphs_are_pairwise_non_isomorphic(self):
        graphs = list(connected_graphs(5))
        assert len(graphs) == 21
        for i, g in enumerate(graphs):
            gn = nx.Graph(g.edges)
            gn.add_nodes_from(range(g.n))
            for h in graphs[i + 1 :]:
                hn = nx.Graph(h.edges)
                hn.add_nodes_from(range(h.n))
                assert not nx.is_isomorphic(gn, hn)

    def test_all_enumerated_connected(self):
        for g in connected_graphs(6):
            assert mask_connected(graph_to_masks(g))

    def test_deterministic_order(self):
        first = [g.sorted_edges() for g in connected_graphs(6)]
        second = [g.sorted_edges() for g in connected_graphs(6)]
        assert first == second


class TestAutomorphisms:
    def test_cycle_dihedral(self):
        assert len(automorphism_group(cycle(6))) == 12

    def test_path_reflection(self):
        assert len(automorphism_group(path(5))) == 2

    def test_complete_graph(self):
        assert len(automorphism_group(complete(4))) == 24

    def test_asymmetric_graph(self):
        # smallest asymmetric graphs have 6 vertices; this is one of them
        g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 4)])
        autos = automorphism_group(g)
        gn = nx.Graph(g.edges)
        from networkx.algorithms.isomorphism import GraphMatcher

        count = sum(1 for _ in GraphMatcher(gn, gn).isomorphisms_iter())
        assert len(autos) == count
