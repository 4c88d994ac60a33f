import random
from fractions import Fraction as F

import pytest

from curvlab.closed_forms import (
    block_graph_curvature,
    bridge_join,
    leaf_join,
    predict_bridge_join,
    predict_leaf_join,
    tree_curvature,
)
from curvlab.curvature import steinerberger_curvature, total_curvature
from curvlab.errors import ConditionViolated, NotABlockGraph, NotATree
from curvlab.families import complete, cycle, path, star
from curvlab.graphs import Graph
from curvlab.linalg import solve

from helpers import random_block_graph, random_connected_graph, random_tree
from test_curvature import example_block_graph


class TestBlockGraphFormula:
    def test_example_chain_of_cliques(self):
        g = example_block_graph()
        ks = block_graph_curvature(g)
        # the K5/K3 cut vertex sits at index 8
        assert ks[8] == F(-308, 163)
        assert ks == steinerberger_curvature(g).K

    def test_complete_graph_single_block(self):
        for n in range(2, 7):
            ks = block_graph_curvature(complete(n))
            assert ks == (F(n, n - 1),) * n
        assert block_graph_curvature(complete(3)) == (F(3, 2),) * 3

    def test_star_matches_tree_specialization(self):
        g = star(3)
        ks = block_graph_curvature(g)
        assert ks[0] == F(-4, 3)
        assert ks[1:] == (F(4, 3),) * 3
        assert ks == tree_curvature(g)
        assert ks == steinerberger_curvature(g).K

    def test_rejects_non_block_graph(self):
        with pytest.raises(NotABlockGraph):
            block_graph_curvature(cycle(4))

    def test_random_block_graphs_match_solver(self):
        rng = random.Random(555)
        for _ in range(40):
            g = random_block_graph(rng, rng.randint(2, 16))
            assert block_graph_curvature(g) == steinerberger_curvature(g).K


class TestTreeFormula:
    def test_p2(self):
        assert tree_curvature(path(2)) == (F(2), F(2))

    def test_p4(self):
        assert tree_curvature(path(4)) == (F(4, 3), F(0), F(0), F(4, 3))

    def test_total_is_2n_over_n_minus_1(self):
        rng = random.Random(556)
        for _ in range(40):
            n = rng.randint(2, 25)
            g = random_tree(rng, n)
            assert sum(tree_curvature(g)) == F(2 * n, n - 1)

    def test_rejects_non_tree(self):
        with pytest.raises(NotATree):
            tree_curvature(cycle(3))


class TestLeafPrediction:
    def test_k2_base(self):
        pred = predict_leaf_join(path(2), 0)
        assert pred.alpha == F(3, 4)
        assert pred.gamma == 0
        assert pred.K_v == F(3, 2)
        assert pred.predicted_K == (F(0), F(3, 2), F(3, 2))
        assert pred.predicted_K == tree_curvature(leaf_join(path(2), 0))

    def test_k3_base_paw(self):
        pred = predict_leaf_join(complete(3), 0)
        assert pred.alpha == F(16, 21)
        assert pred.K_v == F(12, 7)
        assert pred.predicted_K == steinerberger_curvature(leaf_join(complete(3), 0)).K

    def test_condition_boundary_c1_is_total_minus_2n(self):
        # C1 reads 2 + k1/n != 0, i.e. the violation is exactly k1 = -2n
        rng = random.Random(557)
        for _ in range(40):
            g = random_connected_graph(rng, rng.randint(2, 8))
            sol = steinerberger_curvature(g)
            if sol.regime != "Unique":
                continue
            violated = sol.total == -2 * g.n
            try:
                predict_leaf_join(g, 0)
                saw = None
            except ConditionViolated as err:
                saw = err.which
            if violated:
                assert saw == "C1"
            elif sol.K[0] == 0:
                assert saw == "C3"
            else:
                assert saw is None

    def test_c2_reported_for_singular_base(self):
        with pytest.raises(ConditionViolated) as exc:
            predict_leaf_join(cycle(4), 0)
        assert exc.value.which == "C2"

    def test_c3_reported_for_flat_vertex(self):
        # the middle of P3 has curvature 0
        with pytest.raises(ConditionViolated) as exc:
            predict_leaf_join(path(3), 1)
        assert exc.value.which == "C3"


class TestBridgePrediction:
    def test_two_edges_make_p4(self):
        pred = predict_bridge_join(path(2), 0, path(2), 0)
        assert pred.Z == 16
        assert pred.alpha == pred.beta == F(2, 3)
        assert pred.gamma == pred.delta == 0
        assert pred.predicted_K == (F(0), F(4, 3), F(0), F(4, 3))
        g = bridge_join(path(2), 0, path(2), 0)
        assert steinerberger_curvature(g).K == pred.predicted_K

    def test_two_triangles(self):
        pred = predict_bridge_join(complete(3), 1, complete(3), 2)
        g = bridge_join(complete(3), 1, complete(3), 2)
        assert steinerberger_curvature(g).K == pred.predicted_K

    def test_total_relation(self):
        pred = predict_bridge_join(complete(4), 0, path(3), 2)
        total = sum(pred.predicted_K)
        assert total == pred.alpha * pred.k1
        assert total == pred.beta * pred.k2
        assert total == pred.alpha / 2 * pred.k1 + pred.beta / 2 * pred.k2

    def test_bridge_total_independent_of_attachment_vertices(self):
        g1, g2 = complete(4), path(4)
        totals = set()
        for u in range(g1.n):
            for v in range(g2.n):
                try:
                    pred = predict_bridge_join(g1, u, g2, v)
                except ConditionViolated:
                    continue
                totals.add(sum(pred.predicted_K))
        assert len(totals) == 1

    def test_conditions_reported(self):
        with pytest.raises(ConditionViolated) as exc:
            predict_bridge_join(cycle(4), 0, path(2), 0)
        assert exc.value.which == "C2"
        with pytest.raises(ConditionViolated) as exc:
            predict_bridge_join(path(3), 1, path(2), 0)
        assert exc.value.which == "C3"


class TestCompositionOracles:
    def test_many_random_pairs_match_solver(self):
        rng = random.Random(558)
        checked = 0
        while checked < 60:
            g1 = random_connected_graph(rng, rng.randint(2, 8))
            g2 = random_connected_graph(rng, rng.randint(2, 8))
            if g1.n + g2.n > 16:
                continue
            u, v = rng.randrange(g1.n), rng.randrange(g2.n)
            try:
                pred = predict_bridge_join(g1, u, g2, v)
            except ConditionViolated:
                continue
            g = bridge_join(g1, u, g2, v)
            assert steinerberger_curvature(g).K == pred.predicted_K
            checked += 1

    def test_leaf_oracle_random(self):
        rng = random.Random(559)
        checked = 0
        while checked < 40:
            g1 = random_connected_graph(rng, rng.randint(2, 10))
            u = rng.randrange(g1.n)
            try:
                pred = predict_leaf_join(g1, u)
            except ConditionViolated:
                continue
            assert steinerberger_curvature(leaf_join(g1, u)).K == pred.predicted_K
            checked += 1

    def test_balance_holds_even_when_conditions_fail(self):
        # Theorem balance needs only a uniquely solvable composed system
        rng = random.Random(560)
        seen_failing_conditions = 0
        for _ in range(200):
            g1 = random_connected_graph(rng, rng.randint(2, 6))
            g2 = random_connected_graph(rng, rng.randint(2, 6))
            u, v = rng.randrange(g1.n), rng.randrange(g2.n)
            conditions_fail = False
            try:
                predict_bridge_join(g1, u, g2, v)
            except ConditionViolated:
                conditions_fail = True
            g = bridge_join(g1, u, g2, v)
            sol = steinerberger_curvature(g)
            if sol.regime != "Unique":
                continue
            assert total_curvature(sol, range(g1.n)) == total_curvature(
                sol, range(g1.n, g.n)
            )
            if conditions_fail:
                seen_failing_conditions += 1
        assert seen_failing_conditions > 0
