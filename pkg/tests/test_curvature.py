import random
from fractions import Fraction as F
from itertools import combinations

import pytest

from curvlab.closed_forms import block_graph_curvature, bridge_join, tree_curvature
from curvlab.curvature import (
    is_constant_curvature,
    steinerberger_curvature,
    total_curvature,
)
from curvlab.errors import DisconnectedGraph, SingleVertex
from curvlab.families import book_of_triangles, complete, cycle, path
from curvlab.graphs import Graph, distance_matrix
from curvlab.linalg import mat_vec, maximin_over_affine, solve

from helpers import random_block_graph, random_connected_graph, random_tree


def example_block_graph() -> Graph:
    """Chain of cliques K4 - K2 - K5 - K3 glued at cut vertices (11 vertices)."""
    edges = set(combinations(range(4), 2))
    edges.add((3, 4))
    edges.update(combinations(range(4, 9), 2))
    edges.update(combinations([8, 9, 10], 2))
    return Graph.from_edges(11, edges)


class TestRegimes:
    def test_triangle_unique(self):
        sol = steinerberger_curvature(complete(3))
        assert sol.regime == "Unique"
        assert sol.K == (F(3, 2),) * 3
        assert sol.solution_space_dim == 0
        assert sol.total == F(9, 2)

    def test_block_graph_cut_vertex_value(self):
        g = example_block_graph()
        sol = steinerberger_curvature(g)
        assert sol.regime == "Unique"
        # the K5/K3 cut vertex
        assert sol.K[8] == F(-308, 163)

    def test_c4_maximin(self):
        sol = steinerberger_curvature(cycle(4))
        assert sol.regime == "MaxiMin"
        assert sol.K == (F(1),) * 4
        assert sol.solution_space_dim == 1
        assert sol.maximin_value == F(1)

    def test_single_vertex_rejected(self):
        with pytest.raises(SingleVertex):
            steinerberger_curvature(Graph.from_edges(1, []))

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraph):
            steinerberger_curvature(Graph.from_edges(3, [(0, 1)]))

    def test_pseudoinverse_regime_on_split_graph(self):
        # K4 joined to three independent vertices: the system D K = 7*1 is
        # inconsistent, so the pseudoinverse fallback kicks in
        edges = list(combinations(range(4), 2)) + [
            (i, j) for i in range(4) for j in (4, 5, 6)
        ]
        g = Graph.from_edges(7, edges)
        d = distance_matrix(g)
        assert solve(d.rows, [7] * 7).tag == "Inconsistent"
        sol = steinerberger_curvature(g)
        assert sol.regime == "Pseudoinverse"
        assert sol.maximin_value is None
        assert sol.K == (F(6, 7),) * 4 + (F(8, 7),) * 3
        # independent oracle: sympy's exact pseudoinverse
        sympy = pytest.importorskip("sympy")
        ref = sympy.Matrix([list(r) for r in d.rows]).pinv() * sympy.Matrix([7] * 7)
        assert sol.K == tuple(F(str(x)) for x in ref)


class TestExactness:
    def test_dk_equals_n_ones_unique_and_maximin(self):
        rng = random.Random(2024)
        for _ in range(40):
            g = random_connected_graph(rng, rng.randint(2, 9))
            sol = steinerberger_curvature(g)
            if sol.regime == "Pseudoinverse":
                continue
            d = distance_matrix(g)
            assert mat_vec(d.rows, sol.K) == (F(g.n),) * g.n

    def test_maximin_witness_minimum_is_lp_optimum(self):
        rng = random.Random(77)
        found = 0
        for _ in range(300):
            g = random_connected_graph(rng, rng.randint(4, 8))
            d = distance_matrix(g)
            sys = solve(d.rows, [g.n] * g.n)
            if sys.tag != "Affine":
                continue
            found += 1
            value, witness = maximin_over_affine(sys.particular, sys.nullspace_basis)
            sol = steinerberger_curvature(g)
            assert sol.regime == "MaxiMin"
            assert sol.maximin_value == value
            assert min(sol.K) == value
            if found >= 8:
                break
        assert found, "no singular-but-consistent instances sampled"

    def test_constant_rowsum_fast_path_matches_lp(self):
        # the engine shortcuts constant row sums; the LP must agree exactly
        for g in [cycle(4), cycle(6), cycle(8)]:
            d = distance_matrix(g)
            sys = solve(d.rows, [g.n] * g.n)
            sol = steinerberger_curvature(g)
            if sys.tag == "Affine":
                value, witness = maximin_over_affine(sys.particular, sys.nullspace_basis)
                assert sol.maximin_value == value
                assert sol.K == witness


class TestTotals:
    def test_subset_totals(self):
        sol = steinerberger_curvature(book_of_triangles(4))
        assert total_curvature(sol) == 0
        assert total_curvature(sol, []) == 0
        assert total_curvature(sol, [0, 1]) == sol.K[0] + sol.K[1]
        with pytest.raises(ValueError):
            total_curvature(sol, [99])

    def test_a5_negative_total(self):
        sol = steinerberger_curvature(book_of_triangles(5))
        assert sol.total < 0
        assert sol.total == F(-7, 2)

    def test_total_invariance_over_nonnegative_solutions(self):
        # singular-but-consistent graphs: perturb the witness inside the
        # solution space while staying nonnegative; totals must not move
        rng = random.Random(8)
        checked = 0
        for _ in range(400):
            g = random_connected_graph(rng, rng.randint(4, 8))
            d = distance_matrix(g)
            sys = solve(d.rows, [g.n] * g.n)
            if sys.tag != "Affine":
                continue
            sol = steinerberger_curvature(g)
            if any(k < 0 for k in sol.K):
                continue
            base_total = sol.total
            for z in sys.nullspace_basis:
                for eps in (F(1, 7), F(-1, 7), F(1, 3)):
                    candidate = [k + eps * zi for k, zi in zip(sol.K, z)]
                    if all(c >= 0 for c in candidate):
                        assert sum(candidate) == base_total
                        checked += 1
            if checked >= 5:
                break
        assert checked, "no nonnegative perturbations found"


class TestConsistencyWithClosedForms:
    def test_tree_formula_exact_match(self):
        rng = random.Random(404)
        for _ in range(100):
            g = random_tree(rng, rng.randint(2, 30))
            assert steinerberger_curvature(g).K == tree_curvature(g)

    def test_block_graph_formula_exact_match(self):
        rng = random.Random(405)
        for _ in range(100):
            g = random_block_graph(rng, rng.randint(2, 20))
            assert steinerberger_curvature(g).K == block_graph_curvature(g)

    def test_bridge_balance_on_random_bridged_graphs(self):
        rng = random.Random(406)
        done = 0
        while done < 30:
            g1 = random_connected_graph(rng, rng.randint(2, 6))
            g2 = random_connected_graph(rng, rng.randint(2, 6))
            u, v = rng.randrange(g1.n), rng.randrange(g2.n)
            g = bridge_join(g1, u, g2, v)
            sol = steinerberger_curvature(g)
            if sol.regime != "Unique":
                continue
            left = total_curvature(sol, range(g1.n))
            right = total_curvature(sol, range(g1.n, g.n))
            assert left == right
            done += 1


class TestConstantCurvature:
    def test_vertex_transitive(self):
        assert is_constant_curvature(cycle(5))

    def test_p3_not_constant(self):
        assert not is_constant_curvature(path(3))

    def test_rowsum_test_matches_solution_constancy(self):
        rng = random.Random(13)
        for _ in range(60):
            g = random_connected_graph(rng, rng.randint(2, 8))
            sol = steinerberger_curvature(g)
            if sol.regime == "Pseudoinverse":
                continue
            if is_constant_curvature(g):
                assert sol.is_constant
