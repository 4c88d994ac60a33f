"""Closed-form curvature formulas and single-edge composition predictions.

The block-graph formula: with blocks of sizes P_1..P_r,

    lambda_G = sum_i (P_i - 1) / P_i
    beta_x   = (sum over blocks containing x of 1/P_i) - (s - 1)
    K(x)     = n * beta_x / lambda_G

where s counts the blocks containing x.  Trees specialize to
K(x) = n/(n-1) * (2 - deg(x)).

The composition predictions describe the curvature of a graph built by
joining two graphs (or a graph and a fresh leaf) with a single edge, under
three checked conditions.  Predictions are oracles for the solver in tests,
never a fast path in the API.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curvature import CurvatureSolution, steinerberger_curvature
from .errors import ConditionViolated, NotABlockGraph, NotATree, SingleVertex
from .graphs import Graph, attach_leaf, block_decomposition, require_connected


def block_graph_curvature(g: Graph) -> tuple[Fraction, ...]:
    """Exact curvature of a block graph (every block a clique)."""
    require_connected(g)
    if g.n < 2:
        raise SingleVertex("curvature of a one-vertex graph is not finite")
    dec = block_decomposition(g)
    if not dec.is_block_graph:
        raise NotABlockGraph("some block is not a clique")
    lam = sum((Fraction(p - 1, p) for p in dec.block_sizes), Fraction(0))
    out = []
    for x in range(g.n):
        ids = dec.blocks_at(x)
        s = len(ids)
        beta = sum((Fraction(1, dec.block_sizes[i]) for i in ids), Fraction(0)) - (s - 1)
        out.append(Fraction(g.n) * beta / lam)
    return tuple(out)


def tree_curvature(g: Graph) -> tuple[Fraction, ...]:
    """Exact curvature of a tree via the degree formula."""
    require_connected(g)
    if g.n < 2:
        raise SingleVertex("curvature of a one-vertex graph is not finite")
    if g.m != g.n - 1:
        raise NotATree(f"{g.m} edges on {g.n} vertices")
    factor = Fraction(g.n, g.n - 1)
    return tuple(factor * (2 - g.degree(x)) for x in range(g.n))


@dataclass(frozen=True)
class LeafPrediction:
    """Predicted curvature of G1 plus one fresh leaf attached at u."""

    n: int
    k1: Fraction
    ku: Fraction
    alpha: Fraction
    gamma: Fraction
    K_v: Fraction
    predicted_K: tuple[Fraction, ...]

    def __post_init__(self):
        assert self.alpha == Fraction(2 * (self.n + 1)) / (2 * self.n + self.k1)
        assert self.gamma == (1 - self.k1 / (2 * self.ku)) * self.alpha
        assert self.K_v == (self.n + 1) * self.k1 / (2 * self.n + self.k1)
        assert self.K_v == self.predicted_K[self.n]


@dataclass(frozen=True)
class BridgePrediction:
    """Predicted curvature of G1 and G2 joined by the bridge u ~ v."""

    n1: int
    n2: int
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction
    Z: Fraction
    k1: Fraction
    k2: Fraction
    ku: Fraction
    kv: Fraction
    predicted_K: tuple[Fraction, ...]

    def __post_init__(self):
        assert self.Z == (2 + self.k1 / self.n1) * (2 + self.k2 / self.n2)
        assert self.gamma == (1 - self.k1 / (2 * self.ku)) * self.alpha
        assert self.delta == (1 - self.k2 / (2 * self.kv)) * self.beta


def _unique_solution(g: Graph, label: str) -> CurvatureSolution:
    sol = steinerberger_curvature(g)
    if sol.regime != "Unique":
        raise ConditionViolated("C2", f"distance matrix of {label} is singular")
    return sol


def predict_leaf_join(g1: Graph, u: int) -> LeafPrediction:
    """Curvature prediction for G1 with a leaf v attached at u.

    Conditions: (C1) 2 + k1/n != 0, (C2) D1 invertible, (C3) K_G1(u) != 0.
    The violated condition is named in the raised error.
    """
    if not (0 <= u < g1.n):
        raise ValueError(f"vertex {u} out of range for n={g1.n}")
    if g1.n < 2:
        raise SingleVertex("base graph needs at least two vertices")
    sol = _unique_solution(g1, "G1")
    n = g1.n
    k1 = sol.total
    ku = sol.K[u]
    if 2 * n + k1 == 0:
        raise ConditionViolated("C1", f"2 + k1/n = 0 (k1 = {k1})")
    if ku == 0:
        raise ConditionViolated("C3", f"curvature of u vanishes (u = {u})")
    alpha = Fraction(2 * (n + 1), 1) / (2 * n + k1)
    gamma = (1 - k1 / (2 * ku)) * alpha
    k_v = (n + 1) * k1 / (2 * n + k1)
    predicted = [alpha * sol.K[x] for x in range(n)]
    predicted[u] = gamma * ku
    predicted.append(k_v)
    return LeafPrediction(
        n=n, k1=k1, ku=ku, alpha=alpha, gamma=gamma, K_v=k_v, predicted_K=tuple(predicted)
    )


def predict_bridge_join(g1: Graph, u: int, g2: Graph, v: int) -> BridgePrediction:
    """Curvature prediction for G1 and G2 joined by the single edge u ~ v.

    Vertices of G2 are shifted by n1 in the composed graph (see
    :func:`bridge_join`).  Conditions: (C1) Z != 4, (C2) both distance
    matrices invertible, (C3) both endpoint curvatures nonzero.
    """
    if not (0 <= u < g1.n):
        raise ValueError(f"vertex {u} out of range for n={g1.n}")
    if not (0 <= v < g2.n):
        raise ValueError(f"vertex {v} out of range for n={g2.n}")
    if g1.n < 2 or g2.n < 2:
        raise SingleVertex("both sides need at least two vertices")
    sol1 = _unique_solution(g1, "G1")
    sol2 = _unique_solution(g2, "G2")
    n1, n2 = g1.n, g2.n
    k1, k2 = sol1.total, sol2.total
    ku, kv = sol1.K[u], sol2.K[v]
    z = (2 + k1 / n1) * (2 + k2 / n2)
    if z == 4:
        raise ConditionViolated("C1", f"Z = 4 (k1 = {k1}, k2 = {k2})")
    if ku == 0:
        raise ConditionViolated("C3", f"curvature of u vanishes (u = {u})")
    if kv == 0:
        raise ConditionViolated("C3", f"curvature of v vanishes (v = {v})")
    denom = n1 * n2 * (z - 4)
    alpha = 2 * (n1 + n2) * k2 / denom
    beta = 2 * (n1 + n2) * k1 / denom
    gamma = (1 - k1 / (2 * ku)) * alpha
    delta = (1 - k2 / (2 * kv)) * beta
    predicted = [alpha * sol1.K[x] for x in range(n1)]
    predicted[u] = gamma * ku
    tail = [beta * sol2.K[y] for y in range(n2)]
    tail[v] = delta * kv
    predicted.extend(tail)
    return BridgePrediction(
        n1=n1,
        n2=n2,
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        delta=delta,
        Z=z,
        k1=k1,
        k2=k2,
        ku=ku,
        kv=kv,
        predicted_K=tuple(predicted),
    )


def leaf_join(g1: Graph, u: int) -> Graph:
    """The composed graph the leaf prediction describes."""
    return attach_leaf(g1, u)


def bridge_join(g1: Graph, u: int, g2: Graph, v: int) -> Graph:
    """G1 and G2 joined by the edge u ~ (n1 + v); G2 indices shift by n1."""
    n1 = g1.n
    edges = set(g1.edges)
    edges.update((a + n1, b + n1) for a, b in g2.edges)
    edges.add((u, n1 + v) if u < n1 + v else (n1 + v, u))
    return Graph(n1 + g2.n, frozenset(edges))
