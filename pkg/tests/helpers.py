"""Shared random-graph generators for the test suite (all seeded)."""

from __future__ import annotations

import random

from curvlab.graphs import Graph


def random_tree(rng: random.Random, n: int) -> Graph:
    """Uniform random labeled tree via Pruefer decoding."""
    if n == 1:
        return Graph.from_edges(1, [])
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def random_connected_graph(rng: random.Random, n: int, extra: float = 0.3) -> Graph:
    """Random spanning tree plus Bernoulli extra edges."""
    tree = random_tree(rng, n)
    edges = set(tree.edges)
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra:
                edges.add((u, v))
    return Graph.from_edges(n, edges)


def random_block_graph(rng: random.Random, n_target: int) -> Graph:
    """Random block graph: cliques glued one cut vertex at a time."""
    size = min(n_target, rng.randint(2, 4))
    edges = {(u, v) for u in range(size) for v in range(u + 1, size)}
    n = size
    while n < n_target:
        host = rng.randrange(n)
        grow = min(n_target - n, rng.randint(1, 4))
        members = [host] + list(range(n, n + grow))
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                edges.add((min(u, v), max(u, v)))
        n += grow
    return Graph.from_edges(n, edges)


def relabeled(rng: random.Random, g: Graph) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges])
