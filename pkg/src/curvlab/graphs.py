"""Immutable simple graphs and the metric primitives everything else consumes.

Vertices are dense integers 0..n-1.  External labelings (file formats,
figure numberings) live in the I/O layer.  All operations here are pure;
distance matrices are cached per graph value, so sharing Graph objects
across threads or parallel scans is safe.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

from .errors import DisconnectedGraph


Edge = tuple[int, int]


def _normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 (no loops, no multi-edges)."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        normalized = frozenset(_normalize_edge(u, v) for u, v in edges)
        return cls(n, normalized)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v) in self.edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        return adjacency(self)[v]

    def degree(self, v: int) -> int:
        return len(adjacency(self)[v])

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@lru_cache(maxsize=4096)
def adjacency(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Adjacency lists (sorted), cached per graph value."""
    nbrs: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    return tuple(tuple(sorted(a)) for a in nbrs)


def is_connected(g: Graph) -> bool:
    if g.n == 1:
        return True
    adj = adjacency(g)
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                count += 1
                queue.append(y)
    return count == g.n


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraph(f"graph on {g.n} vertices is not connected")


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Single-source shortest-path distances; -1 marks unreachable vertices."""
    adj = adjacency(g)
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        dx = dist[x]
        for y in adj[x]:
            if dist[y] < 0:
                dist[y] = dx + 1
                queue.append(y)
    return dist


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric matrix of exact shortest-path distances of a connected graph."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __getitem__(self, pair: tuple[int, int]) -> int:
        i, j = pair
        return self.rows[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.rows[i]

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self.rows]


@lru_cache(maxsize=4096)
def distance_matrix(g: Graph) -> DistanceMatrix:
    """All-pairs BFS distances.  Raises DisconnectedGraph if any pair is unreachable."""
    rows = []
    for v in range(g.n):
        dist = bfs_distances(g, v)
        if any(d < 0 for d in dist):
            raise DisconnectedGraph(f"vertex {v} cannot reach the whole graph")
        rows.append(tuple(dist))
    return DistanceMatrix(g.n, tuple(rows))


def eccentricity(g: Graph, x: int) -> int:
    return max(distance_matrix(g).row(x))


def diameter(g: Graph) -> int:
    d = distance_matrix(g)
    return max(max(row) for row in d.rows)


def is_self_centered(g: Graph) -> bool:
    """True iff every vertex attains the diameter as its eccentricity."""
    d = distance_matrix(g)
    eccs = [max(row) for row in d.rows]
    return min(eccs) == max(eccs)


def is_antipodal(g: Graph) -> tuple[bool, Optional[dict[int, int]]]:
    """Antipodality test with partner map.

    A partner of x is a vertex x^ with d(x,y) + d(y,x^) = d(x,x^) for every
    y, i.e. the whole graph lies on geodesics between x and x^.  Any partner
    must realize the eccentricity of x, so only those candidates are tried.
    The partner is unique when it exists and the map is an involution; both
    facts are asserted.
    """
    d = distance_matrix(g)
    n = g.n
    partner: dict[int, int] = {}
    for x in range(n):
        row_x = d.row(x)
        ecc = max(row_x)
        found = None
        for y in range(n):
            if row_x[y] != ecc:
                continue
            row_y = d.row(y)
            if all(row_x[z] + row_y[z] == ecc for z in range(n)):
                assert found is None, f"two antipodal partners for vertex {x}"
                found = y
        if found is None:
            return False, None
        partner[x] = found
    for x, y in partner.items():
        assert partner[y] == x, "antipodal partner map is not an involution"
    return True, partner


def find_bridges(g: Graph) -> list[Edge]:
    """All edges whose removal disconnects the graph (iterative Tarjan low-link)."""
    require_connected(g)
    adj = adjacency(g)
    n = g.n
    pre = [-1] * n
    low = [0] * n
    bridges: list[Edge] = []
    counter = 0
    for root in range(n):
        if pre[root] >= 0:
            continue
        stack: list[tuple[int, int, int]] = [(root, -1, 0)]
        while stack:
            v, parent, i = stack.pop()
            if i == 0:
                pre[v] = low[v] = counter
                counter += 1
            if i < len(adj[v]):
                stack.append((v, parent, i + 1))
                w = adj[v][i]
                if pre[w] < 0:
                    stack.append((w, v, 0))
                elif w != parent:
                    low[v] = min(low[v], pre[w])
            else:
                if parent >= 0:
                    low[parent] = min(low[parent], low[v])
                    if low[v] == pre[v]:
                        bridges.append(_normalize_edge(parent, v))
        # connected precondition means one root suffices
    return sorted(bridges)


@dataclass(frozen=True)
class BlockDecomposition:
    """Biconnected blocks (as vertex sets), cut vertices and the clique flag."""

    blocks: tuple[frozenset[int], ...]
    block_sizes: tuple[int, ...]
    cut_vertices: frozenset[int]
    is_block_graph: bool
    blocks_containing: dict[int, tuple[int, ...]] = field(compare=False)

    def blocks_at(self, v: int) -> tuple[int, ...]:
        return self.blocks_containing.get(v, ())


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Biconnected components via the DFS edge-stack algorithm.

    Every edge lands in exactly one block; single edges count as blocks.
    ``is_block_graph`` is true iff every block induces a complete subgraph.
    """
    require_connected(g)
    adj = adjacency(g)
    n = g.n
    pre = [-1] * n
    low = [0] * n
    counter = 0
    edge_stack: list[Edge] = []
    blocks_edges: list[list[Edge]] = []
    cut = set()
    for root in range(n):
        if pre[root] >= 0:
            continue
        root_children = 0
        stack: list[tuple[int, int, int]] = [(root, -1, 0)]
        while stack:
            v, parent, i = stack.pop()
            if i == 0:
                pre[v] = low[v] = counter
                counter += 1
            if i < len(adj[v]):
                stack.append((v, parent, i + 1))
                w = adj[v][i]
                if pre[w] < 0:
                    edge_stack.append((v, w))
                    stack.append((w, v, 0))
                elif w != parent and pre[w] < pre[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], pre[w])
            else:
                if parent >= 0:
                    low[parent] = min(low[parent], low[v])
                    if low[v] >= pre[parent]:
                        # parent closes a block
                        if parent == root:
                            root_children += 1
                        elif parent not in cut:
                            cut.add(parent)
                        comp = []
                        while edge_stack:
                            e = edge_stack.pop()
                            comp.append(e)
                            if e == (parent, v):
                                break
                        blocks_edges.append(comp)
        if root_children > 1:
            cut.add(root)
    block_sets = []
    for comp in blocks_edges:
        verts = set()
        for u, v in comp:
            verts.add(u)
            verts.add(v)
        block_sets.append(frozenset(verts))
    block_sets.sort(key=lambda s: sorted(s))
    containing: dict[int, list[int]] = {}
    for idx, verts in enumerate(block_sets):
        for v in verts:
            containing.setdefault(v, []).append(idx)
    is_block = all(
        g.has_edge(u, v)
        for verts in block_sets
        for u in verts
        for v in verts
        if u < v
    )
    return BlockDecomposition(
        blocks=tuple(block_sets),
        block_sizes=tuple(len(s) for s in block_sets),
        cut_vertices=frozenset(cut),
        is_block_graph=is_block,
        blocks_containing={v: tuple(ids) for v, ids in containing.items()},
    )


def attach_leaf(g: Graph, v: int) -> Graph:
    """New graph with one extra vertex (index n) adjacent only to v."""
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    return Graph(g.n + 1, g.edges | {(v, g.n)})


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Cartesian product; vertex (a, b) becomes index a * g2.n + b."""
    require_connected(g1)
    require_connected(g2)
    n2 = g2.n
    edges = set()
    for a in range(g1.n):
        for u, v in g2.edges:
            edges.add((a * n2 + u, a * n2 + v))
    for b in range(n2):
        for u, v in g1.edges:
            edges.add(_normalize_edge(u * n2 + b, v * n2 + b))
    return Graph(g1.n * g2.n, frozenset(edges))


def is_bipartite(g: Graph) -> bool:
    adj = adjacency(g)
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def is_distance_balanced(g: Graph) -> bool:
    """For every edge {x,y}: as many vertices strictly closer to x as to y."""
    d = distance_matrix(g)
    for x, y in g.edges:
        row_x, row_y = d.row(x), d.row(y)
        closer_x = sum(1 for z in range(g.n) if row_x[z] < row_y[z])
        closer_y = sum(1 for z in range(g.n) if row_y[z] < row_x[z])
        if closer_x != closer_y:
            return False
    return True
