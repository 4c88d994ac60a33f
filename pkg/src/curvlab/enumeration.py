"""Isomorphism-free enumeration of small graphs.

Graphs are handled as tuples of neighbor bitmasks.  The canonical form of a
graph is the largest upper-triangle bit encoding over an
isomorphism-invariant set of labelings, produced by backtracking over
equitable-partition refinements.  Cells of mutual twins (identical
neighborhoods outside the cell, complete or empty inside) collapse without
branching, which keeps highly symmetric graphs cheap.

Enumeration extends each (n-1)-vertex graph by one vertex joined to every
subset of the old vertices, deduplicating children by canonical form; every
n-vertex graph arises this way from deleting a vertex, so the sweep is
complete.  Counts are asserted against the standard connected-graph
sequence in the test suite.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from .graphs import Graph

AdjMasks = tuple[int, ...]


def graph_to_masks(g: Graph) -> AdjMasks:
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return tuple(masks)


def masks_to_graph(adj: AdjMasks) -> Graph:
    n = len(adj)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if adj[u] >> v & 1
    ]
    return Graph.from_edges(n, edges)


def mask_connected(adj: AdjMasks) -> bool:
    n = len(adj)
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            reach |= adj[v]
            f &= f - 1
        frontier = reach & ~seen
        seen |= reach
    return seen == (1 << n) - 1


def _refine(adj: AdjMasks, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition (deterministic)."""
    while True:
        masks = [0] * len(cells)
        for i, cell in enumerate(cells):
            m = 0
            for v in cell:
                m |= 1 << v
            masks[i] = m
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            buckets: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((adj[v] & m).bit_count() for m in masks)
                buckets.setdefault(sig, []).append(v)
            if len(buckets) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for sig in sorted(buckets):
                    new_cells.append(buckets[sig])
        if not changed:
            return new_cells
        cells = new_cells


def _is_twin_cell(adj: AdjMasks, cell: list[int]) -> bool:
    cell_mask = 0
    for v in cell:
        cell_mask |= 1 << v
    outside = adj[cell[0]] & ~cell_mask
    inside0 = adj[cell[0]] & cell_mask
    complete = inside0 == cell_mask & ~(1 << cell[0])
    empty = inside0 == 0
    if not (complete or empty):
        return False
    for v in cell[1:]:
        if adj[v] & ~cell_mask != outside:
            return False
        inner = adj[v] & cell_mask
        if complete and inner != cell_mask & ~(1 << v):
            return False
        if empty and inner != 0:
            return False
    return True


def canonical_code(adj: AdjMasks) -> int:
    """Complete isomorphism invariant (max upper-triangle encoding)."""
    n = len(adj)
    if n == 1:
        return 0
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(adj[v].bit_count(), []).append(v)
    initial = [by_degree[d] for d in sorted(by_degree, reverse=True)]
    best = -1

    def encode(perm: list[int]) -> int:
        code = 0
        for i in range(n):
            ai = adj[perm[i]]
            for j in range(i + 1, n):
                code = code << 1 | (ai >> perm[j] & 1)
        return code

    def rec(cells: list[list[int]]) -> None:
        nonlocal best
        work: list[list[int]] = []
        for cell in cells:
            if len(cell) > 1 and _is_twin_cell(adj, cell):
                work.extend([v] for v in cell)
            else:
                work.append(cell)
        split = next((i for i, c in enumerate(work) if len(c) > 1), None)
        if split is None:
            code = encode([v for c in work for v in c])
            if code > best:
                best = code
            return
        target = work[split]
        for v in target:
            rest = [w for w in target if w != v]
            rec(_refine(adj, work[:split] + [[v], rest] + work[split + 1 :]))

    rec(_refine(adj, initial))
    return best


def canonical_graph(g: Graph) -> Graph:
    """Relabel a graph into its canonical form (stable across relabelings)."""
    code = canonical_code(graph_to_masks(g))
    return _code_to_graph(code, g.n)


def _code_to_graph(code: int, n: int) -> Graph:
    edges = []
    bit = n * (n - 1) // 2
    for i in range(n):
        for j in range(i + 1, n):
            bit -= 1
            if code >> bit & 1:
                edges.append((i, j))
    return Graph.from_edges(n, edges)


def _code_to_masks(code: int, n: int) -> AdjMasks:
    masks = [0] * n
    bit = n * (n - 1) // 2
    for i in range(n):
        for j in range(i + 1, n):
            bit -= 1
            if code >> bit & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return tuple(masks)


@lru_cache(maxsize=None)
def _all_graphs_masks(n: int) -> tuple[AdjMasks, ...]:
    if n == 1:
        return ((0,),)
    out: dict[int, AdjMasks] = {}
    for parent in _all_graphs_masks(n - 1):
        for subset in range(1 << (n - 1)):
            adj = tuple(
                m | ((subset >> v & 1) << (n - 1)) for v, m in enumerate(parent)
            ) + (subset,)
            code = canonical_code(adj)
            if code not in out:
                # store the canonical labeling so downstream graph6 strings
                # are canonical forms (stable across runs and platforms)
                out[code] = _code_to_masks(code, n)
    return tuple(out.values())


def graph_count(n: int) -> int:
    return len(_all_graphs_masks(n))


def connected_graphs(n: int) -> Iterator[Graph]:
    """All connected graphs on n vertices, one per isomorphism class."""
    for adj in _all_graphs_masks(n):
        if mask_connected(adj):
            yield masks_to_graph(adj)


def connected_graph_count(n: int) -> int:
    return sum(1 for adj in _all_graphs_masks(n) if mask_connected(adj))


def automorphism_group(g: Graph) -> list[tuple[int, ...]]:
    """All automorphisms (brute force over degree-compatible permutations).

    Intended for small base graphs (n <= 8) when deduplicating leaf
    attachments; larger graphs should skip the reduction.
    """
    from itertools import permutations

    adj = graph_to_masks(g)
    n = g.n
    degs = [m.bit_count() for m in adj]
    autos = []
    for perm in permutations(range(n)):
        if any(degs[perm[v]] != degs[v] for v in range(n)):
            continue
        ok = True
        for u in range(n):
            for v in range(u + 1, n):
                if (adj[u] >> v & 1) != (adj[perm[u]] >> perm[v] & 1):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            autos.append(tuple(perm))
    return autos


def graphs_from_masks(masks: Sequence[AdjMasks]) -> Iterator[Graph]:
    for adj in masks:
        yield masks_to_graph(adj)
