"""Matplotlib renderings for the report paths.

Vertices are drawn with their curvature values (4 decimal places) and
colored by sign, the style used throughout the figures this toolkit
reproduces.  Layouts are deterministic: a circular start followed by a
fixed number of force iterations, no randomness.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .curvature import CurvatureSolution
from .graphs import Graph
from .io_formats import curvature_sign, decimal_str
from .search import ScanResult

_SIGN_FILL = {"positive": "#2e8b57", "zero": "#8c8c8c", "negative": "#c0392b"}


def _layout(g: Graph, iterations: int = 60) -> list[tuple[float, float]]:
    n = g.n
    pos = [
        (math.cos(2 * math.pi * v / n), math.sin(2 * math.pi * v / n))
        for v in range(n)
    ]
    if n <= 2:
        return pos
    k = 1.2 / math.sqrt(n)
    for _ in range(iterations):
        disp = [[0.0, 0.0] for _ in range(n)]
        for i in range(n):
            xi, yi = pos[i]
            for j in range(i + 1, n):
                dx, dy = xi - pos[j][0], yi - pos[j][1]
                dist2 = dx * dx + dy * dy or 1e-9
                rep = k * k / dist2
                disp[i][0] += dx * rep
                disp[i][1] += dy * rep
                disp[j][0] -= dx * rep
                disp[j][1] -= dy * rep
        for u, v in g.edges:
            dx, dy = pos[u][0] - pos[v][0], pos[u][1] - pos[v][1]
            dist = math.sqrt(dx * dx + dy * dy) or 1e-9
            att = dist / k * 0.05
            disp[u][0] -= dx * att
            disp[u][1] -= dy * att
            disp[v][0] += dx * att
            disp[v][1] += dy * att
        pos = [
            (x + max(-0.08, min(0.08, dx)), y + max(-0.08, min(0.08, dy)))
            for (x, y), (dx, dy) in zip(pos, disp)
        ]
    return pos


def draw_curvature(g: Graph, sol: CurvatureSolution, path: str, title: str = "") -> None:
    """Render the graph with curvature labels and sign colors to a file."""
    pos = _layout(g)
    fig, ax = plt.subplots(figsize=(6.4, 6.4))
    for u, v in g.sorted_edges():
        ax.plot(
            [pos[u][0], pos[v][0]],
            [pos[u][1], pos[v][1]],
            color="#555555",
            linewidth=1.2,
            zorder=1,
        )
    xs = [p[0] for p in pos]
    ys = [p[1] for p in pos]
    colors = [_SIGN_FILL[curvature_sign(k)] for k in sol.K]
    ax.scatter(xs, ys, s=900, c=colors, zorder=2, edgecolors="black", linewidths=0.8)
    for v in range(g.n):
        ax.annotate(
            decimal_str(sol.K[v]),
            pos[v],
            ha="center",
            va="center",
            fontsize=7,
            color="white",
            zorder=3,
        )
    if title:
        ax.set_title(title)
    ax.set_axis_off()
    ax.set_aspect("equal")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def draw_scan_summary(result: ScanResult, path: str) -> None:
    """Bar chart of scanned vs matching graphs per vertex count."""
    from .io_formats import parse_graph6

    lo, hi = result.n_range
    ns = list(range(lo, hi + 1))
    match_counts = {n: 0 for n in ns}
    for g6, _ in result.matches:
        g = parse_graph6(g6)
        if g.n in match_counts:
            match_counts[g.n] += 1
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    ax.bar(ns, [match_counts[n] for n in ns], color="#2e6da4")
    ax.set_xlabel("vertices")
    ax.set_ylabel("matches")
    ax.set_title(
        f"{result.predicate}: {len(result.matches)} matches / "
        f"{result.graphs_scanned} graphs scanned"
    )
    ax.set_xticks(ns)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
