"""Scans and searches over small graphs.

Everything here is measurement machinery: scans report what they find and
never assert expectations about open questions.  Scans are deterministic and
restart-safe — graphs are visited in the enumerator's (or the input
stream's) order, so rerunning a scan reproduces the match list exactly.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Callable, Iterable, Optional, Sequence

from .analysis import analyze
from .curvature import steinerberger_curvature
from .errors import CurvlabError, NotFoundWithinBudget
from .graphs import Graph, attach_leaf
from .enumeration import automorphism_group, connected_graphs
from .io_formats import emit_graph6, exact_str, parse_graph6

DEFAULT_SCAN_CAP = 9
DEFAULT_LEAF_CAP = 12


def _witness_basics(g: Graph) -> dict:
    sol = steinerberger_curvature(g)
    return {
        "regime": sol.regime.lower(),
        "total": exact_str(sol.total),
        "min": exact_str(sol.maximin_value if sol.regime == "MaxiMin" else min(sol.K)),
        "solution_space_dim": sol.solution_space_dim,
    }


def _pred_zero_total(g: Graph) -> Optional[dict]:
    sol = steinerberger_curvature(g)
    if sol.total == 0:
        return _witness_basics(g)
    return None


def _pred_negative_total(g: Graph) -> Optional[dict]:
    sol = steinerberger_curvature(g)
    if sol.total < 0:
        return _witness_basics(g)
    return None


def _pred_bm_sharp(g: Graph) -> Optional[dict]:
    rep = analyze(g)
    if rep.is_bm_sharp:
        w = _witness_basics(g)
        w["diameter"] = rep.diameter
        return w
    return None


def _pred_antipodal_mismatch(g: Graph) -> Optional[dict]:
    # only solution-admitting graphs fall under the equivalence theorem
    rep = analyze(g)
    if rep.regime == "Pseudoinverse":
        return None
    anti = rep.antipodal
    combo = rep.self_centered and rep.is_bm_sharp
    if anti != combo:
        w = _witness_basics(g)
        w.update(
            {
                "antipodal": anti,
                "self_centered": rep.self_centered,
                "bm_sharp": rep.is_bm_sharp,
            }
        )
        return w
    return None


def _pred_singular(g: Graph) -> Optional[dict]:
    sol = steinerberger_curvature(g)
    if sol.solution_space_dim > 0 and sol.regime != "Pseudoinverse":
        return _witness_basics(g)
    return None


def _pred_inconsistent(g: Graph) -> Optional[dict]:
    sol = steinerberger_curvature(g)
    if sol.regime == "Pseudoinverse":
        return _witness_basics(g)
    return None


PREDICATES: dict[str, Callable[[Graph], Optional[dict]]] = {
    "zero-total": _pred_zero_total,
    "negative-total": _pred_negative_total,
    "bm-sharp": _pred_bm_sharp,
    "antipodal-mismatch": _pred_antipodal_mismatch,
    "singular-D": _pred_singular,
    "inconsistent-system": _pred_inconsistent,
}


@dataclass(frozen=True)
class ScanResult:
    predicate: str
    n_range: tuple[int, int]
    graphs_scanned: int
    matches: tuple[tuple[str, dict], ...]  # (graph6, witness)

    def to_dict(self) -> dict:
        return {
            "predicate": self.predicate,
            "n_range": list(self.n_range),
            "graphs_scanned": self.graphs_scanned,
            "matches": [
                {"graph6": g6, "witness": wit} for g6, wit in self.matches
            ],
        }


def _eval_one(args: tuple[str, str]) -> tuple[str, Optional[dict]]:
    predicate_name, g6 = args
    g = parse_graph6(g6)
    return g6, PREDICATES[predicate_name](g)


def scan_graphs(
    n_min: int,
    n_max: int,
    predicate: str,
    source: Optional[Iterable[str]] = None,
    cap: int = DEFAULT_SCAN_CAP,
    jobs: int = 1,
) -> ScanResult:
    """Scan connected graphs for a registered predicate.

    ``source`` may supply graph6 lines (one graph per line) from an external
    enumerator; otherwise the internal isomorphism-free enumerator covers
    n_min..n_max.  Matches re-verify on reload by construction: the stored
    graph6 string decodes to the very graph the predicate accepted.
    """
    if predicate not in PREDICATES:
        raise CurvlabError(
            f"unknown predicate {predicate!r}; known: {sorted(PREDICATES)}"
        )
    if source is None:
        if n_max > cap:
            raise CurvlabError(f"n_max={n_max} exceeds the configured cap {cap}")
        if n_min < 2:
            raise CurvlabError("scans start at n >= 2 (curvature needs two vertices)")
        lines: list[str] = []
        for n in range(n_min, n_max + 1):
            lines.extend(emit_graph6(g) for g in connected_graphs(n))
    else:
        lines = []
        for raw in source:
            s = raw.strip()
            if not s:
                continue
            g = parse_graph6(s)  # validate early: malformed input fails fast
            if not (n_min <= g.n <= n_max):
                continue
            lines.append(s)
    tasks = [(predicate, g6) for g6 in lines]
    if jobs > 1 and len(tasks) > 64:
        with multiprocessing.Pool(jobs) as pool:
            evaluated = pool.map(_eval_one, tasks, chunksize=64)
    else:
        evaluated = [_eval_one(t) for t in tasks]
    matches = tuple((g6, wit) for g6, wit in evaluated if wit is not None)
    return ScanResult(
        predicate=predicate,
        n_range=(n_min, n_max),
        graphs_scanned=len(lines),
        matches=matches,
    )


# --- leaf attachment experiments ------------------------------------------

def leaf_increment_probe(
    g: Graph, attachment_sequence: Sequence[int]
) -> list[tuple[Fraction, ...]]:
    """Curvature of the ORIGINAL vertices after each successive leaf attachment.

    Output[0] is the baseline (no leaves); output[t] follows the t-th
    attachment.  Per-step deltas are left to the caller/report layer.
    """
    base_n = g.n
    out = [steinerberger_curvature(g).K[:base_n]]
    current = g
    for v in attachment_sequence:
        if not (0 <= v < base_n):
            raise ValueError(f"attachment vertex {v} outside the original graph")
        current = attach_leaf(current, v)
        out.append(steinerberger_curvature(current).K[:base_n])
    return out


def probe_deltas(vectors: Sequence[Sequence[Fraction]]) -> list[tuple[Fraction, ...]]:
    """Per-vertex curvature change at each step of a probe result."""
    return [
        tuple(b - a for a, b in zip(vectors[t], vectors[t + 1]))
        for t in range(len(vectors) - 1)
    ]


@dataclass(frozen=True)
class LeafSearchResult:
    base: Graph
    minimum_leaves: int
    #: multiset of attachment vertices as a sorted tuple
    attachment: tuple[int, ...]
    achieved_curvatures: tuple[Fraction, ...]
    strict_all_vertices: bool = field(default=False)

    def attachment_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for v in self.attachment:
            counts[v] = counts.get(v, 0) + 1
        return counts


def _attach_many(g: Graph, attachment: Sequence[int]) -> Graph:
    out = g
    for v in attachment:
        out = attach_leaf(out, v)
    return out


def min_leaves_negative(
    g: Graph,
    budget: int,
    strict_all_vertices: bool = False,
    cap: int = DEFAULT_LEAF_CAP,
) -> LeafSearchResult:
    """Smallest number of leaves making every original vertex negatively curved.

    "Original vertex" means a vertex of ``g``; attached leaves themselves
    tend to carry positive curvature, so requiring them negative as well is
    a separate, stricter question (``strict_all_vertices``).  Search order is
    total leaf count ascending, then lexicographic attachment multiset, which
    guarantees minimality within the budget and reproducibility.  Attachment
    multisets equivalent under a base-graph automorphism are searched once.
    """
    if budget > cap:
        raise CurvlabError(f"budget {budget} exceeds the configured cap {cap}")
    base_n = g.n
    autos = automorphism_group(g) if base_n <= 8 else [tuple(range(base_n))]
    for count in range(budget + 1):
        seen: set[tuple[int, ...]] = set()
        for attachment in combinations_with_replacement(range(base_n), count):
            canon = min(tuple(sorted(p[v] for v in attachment)) for p in autos)
            if canon in seen:
                continue
            seen.add(canon)
            sol = steinerberger_curvature(_attach_many(g, attachment))
            region = sol.K if strict_all_vertices else sol.K[:base_n]
            if all(k < 0 for k in region):
                return LeafSearchResult(
                    base=g,
                    minimum_leaves=count,
                    attachment=attachment,
                    achieved_curvatures=sol.K,
                    strict_all_vertices=strict_all_vertices,
                )
    raise NotFoundWithinBudget(
        f"no attachment of at most {budget} leaves works (searched exhaustively)"
    )


# --- exhaustive theorem checks (used by tests and the CLI) -----------------

def antipodal_equivalence_exceptions(n_min: int, n_max: int) -> list[str]:
    """graph6 strings violating: antipodal <=> (self-centered and BM-sharp).

    Only graphs admitting solutions participate.  An empty list verifies the
    equivalence over the range.
    """
    bad = []
    for n in range(n_min, n_max + 1):
        for g in connected_graphs(n):
            rep = analyze(g)
            if rep.regime == "Pseudoinverse":
                continue
            if rep.antipodal != (rep.self_centered and rep.is_bm_sharp):
                bad.append(emit_graph6(g))
    return bad


def diameter2_sharp_exceptions(n_min: int, n_max: int) -> list[str]:
    """graph6 strings of diameter-2 BM-sharp graphs that are not cocktail party."""
    from .analysis import is_cocktail_party
    from .graphs import diameter

    bad = []
    for n in range(n_min, n_max + 1):
        for g in connected_graphs(n):
            if diameter(g) != 2:
                continue
            rep = analyze(g)
            if rep.is_bm_sharp and not is_cocktail_party(g):
                bad.append(emit_graph6(g))
    return bad
