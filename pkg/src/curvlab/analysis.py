"""Diameter bounds, sharpness classification and distance inequalities.

The chain for a nonnegatively curved graph admitting solutions is

    diam(G) <= 2n / total <= 2 / K0,       K0 = min_i K_i,

with sharpness (K0 = 2/diam) forcing constant curvature.  Sharpness is
decided from the maxi-min value in the MaxiMin regime, never from an
arbitrary witness entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .curvature import CurvatureSolution, is_constant_curvature, steinerberger_curvature
from .errors import NotApplicable, WrongDiameter
from .graphs import Graph, diameter, distance_matrix, is_antipodal, is_self_centered


@dataclass(frozen=True)
class AnalysisReport:
    n: int
    diameter: int
    regime: str
    min_curvature: Fraction
    total: Fraction
    #: 2/K0; None either because no solution exists or because K0 <= 0
    bm_upper_bound: Optional[Fraction]
    #: explicit marker instead of a sentinel when K0 = 0 makes the bound infinite
    bm_bound_unbounded: bool
    is_bm_sharp: bool
    constant_curvature: bool
    self_centered: bool
    antipodal: bool
    average_distance: Fraction
    #: 1/K0 for the average-distance inequality, when defined
    avdist_bound: Optional[Fraction]
    solution: CurvatureSolution


def analyze(g: Graph) -> AnalysisReport:
    """Full exact report for a connected graph with n >= 2 vertices."""
    sol = steinerberger_curvature(g)
    d = distance_matrix(g)
    diam = max(max(row) for row in d.rows)
    n = g.n
    k0 = sol.maximin_value if sol.regime == "MaxiMin" else min(sol.K)
    has_solution = sol.has_solution
    avg = Fraction(sum(d.row_sums()), n * n)
    bm_bound = None
    bm_unbounded = False
    if has_solution and k0 > 0:
        bm_bound = Fraction(2) / k0
    elif has_solution and k0 == 0:
        bm_unbounded = True
    sharp = has_solution and k0 == Fraction(2, diam)
    avdist_bound = Fraction(1) / k0 if (has_solution and k0 > 0) else None
    return AnalysisReport(
        n=n,
        diameter=diam,
        regime=sol.regime,
        min_curvature=k0,
        total=sol.total,
        bm_upper_bound=bm_bound,
        bm_bound_unbounded=bm_unbounded,
        is_bm_sharp=sharp,
        constant_curvature=is_constant_curvature(g),
        self_centered=is_self_centered(g),
        antipodal=is_antipodal(g)[0],
        average_distance=avg,
        avdist_bound=avdist_bound,
        solution=sol,
    )


def check_avdist_inequality(g: Graph) -> tuple[bool, bool]:
    """Verify average distance <= 1/K0 for a nonnegative solution.

    Returns (holds, equality).  K0 = 0 makes the bound infinite, so the
    inequality holds vacuously (equality false).  Raises NotApplicable when
    no solution exists or the selected solution has negative entries.
    """
    sol = steinerberger_curvature(g)
    if not sol.has_solution:
        raise NotApplicable("no solution: pseudoinverse regime")
    if any(k < 0 for k in sol.K):
        raise NotApplicable("selected solution has negative entries")
    k0 = sol.maximin_value if sol.regime == "MaxiMin" else min(sol.K)
    d = distance_matrix(g)
    avg = Fraction(sum(d.row_sums()), g.n * g.n)
    if k0 == 0:
        return True, False
    bound = Fraction(1) / k0
    return avg <= bound, avg == bound


def classify_diameter2_sharp(g: Graph) -> bool:
    """Bonnet-Myers sharpness for diameter-2 graphs.

    Sharp diameter-2 graphs are exactly the cocktail party graphs; the
    structural characterisation (every vertex has exactly one non-neighbor)
    is asserted in the test suite, not assumed here.
    """
    if diameter(g) != 2:
        raise WrongDiameter("graph does not have diameter 2")
    return analyze(g).is_bm_sharp


def is_cocktail_party(g: Graph) -> bool:
    """Structural test: complete graph of even order minus a perfect matching."""
    if g.n < 4 or g.n % 2:
        return False
    return all(g.degree(v) == g.n - 2 for v in range(g.n))
