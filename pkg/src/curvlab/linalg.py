"""Exact rational linear algebra over integer matrices.

Everything here runs over :class:`fractions.Fraction`; no operation
introduces rounding.  Floating point belongs to display formatting only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

from .errors import UnboundedProgram


Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]


def to_fraction_vector(v: Sequence) -> Vector:
    return tuple(Fraction(x) for x in v)


def to_fraction_matrix(m: Sequence[Sequence]) -> Matrix:
    return tuple(to_fraction_vector(row) for row in m)


def mat_vec(m: Sequence[Sequence], v: Sequence) -> Vector:
    return tuple(sum((Fraction(a) * Fraction(x) for a, x in zip(row, v)), Fraction(0)) for row in m)


def vec_add(a: Sequence, b: Sequence) -> Vector:
    return tuple(Fraction(x) + Fraction(y) for x, y in zip(a, b))


def vec_scale(a: Sequence, s) -> Vector:
    s = Fraction(s)
    return tuple(Fraction(x) * s for x in a)


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form (in place); returns (rows, pivot columns)."""
    n_rows = len(rows)
    n_cols = len(rows[0]) if n_rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        sel = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [x / piv for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * p for a, p in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


@dataclass(frozen=True)
class LinearSystemSolution:
    """Exact solution structure of D x = b.

    ``rank`` is the rank of D itself; ``nullspace_basis`` always spans
    ker(D), including in the Inconsistent case (where ``particular`` is
    absent).
    """

    tag: Literal["Unique", "Affine", "Inconsistent"]
    particular: Vector | None
    nullspace_basis: tuple[Vector, ...]
    rank: int


def nullspace_basis(matrix: Sequence[Sequence]) -> tuple[tuple[Vector, ...], int]:
    """Exact basis of ker(M) plus rank(M)."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    if not rows:
        return (), 0
    n = len(rows[0])
    rref_rows, pivots = _rref(rows)
    rank = len(pivots)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * n
        vec[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -rref_rows[r][f]
        basis.append(tuple(vec))
    return tuple(basis), rank


def solve(matrix: Sequence[Sequence], b: Sequence) -> LinearSystemSolution:
    """Solve M x = b exactly (square or rectangular M).

    Inconsistency is reported through the tag, never as an exception; the
    particular solution sets all free variables to zero.
    """
    m_rows = len(matrix)
    n = len(matrix[0]) if m_rows else 0
    aug = [[Fraction(x) for x in row] + [Fraction(bv)] for row, bv in zip(matrix, b)]
    rref_rows, pivots = _rref(aug)
    consistent = all(p != n for p in pivots)
    pivots_d = [p for p in pivots if p != n]
    rank = len(pivots_d)
    free = [c for c in range(n) if c not in pivots_d]
    basis = []
    for f in free:
        vec = [Fraction(0)] * n
        vec[f] = Fraction(1)
        for r, p in enumerate(pivots_d):
            vec[p] = -rref_rows[r][f]
        basis.append(tuple(vec))
    if not consistent:
        return LinearSystemSolution("Inconsistent", None, tuple(basis), rank)
    part = [Fraction(0)] * n
    for r, p in enumerate(pivots_d):
        part[p] = rref_rows[r][n]
    tag = "Unique" if not basis else "Affine"
    return LinearSystemSolution(tag, tuple(part), tuple(basis), rank)


# ---------------------------------------------------------------------------
# Exact simplex (two phases, Bland's rule)
# ---------------------------------------------------------------------------

def simplex_max(
    a_rows: Sequence[Sequence],
    b: Sequence,
    c: Sequence,
) -> tuple[Literal["optimal", "infeasible", "unbounded"], Vector | None, Fraction | None]:
    """Maximize c.x subject to A x <= b, x >= 0, in exact arithmetic.

    Two-phase tableau simplex.  Bland's rule (first negative reduced cost,
    smallest-index leaving variable) makes the run deterministic and
    cycle-free.
    """
    m = len(a_rows)
    n = len(c)
    rows: list[list[Fraction]] = []
    art_cols: list[int] = []
    n_slack = m
    for i in range(m):
        row = [Fraction(x) for x in a_rows[i]]
        slack = [Fraction(0)] * n_slack
        slack[i] = Fraction(1)
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-x for x in row]
            slack = [-x for x in slack]
            rhs = -rhs
            art_cols.append(i)
        rows.append(row + slack + [rhs])
    n_art = len(art_cols)
    total = n + n_slack + n_art
    basis: list[int] = []
    art_index = {}
    next_art = n + n_slack
    for i in range(m):
        if i in art_cols:
            art_index[i] = next_art
            next_art += 1
    for i in range(m):
        extra = [Fraction(0)] * n_art
        if i in art_index:
            extra[art_index[i] - n - n_slack] = Fraction(1)
            basis.append(art_index[i])
        else:
            basis.append(n + i)
        rows[i] = rows[i][:-1] + extra + [rows[i][-1]]

    def pivot(r: int, col: int):
        piv = rows[r][col]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * p for x, p in zip(rows[i], rows[r])]
        basis[r] = col

    def run(objective: list[Fraction], barred: frozenset[int]) -> Fraction:
        # z-row: reduced costs (z_j - c_j) with the objective value in the
        # rhs slot; optimal once no reduced cost is negative
        z = [-x for x in objective] + [Fraction(0)]
        for r, bv in enumerate(basis):
            if z[bv] != 0:
                f = z[bv]
                z = [x - f * y for x, y in zip(z, rows[r])]
        assert all(z[bv] == 0 for bv in basis)
        while True:
            enter = next(
                (j for j in range(total) if j not in barred and z[j] < 0), None
            )
            if enter is None:
                return z[total]
            best_ratio = None
            leave = None
            for r in range(m):
                coef = rows[r][enter]
                if coef > 0:
                    ratio = rows[r][total] / coef
                    if (
                        best_ratio is None
                        or ratio < best_ratio
                        or (ratio == best_ratio and basis[r] < basis[leave])
                    ):
                        best_ratio = ratio
                        leave = r
            if leave is None:
                raise UnboundedProgram("no leaving variable")
            pivot(leave, enter)
            f = z[enter]
            if f != 0:
                z = [x - f * y for x, y in zip(z, rows[leave])]

    if n_art:
        phase1 = [Fraction(0)] * (n + n_slack) + [Fraction(-1)] * n_art
        art_value = run(phase1, frozenset())
        if art_value != 0:
            return "infeasible", None, None
        # drive leftover artificial variables out of the basis; rows that are
        # all-zero outside the artificial columns are redundant and stay inert
        for r in range(m):
            if basis[r] >= n + n_slack:
                col = next((j for j in range(n + n_slack) if rows[r][j] != 0), None)
                if col is not None:
                    pivot(r, col)
    art_set = frozenset(range(n + n_slack, total))
    phase2 = [Fraction(x) for x in c] + [Fraction(0)] * (n_slack + n_art)
    try:
        value = run(phase2, art_set)
    except UnboundedProgram:
        return "unbounded", None, None
    x = [Fraction(0)] * n
    for r, bv in enumerate(basis):
        if bv < n:
            x[bv] = rows[r][total]
    return "optimal", tuple(x), value


def maximin_over_affine(
    particular: Sequence, basis: Sequence[Sequence]
) -> tuple[Fraction, Vector]:
    """Maximize the smallest entry over {particular + span(basis)}.

    Solved as the exact LP: maximize m subject to
    (particular + sum_j c_j basis_j)_i >= m for every i, with the free
    variables c_j and m split into nonnegative parts.  The LP is bounded
    whenever the basis is a nullspace of a distance matrix (no nonzero
    nonnegative vector lies in such a kernel); an unbounded report
    therefore raises.
    """
    part = to_fraction_vector(particular)
    if not basis:
        return min(part), part
    k = len(basis)
    n = len(part)
    cols = [to_fraction_vector(z) for z in basis]
    # variables: c_1^+, c_1^-, ..., c_k^+, c_k^-, m^+, m^-
    a_rows = []
    for i in range(n):
        row = []
        for j in range(k):
            zij = cols[j][i]
            row.extend([-zij, zij])
        row.extend([Fraction(1), Fraction(-1)])
        a_rows.append(row)
    b = list(part)
    c = [Fraction(0)] * (2 * k) + [Fraction(1), Fraction(-1)]
    status, x, value = simplex_max(a_rows, b, c)
    if status == "unbounded":
        raise UnboundedProgram("maxi-min program unbounded: basis is not a distance-matrix kernel")
    assert status == "optimal", "maxi-min program is feasible by construction"
    coeffs = [x[2 * j] - x[2 * j + 1] for j in range(k)]
    witness = list(part)
    for j in range(k):
        if coeffs[j]:
            witness = [w + coeffs[j] * z for w, z in zip(witness, cols[j])]
    assert min(witness) == value
    return value, tuple(witness)


# ---------------------------------------------------------------------------
# Moore-Penrose pseudoinverse via exact rank factorization
# ---------------------------------------------------------------------------

def _invert(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    r = len(matrix)
    aug = [row[:] + [Fraction(1) if i == j else Fraction(0) for j in range(r)] for i, row in enumerate(matrix)]
    rref_rows, pivots = _rref(aug)
    assert len(pivots) == r and all(p < r for p in pivots), "matrix not invertible"
    return [row[r:] for row in rref_rows]


def pseudoinverse_matrix(matrix: Sequence[Sequence]) -> Matrix:
    """Exact Moore-Penrose pseudoinverse via the rank factorization M = B C.

    B collects the pivot columns of M, C the nonzero rows of rref(M); then
    M^+ = C^T (C C^T)^(-1) (B^T B)^(-1) B^T.  SVD would leave exact
    arithmetic, rank factorization does not.
    """
    n_rows = len(matrix)
    n_cols = len(matrix[0])
    rows = [[Fraction(x) for x in row] for row in matrix]
    rref_rows, pivots = _rref([row[:] for row in rows])
    r = len(pivots)
    if r == 0:
        return tuple(tuple(Fraction(0) for _ in range(n_rows)) for _ in range(n_cols))
    bmat = [[rows[i][p] for p in pivots] for i in range(n_rows)]  # n_rows x r
    cmat = rref_rows[:r]  # r x n_cols
    cct = [[sum(cmat[i][t] * cmat[j][t] for t in range(n_cols)) for j in range(r)] for i in range(r)]
    btb = [[sum(bmat[t][i] * bmat[t][j] for t in range(n_rows)) for j in range(r)] for i in range(r)]
    cct_inv = _invert(cct)
    btb_inv = _invert(btb)
    # pinv = C^T cct_inv btb_inv B^T, assembled left to right
    left = [[sum(cmat[t][i] * cct_inv[t][j] for t in range(r)) for j in range(r)] for i in range(n_cols)]
    mid = [[sum(left[i][t] * btb_inv[t][j] for t in range(r)) for j in range(r)] for i in range(n_cols)]
    return tuple(
        tuple(sum(mid[i][t] * bmat[j][t] for t in range(r)) for j in range(n_rows))
        for i in range(n_cols)
    )


def pseudoinverse_apply(matrix: Sequence[Sequence], b: Sequence) -> Vector:
    """M^+ b without assembling M^+ (solves the two small r x r systems)."""
    n_rows = len(matrix)
    n_cols = len(matrix[0])
    rows = [[Fraction(x) for x in row] for row in matrix]
    rref_rows, pivots = _rref([row[:] for row in rows])
    r = len(pivots)
    if r == 0:
        return tuple(Fraction(0) for _ in range(n_cols))
    bvec = [Fraction(x) for x in b]
    bmat = [[rows[i][p] for p in pivots] for i in range(n_rows)]
    cmat = rref_rows[:r]
    t1 = [sum(bmat[t][i] * bvec[t] for t in range(n_rows)) for i in range(r)]  # B^T b
    btb = [[sum(bmat[t][i] * bmat[t][j] for t in range(n_rows)) for j in range(r)] for i in range(r)]
    t2_sol = solve(btb, t1)
    cct = [[sum(cmat[i][t] * cmat[j][t] for t in range(n_cols)) for j in range(r)] for i in range(r)]
    t3_sol = solve(cct, t2_sol.particular)
    t3 = t3_sol.particular
    return tuple(sum(cmat[t][i] * t3[t] for t in range(r)) for i in range(n_cols))


# ---------------------------------------------------------------------------
# Characteristic polynomial
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients in ascending degree order."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPolynomial(tuple(out))

    def __call__(self, x: int) -> int:
        acc = 0
        for coef in reversed(self.coefficients):
            acc = acc * x + coef
        return acc

    def __str__(self) -> str:
        terms = []
        for p in range(self.degree, -1, -1):
            c = self.coefficients[p]
            if c == 0:
                continue
            mag = abs(c)
            if p == 0:
                body = str(mag)
            else:
                xp = "x" if p == 1 else f"x^{p}"
                body = xp if mag == 1 else f"{mag}{xp}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms) if terms else "0"


def characteristic_polynomial(matrix: Sequence[Sequence[int]]) -> IntPolynomial:
    """det(xI - M) by the Faddeev-LeVerrier recurrence.

    The recurrence stays in integer arithmetic for integer matrices; every
    division by the step index is exact (asserted).
    """
    n = len(matrix)
    a = [[int(x) for x in row] for row in matrix]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [row[:] for row in a]
    for k in range(1, n + 1):
        trace = sum(mk[i][i] for i in range(n))
        q, rem = divmod(-trace, k)
        assert rem == 0, "Faddeev-LeVerrier division must be exact on integer input"
        coeffs[n - k] = q
        if k == n:
            break
        for i in range(n):
            mk[i][i] += q
        mk = [
            [sum(a[i][t] * mk[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
    return IntPolynomial(tuple(coeffs))
