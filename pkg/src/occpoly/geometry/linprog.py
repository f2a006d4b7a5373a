"""Dense exact-rational linear programming (two-phase simplex, Bland's rule).

The solver never leaves rational arithmetic, so optima and witnesses are
exact.  Problem sizes in this package are tiny (tens of rows and columns);
a dense tableau is the simplest correct choice, and Bland's pivoting rule
rules out cycling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

from ..core import rational, rational_vector

Relation = Literal["<=", ">=", "=="]
Sense = Literal["min", "max"]

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    optimum: Fraction | None
    witness: tuple[Fraction, ...] | None

    def __bool__(self) -> bool:
        return self.status == OPTIMAL


def _pivot(tableau: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    piv = tableau[row][col]
    inv = 1 / piv
    tableau[row] = [x * inv for x in tableau[row]]
    prow = tableau[row]
    for i, line in enumerate(tableau):
        if i == row:
            continue
        factor = line[col]
        if factor:
            tableau[i] = [a - factor * b for a, b in zip(line, prow)]
    basis[row] = col


def _run_simplex(tableau: list[list[Fraction]], basis: list[int], ncols: int) -> str:
    """Minimize the objective stored in the last tableau row.  Bland's rule."""
    m = len(tableau) - 1
    while True:
        cost = tableau[-1]
        col = next((j for j in range(ncols) if cost[j] < 0), None)
        if col is None:
            return OPTIMAL
        best_row = None
        best_ratio: Fraction | None = None
        for i in range(m):
            a = tableau[i][col]
            if a > 0:
                ratio = tableau[i][-1] / a
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[best_row])
                ):
                    best_ratio = ratio
                    best_row = i
        if best_row is None:
            return UNBOUNDED
        _pivot(tableau, basis, best_row, col)


def solve_standard(
    objective: Sequence[Fraction],
    eq_rows: Sequence[Sequence[Fraction]],
    eq_rhs: Sequence[Fraction],
    *,
    maximize: bool = False,
) -> LPResult:
    """Solve ``min/max c.x  s.t.  A x = b, x >= 0`` exactly.

    Two phases: artificial variables establish feasibility, then the real
    objective is optimized.  Redundant equality rows are dropped when an
    artificial cannot be pivoted out.
    """
    n = len(objective)
    c = [rational(v) for v in objective]
    if maximize:
        c = [-v for v in c]
    rows = [list(rational_vector(row)) for row in eq_rows]
    b = [rational(v) for v in eq_rhs]
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ValueError("row length mismatch")
        if b[i] < 0:
            rows[i] = [-x for x in row]
            b[i] = -b[i]
    m = len(rows)

    # Phase 1: one artificial per row.
    ncols = n + m
    tableau = [rows[i] + [Fraction(1) if j == i else Fraction(0) for j in range(m)] + [b[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    cost = [Fraction(0)] * (ncols + 1)
    for i in range(m):
        for j in range(n):
            cost[j] -= tableau[i][j]
        cost[-1] -= tableau[i][-1]
    tableau.append(cost)
    _run_simplex(tableau, basis, n)  # artificial columns never re-enter
    if tableau[-1][-1] != 0:
        return LPResult(INFEASIBLE, None, None)

    # Drive leftover artificials out of the basis (degenerate rows).
    drop_rows: list[int] = []
    for i in range(m):
        if basis[i] >= n:
            col = next((j for j in range(n) if tableau[i][j] != 0), None)
            if col is None:
                drop_rows.append(i)
            else:
                _pivot(tableau, basis, i, col)
    if drop_rows:
        keep = [i for i in range(m) if i not in drop_rows]
        tableau = [tableau[i] for i in keep] + [tableau[-1]]
        basis = [basis[i] for i in keep]
        m = len(basis)

    # Phase 2: strip artificial columns, install the real objective.
    tableau = [row[:n] + [row[-1]] for row in tableau[:-1]]
    cost = list(c) + [Fraction(0)]
    for i, bi in enumerate(basis):
        factor = cost[bi]
        if factor:
            cost = [a - factor * bcol for a, bcol in zip(cost, tableau[i])]
    tableau.append(cost)
    status = _run_simplex(tableau, basis, n)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, None, None)
    x = [Fraction(0)] * n
    for i, bi in enumerate(basis):
        if bi < n:
            x[bi] = tableau[i][-1]
    value = sum((ci * xi for ci, xi in zip(c, x)), Fraction(0))
    if maximize:
        value = -value
    return LPResult(OPTIMAL, value, tuple(x))


def solve_nonneg(
    objective: Sequence[Fraction],
    *,
    leq_rows: Sequence[Sequence[Fraction]] = (),
    leq_rhs: Sequence[Fraction] = (),
    eq_rows: Sequence[Sequence[Fraction]] = (),
    eq_rhs: Sequence[Fraction] = (),
    maximize: bool = False,
) -> LPResult:
    """Solve over nonnegative variables with <= and == rows.

    Slack variables turn inequalities into equalities; the witness is reported
    for the original variables only.
    """
    n = len(objective)
    k = len(leq_rows)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for i, row in enumerate(leq_rows):
        slack = [Fraction(1) if j == i else Fraction(0) for j in range(k)]
        rows.append(list(rational_vector(row)) + slack)
        rhs.append(rational(leq_rhs[i]))
    for i, row in enumerate(eq_rows):
        rows.append(list(rational_vector(row)) + [Fraction(0)] * k)
        rhs.append(rational(eq_rhs[i]))
    padded_obj = list(rational_vector(objective)) + [Fraction(0)] * k
    result = solve_standard(padded_obj, rows, rhs, maximize=maximize)
    if result.status != OPTIMAL:
        return result
    return LPResult(OPTIMAL, result.optimum, result.witness[:n])


def lp_solve(
    objective: Sequence,
    constraints: Sequence[tuple[Sequence, Relation, object]],
    sense: Sense = "min",
) -> LPResult:
    """General exact LP over free (sign-unrestricted) variables.

    ``constraints`` is a list of ``(coefficients, relation, rhs)`` triples with
    relation one of ``"<="``, ``">="``, ``"=="``.  Status is one of
    ``"optimal"``, ``"infeasible"``, ``"unbounded"``; optimum and witness are
    exact rationals when optimal.
    """
    if sense not in ("min", "max"):
        raise ValueError(f"sense must be 'min' or 'max', got {sense!r}")
    n = len(objective)
    c = rational_vector(objective)
    # Free variables split as x = u - v with u, v >= 0.
    split_obj = [*c, *(-ci for ci in c)]
    leq_rows: list[list[Fraction]] = []
    leq_rhs: list[Fraction] = []
    eq_rows: list[list[Fraction]] = []
    eq_rhs: list[Fraction] = []
    for coeffs, relation, rhs in constraints:
        a = rational_vector(coeffs)
        if len(a) != n:
            raise ValueError("constraint length mismatch")
        split = [*a, *(-ai for ai in a)]
        beta = rational(rhs)
        if relation == "<=":
            leq_rows.append(split)
            leq_rhs.append(beta)
        elif relation == ">=":
            leq_rows.append([-x for x in split])
            leq_rhs.append(-beta)
        elif relation == "==":
            eq_rows.append(split)
            eq_rhs.append(beta)
        else:
            raise ValueError(f"unknown relation {relation!r}")
    result = solve_nonneg(
        split_obj,
        leq_rows=leq_rows,
        leq_rhs=leq_rhs,
        eq_rows=eq_rows,
        eq_rhs=eq_rhs,
        maximize=(sense == "max"),
    )
    if result.status != OPTIMAL:
        return result
    witness = tuple(result.witness[j] - result.witness[n + j] for j in range(n))
    return LPResult(OPTIMAL, result.optimum, witness)
