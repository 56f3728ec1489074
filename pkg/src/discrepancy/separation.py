"""Exact linear feasibility over the rationals.

A single entry point decides systems {x : coeffs . x <= rhs} with free
variables and, when feasible, returns a witness point.  The method is a
dense phase-1 simplex with Bland's rule (smallest-index entering column,
smallest basis index on ratio ties), which terminates without cycling.
All arithmetic is `Fraction`; there is no tolerance anywhere.

The half-space solver uses this to find a separating witness.  The test
suite's independent reference route is Fourier-Motzkin elimination in
`oracles`, so the two decisions never share code.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

ZERO = Fraction(0)
ONE = Fraction(1)

Constraint = tuple[Sequence[Fraction], Fraction]


def feasible_point(constraints: Sequence[Constraint], nvars: int) -> Optional[list[Fraction]]:
    """A point satisfying coeffs . x <= rhs for every constraint, or None.

    Variables are free; internally each is split into a difference of two
    nonnegative variables and rows are slacked into equalities.
    """
    rows = []
    for coeffs, rhs in constraints:
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != nvars:
            raise ValueError("dimension mismatch")
        if all(c == 0 for c in coeffs):
            if rhs < 0:
                return None
            continue
        rows.append((coeffs, Fraction(rhs)))
    if not rows:
        return [ZERO] * nvars

    m = len(rows)
    art_rows = [i for i, (_, rhs) in enumerate(rows) if rhs < 0]
    n_cols = 2 * nvars + m + len(art_rows)
    tableau: list[list[Fraction]] = []
    rhs_col: list[Fraction] = []
    basis: list[int] = []

    art_index = {}
    for pos, i in enumerate(art_rows):
        art_index[i] = 2 * nvars + m + pos

    for i, (coeffs, rhs) in enumerate(rows):
        sign = ONE if rhs >= 0 else -ONE
        row = [ZERO] * n_cols
        for j, c in enumerate(coeffs):
            row[j] = sign * c
            row[nvars + j] = -sign * c
        row[2 * nvars + i] = sign
        if rhs >= 0:
            basis.append(2 * nvars + i)
        else:
            row[art_index[i]] = ONE
            basis.append(art_index[i])
        tableau.append(row)
        rhs_col.append(sign * rhs)

    # Phase-1 objective: minimize the sum of artificials.  The reduced-cost
    # row is the sum of the artificial rows with the artificial columns
    # themselves zeroed out.
    cost = [ZERO] * n_cols
    for i in art_rows:
        for j in range(n_cols):
            cost[j] += tableau[i][j]
    for col in art_index.values():
        cost[col] = ZERO

    n_real = 2 * nvars + m  # artificial columns never re-enter
    while True:
        entering = next((j for j in range(n_real) if cost[j] > 0), None)
        if entering is None:
            break
        leaving = None
        best_ratio = None
        for i in range(m):
            coeff = tableau[i][entering]
            if coeff > 0:
                ratio = rhs_col[i] / coeff
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[leaving])
                ):
                    best_ratio = ratio
                    leaving = i
        if leaving is None:
            # The objective is bounded below by 0, so an improving column
            # always admits a ratio; reaching here means a corrupt tableau.
            raise RuntimeError("phase-1 objective unbounded")
        _pivot(tableau, rhs_col, cost, leaving, entering)
        basis[leaving] = entering

    residual = sum(rhs_col[i] for i in range(m) if basis[i] >= n_real)
    if residual != 0:
        return None

    values = [ZERO] * n_cols
    for i, b in enumerate(basis):
        values[b] = rhs_col[i]
    return [values[j] - values[nvars + j] for j in range(nvars)]


def _pivot(tableau, rhs_col, cost, row: int, col: int) -> None:
    pivot = tableau[row][col]
    inv = ONE / pivot
    tableau[row] = [c * inv for c in tableau[row]]
    rhs_col[row] *= inv
    for i in range(len(tableau)):
        if i == row:
            continue
        factor = tableau[i][col]
        if factor != 0:
            prow = tableau[row]
            tableau[i] = [a - factor * b for a, b in zip(tableau[i], prow)]
            rhs_col[i] -= factor * rhs_col[row]
    factor = cost[col]
    if factor != 0:
        prow = tableau[row]
        for j in range(len(cost)):
            cost[j] -= factor * prow[j]
