"""Exact rational phase-1 simplex for linear feasibility.

Solves ``A x >= b`` with free variables x over Q, by minimizing the sum of
artificial variables on the standard-form relaxation.  Bland's rule is used
throughout, so the method cannot cycle and is fully deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


def feasible_ge(a_rows: Sequence[Sequence[Fraction]],
                b: Sequence[Fraction]) -> list[Fraction] | None:
    """A point x with A x >= b (x free), or None when the system is infeasible."""
    m = len(a_rows)
    if m == 0:
        return []
    d = len(a_rows[0])

    # Flip rows so every right-hand side is nonnegative, then write
    # A u - A v - w + s = b with u, v, w, s >= 0 and artificial basis s.
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for row, bv in zip(a_rows, b):
        if bv < 0:
            rows.append([-c for c in row])
            rhs.append(-bv)
        else:
            rows.append(list(row))
            rhs.append(Fraction(bv))

    ncols = 2 * d + 2 * m
    tableau: list[list[Fraction]] = []
    for i in range(m):
        line = [ZERO] * (ncols + 1)
        for j in range(d):
            line[j] = rows[i][j]
            line[d + j] = -rows[i][j]
        # surplus for kept rows (>=), slack for flipped rows (<=)
        line[2 * d + i] = -ONE if b[i] >= 0 else ONE
        line[2 * d + m + i] = ONE
        line[ncols] = rhs[i]
        tableau.append(line)

    basis = [2 * d + m + i for i in range(m)]

    # Objective: minimize the sum of artificials; reduced-cost row for the
    # initial basis is -sum of constraint rows (artificial columns cancel).
    obj = [ZERO] * (ncols + 1)
    for line in tableau:
        for j in range(ncols + 1):
            obj[j] -= line[j]
    for i in range(m):
        obj[2 * d + m + i] = ZERO

    while True:
        enter = next((j for j in range(ncols) if obj[j] < 0), None)
        if enter is None:
            break
        leave_row = None
        best = None
        for i in range(m):
            coef = tableau[i][enter]
            if coef > 0:
                ratio = tableau[i][ncols] / coef
                if best is None or ratio < best or (
                        ratio == best and basis[i] < basis[leave_row]):
                    best = ratio
                    leave_row = i
        if leave_row is None:
            raise ArithmeticError("phase-1 objective unbounded")  # impossible
        piv = tableau[leave_row][enter]
        tableau[leave_row] = [v / piv for v in tableau[leave_row]]
        for i in range(m):
            if i != leave_row and tableau[i][enter]:
                f = tableau[i][enter]
                tableau[i] = [v - f * w for v, w in
                              zip(tableau[i], tableau[leave_row])]
        if obj[enter]:
            f = obj[enter]
            obj = [v - f * w for v, w in zip(obj, tableau[leave_row])]
        basis[leave_row] = enter

    if -obj[ncols] != 0:
        return None

    x = [ZERO] * d
    for i, var in enumerate(basis):
        val = tableau[i][ncols]
        if var < d:
            x[var] += val
        elif var < 2 * d:
            x[var - d] -= val
    return x
