"""Exact phase-1 simplex for ``A c = b, c >= 0`` over the rationals.

Bland's rule (smallest eligible index enters, smallest basic index breaks
ratio ties) guarantees termination. Infeasibility is certified by the
phase-1 optimum staying strictly positive; no tolerance is involved.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def feasible_point(a: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """Return a nonnegative exact solution of ``a @ c = b`` or None."""
    m = len(a)
    n = len(a[0]) if m else 0
    rows = [[Fraction(v) for v in row] for row in a]
    rhs = [Fraction(v) for v in b]
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-v for v in rows[i]]
            rhs[i] = -rhs[i]

    # columns 0..n-1 original, n..n+m-1 artificials
    width = n + m
    tab = [rows[i] + [Fraction(int(i == j)) for j in range(m)] + [rhs[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    # reduced costs of the phase-1 objective (minimize sum of artificials)
    cost = [Fraction(0)] * (width + 1)
    for i in range(m):
        for j in range(width + 1):
            if j < n or j == width:
                cost[j] -= tab[i][j]

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            coef = tab[i][enter]
            if coef > 0:
                ratio = tab[i][width] / coef
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            # unbounded phase-1 objective is impossible (bounded below by 0)
            raise AssertionError("phase-1 objective unbounded")
        _pivot(tab, cost, leave, enter)
        basis[leave] = enter

    if cost[width] != 0:
        return None
    c = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            c[j] = tab[i][width]
    return c


def _pivot(tab: list[list[Fraction]], cost: list[Fraction], r: int, c: int) -> None:
    piv = tab[r][c]
    tab[r] = [v / piv for v in tab[r]]
    prow = tab[r]
    for i, row in enumerate(tab):
        if i != r and row[c] != 0:
            f = row[c]
            tab[i] = [x - f * y for x, y in zip(row, prow)]
    if cost[c] != 0:
        f = cost[c]
        cost[:] = [x - f * y for x, y in zip(cost, prow)]
