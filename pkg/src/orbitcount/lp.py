"""Exact linear programming over the rationals.

A dense tableau simplex in two phases with Bland's rule, so it cannot cycle.
Every quantity is a Fraction; no floating point is involved.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Row = Sequence[int | Fraction]


@dataclass
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    x: list[Fraction] | None = None
    objective: Fraction | None = None

    @property
    def feasible(self) -> bool:
        return self.status != "infeasible"


def _pivot(tab: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    piv = tab[row][col]
    tab[row] = [v / piv for v in tab[row]]
    pr = tab[row]
    for r, line in enumerate(tab):
        if r != row and line[col]:
            f = line[col]
            tab[r] = [a - f * b for a, b in zip(line, pr)]
    basis[row] = col


def _run(tab: list[list[Fraction]], basis: list[int], allowed: int) -> bool:
    """Optimize the objective stored in the last row (minimization of -row convention).

    The last row holds reduced costs; a negative entry can improve. Returns
    False on unboundedness. Only the first `allowed` columns may enter.
    """
    obj = tab[-1]
    m = len(tab) - 1
    while True:
        obj = tab[-1]
        col = next((j for j in range(allowed) if obj[j] < 0), None)
        if col is None:
            return True
        best = None
        for r in range(m):
            a = tab[r][col]
            if a > 0:
                ratio = tab[r][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[r] < basis[best[1]]):
                    best = (ratio, r)
        if best is None:
            return False
        _pivot(tab, basis, best[1], col)


def maximize(
    c: Row,
    A_ub: Sequence[Row] = (),
    b_ub: Row = (),
    A_eq: Sequence[Row] = (),
    b_eq: Row = (),
) -> LPResult:
    """Maximize c.x subject to A_ub x <= b_ub, A_eq x = b_eq and x >= 0."""
    n = len(c)
    rows: list[tuple[list[Fraction], Fraction, bool]] = []
    for a, b in zip(A_ub, b_ub):
        rows.append(([Fraction(v) for v in a], Fraction(b), True))
    for a, b in zip(A_eq, b_eq):
        rows.append(([Fraction(v) for v in a], Fraction(b), False))
    n_slack = sum(1 for _, _, ub in rows if ub)
    m = len(rows)
    width = n + n_slack + m  # structural, slack, artificial
    tab: list[list[Fraction]] = []
    basis: list[int] = []
    slack = n
    for i, (a, b, ub) in enumerate(rows):
        line = a + [Fraction(0)] * (n_slack + m) + [b]
        if ub:
            line[slack] = Fraction(1)
            slack += 1
        if b < 0:
            line = [-v for v in line]
        line[n + n_slack + i] = Fraction(1)
        tab.append(line)
        basis.append(n + n_slack + i)
    # phase 1: minimize the sum of artificials
    phase1 = [Fraction(0)] * (width + 1)
    for line in tab:
        for j in range(n + n_slack):
            phase1[j] -= line[j]
        phase1[-1] -= line[-1]
    tab.append(phase1)
    _run(tab, basis, n + n_slack)
    if tab[-1][-1] != 0:
        return LPResult("infeasible")
    # drive degenerate artificials out of the basis where possible
    for r in range(m):
        if basis[r] >= n + n_slack:
            col = next((j for j in range(n + n_slack) if tab[r][j] != 0), None)
            if col is not None:
                _pivot(tab, basis, r, col)
    # phase 2: reduced costs of -c with respect to the current basis
    cost = [-Fraction(v) for v in c] + [Fraction(0)] * (n_slack + m + 1)
    for r in range(m):
        f = cost[basis[r]]
        if f:
            cost = [a - f * b for a, b in zip(cost, tab[r])]
    tab[-1] = cost
    if not _run(tab, basis, n + n_slack):
        return LPResult("unbounded")
    x = [Fraction(0)] * n
    for r in range(m):
        if basis[r] < n:
            x[basis[r]] = tab[r][-1]
    value = sum((Fraction(ci) * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPResult("optimal", x, value)


def feasible_point(A_ub: Sequence[Row] = (), b_ub: Row = (), A_eq: Sequence[Row] = (), b_eq: Row = (), n: int | None = None) -> list[Fraction] | None:
    """Some x >= 0 meeting the constraints, or None."""
    if n is None:
        n = len((list(A_ub) + list(A_eq))[0])
    res = maximize([0] * n, A_ub, b_ub, A_eq, b_eq)
    return res.x if res.status == "optimal" else None
