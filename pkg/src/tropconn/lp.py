"""Exact linear programming over the rationals.

Two-phase primal simplex on a dense tableau with Bland's anti-cycling
pivot rule, so termination is guaranteed without perturbation.  Free
variables are split into positive parts; inequalities a.x + b >= 0 get
a surplus variable; Phase I maximizes the negated sum of artificials.

Constraints are passed as "functionals": pairs (coeffs, offset)
standing for coeffs . x + offset, pinned to = 0 or >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rational import ONE, ZERO
from .errors import InputError

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpResult:
    status: str
    value: object = None  # Rat
    point: tuple = None  # tuple of Rat

    @property
    def is_optimal(self):
        return self.status == OPTIMAL


def _pivot(tableau, obj, basis, row, col):
    pr = tableau[row]
    pv = pr[col]
    if pv != 1:
        inv = ONE / pv
        tableau[row] = pr = [x * inv for x in pr]
    for i, ri in enumerate(tableau):
        if i != row and ri[col] != 0:
            f = ri[col]
            tableau[i] = [x - f * y for x, y in zip(ri, pr)]
    if obj[col] != 0:
        f = obj[col]
        for j, y in enumerate(pr):
            obj[j] -= f * y
    basis[row] = col


def _run_phase(tableau, obj, basis, ncols):
    """Pivot until no reduced profit is positive.  Returns False when an
    unbounded improving direction is found."""
    while True:
        col = None
        for j in range(ncols):
            if obj[j] > 0:
                col = j  # Bland: smallest improving index
                break
        if col is None:
            return True
        row = None
        best = None
        for i, ri in enumerate(tableau):
            a = ri[col]
            if a > 0:
                ratio = ri[-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[row]):
                    best = ratio
                    row = i
        if row is None:
            return False
        _pivot(tableau, obj, basis, row, col)


def solve(objective, ambient_dim, equalities, inequalities, sense="max"):
    """Optimize objective . x over the system of functionals.

    objective: sequence of Rat, length ambient_dim.
    equalities/inequalities: iterables of (coeffs, offset).
    """
    if len(objective) != ambient_dim:
        raise InputError(
            f"objective length {len(objective)} != ambient dimension {ambient_dim}"
        )
    if sense not in ("max", "min"):
        raise InputError(f"sense must be 'max' or 'min', got {sense!r}")
    flip = sense == "min"
    obj_vec = [(-c if flip else c) for c in objective]

    n = ambient_dim
    ineqs = list(inequalities)
    eqs = list(equalities)
    m = len(eqs) + len(ineqs)
    nsurplus = len(ineqs)
    nstruct = 2 * n + nsurplus  # u, w, surplus
    ncols = nstruct + m  # + artificials

    # Row for a.x + b = 0:  a.u - a.w = -b ; inequality adds  -s.
    tableau = []
    basis = []
    rows_data = []
    for coeffs, offset in eqs:
        rows_data.append((list(coeffs), None, -offset))
    for k, (coeffs, offset) in enumerate(ineqs):
        rows_data.append((list(coeffs), 2 * n + k, -offset))
    for i, (coeffs, surplus_col, rhs) in enumerate(rows_data):
        neg = rhs < 0
        sgn = -ONE if neg else ONE
        row = [ZERO] * (ncols + 1)
        for j, c in enumerate(coeffs):
            if c != 0:
                row[j] = sgn * c
                row[n + j] = -sgn * c
        if surplus_col is not None:
            row[surplus_col] = -sgn
        row[nstruct + i] = ONE
        row[-1] = sgn * rhs
        tableau.append(row)
        basis.append(nstruct + i)

    # Phase I: maximize -(sum of artificials); reduced profits are the
    # column sums over the constraint rows (artificials start basic).
    obj1 = [ZERO] * (ncols + 1)
    for row in tableau:
        for j in range(nstruct):
            obj1[j] += row[j]
        obj1[-1] += row[-1]
    _run_phase(tableau, obj1, basis, nstruct)
    if obj1[-1] != 0:
        return LpResult(INFEASIBLE)

    # Drive leftover artificial basics out, dropping dependent rows.
    keep = []
    for i in range(len(tableau)):
        if basis[i] >= nstruct:
            col = next((j for j in range(nstruct) if tableau[i][j] != 0), None)
            if col is None:
                continue  # redundant row
            _pivot(tableau, obj1, basis, i, col)
        keep.append(i)
    tableau = [tableau[i][:nstruct] + [tableau[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]

    # Phase II objective: c over u minus c over w, eliminated over the
    # basis.  The last entry carries the negated objective value.
    cost = [ZERO] * (nstruct + 1)
    for j, c in enumerate(obj_vec):
        cost[j] = c
        cost[n + j] = -c
    obj2 = list(cost)
    obj2[-1] = ZERO
    for i, b in enumerate(basis):
        cb = cost[b]
        if cb != 0:
            for j in range(nstruct):
                obj2[j] -= cb * tableau[i][j]
            obj2[-1] -= cb * tableau[i][-1]
    for b in basis:
        obj2[b] = ZERO
    bounded = _run_phase(tableau, obj2, basis, nstruct)
    if not bounded:
        return LpResult(UNBOUNDED)

    values = [ZERO] * nstruct
    for i, b in enumerate(basis):
        values[b] = tableau[i][-1]
    point = tuple(values[j] - values[n + j] for j in range(n))
    value = -obj2[-1]
    return LpResult(OPTIMAL, -value if flip else value, point)


def feasible(ambient_dim, equalities, inequalities):
    """Phase-I-only feasibility test."""
    res = solve([ZERO] * ambient_dim, ambient_dim, equalities, inequalities)
    return res.status != INFEASIBLE
