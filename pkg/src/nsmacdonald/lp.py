"""Exact two-phase simplex over the rationals, Bland's rule throughout.

Problems are given in equality form ``A x = b, x >= 0``.
"""

from dataclasses import dataclass
from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: str
    x: tuple = None
    value: Fraction = None

    @property
    def feasible(self):
        return self.status != INFEASIBLE


def _pivot(rows, cost, basis, r, col):
    piv = rows[r][col]
    row = [v / piv for v in rows[r]]
    rows[r] = row
    for k, other in enumerate(rows):
        if k != r and other[col] != 0:
            f = other[col]
            rows[k] = [a - f * b for a, b in zip(other, row)]
    if cost[col] != 0:
        f = cost[col]
        cost[:] = [a - f * b for a, b in zip(cost, row)]
    basis[r] = col


def _run(rows, cost, basis, allowed):
    """Minimise; ``cost`` holds reduced costs with the objective value negated in the last slot."""
    while True:
        col = next((j for j in allowed if cost[j] < 0), None)
        if col is None:
            return OPTIMAL
        best = None
        for r, row in enumerate(rows):
            if row[col] > 0:
                ratio = row[-1] / row[col]
                key = (ratio, basis[r])
                if best is None or key < best[0]:
                    best = (key, r)
        if best is None:
            return UNBOUNDED
        _pivot(rows, cost, basis, best[1], col)


def solve(A, b, c=None):
    """Maximise ``c . x`` (or just find a feasible point) subject to ``A x = b, x >= 0``."""
    m = len(A)
    nvar = len(A[0]) if m else len(c or ())
    rows = []
    for ai, bi in zip(A, b):
        row = [Fraction(v) for v in ai] + [Fraction(bi)]
        if row[-1] < 0:
            row = [-v for v in row]
        rows.append(row)
    # phase one: artificials nvar .. nvar+m-1
    width = nvar + m
    rows = [row[:-1] + [Fraction(int(k == r)) for k in range(m)] + [row[-1]]
            for r, row in enumerate(rows)]
    basis = [nvar + r for r in range(m)]
    cost = [Fraction(0)] * (width + 1)
    for k in range(nvar, width):
        cost[k] = Fraction(1)
    for row in rows:
        cost = [a - v for a, v in zip(cost, row)]
    _run(rows, cost, basis, range(width))
    if -cost[-1] != 0:
        return LPResult(INFEASIBLE)
    # drive artificials out of the basis, dropping redundant rows
    r = 0
    while r < len(rows):
        if basis[r] >= nvar:
            col = next((j for j in range(nvar) if rows[r][j] != 0), None)
            if col is None:
                del rows[r]
                del basis[r]
                continue
            _pivot(rows, cost, basis, r, col)
        r += 1
    rows = [row[:nvar] + [row[-1]] for row in rows]

    def point():
        x = [Fraction(0)] * nvar
        for r, j in enumerate(basis):
            x[j] = rows[r][-1]
        return tuple(x)

    if c is None:
        return LPResult(OPTIMAL, point(), Fraction(0))
    cost = [-Fraction(v) for v in c] + [Fraction(0)]
    for r, j in enumerate(basis):
        if cost[j] != 0:
            f = cost[j]
            cost = [a - f * v for a, v in zip(cost, rows[r])]
    status = _run(rows, cost, basis, range(nvar))
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = point()
    return LPResult(OPTIMAL, x, sum(Fraction(ci) * xi for ci, xi in zip(c, x)))


def in_convex_hull(points, x):
    """True iff ``x`` is a convex combination of ``points`` (exact)."""
    points = list(points)
    n = len(x)
    A = [[p[k] for p in points] for k in range(n)] + [[1] * len(points)]
    b = list(x) + [1]
    return solve(A, b).feasible
