"""Independent oracles for the test suite.

Everything here is deliberately self-contained: plain fractions.Fraction
arithmetic and naive algorithms (exhaustive vertex enumeration, brute
lower-hull scans, textbook elimination).  None of it shares code with
the library paths it cross-checks.
"""

from fractions import Fraction
from itertools import combinations


def frac_matrix_rank(rows):
    """Rank by plain Gaussian elimination over Fraction."""
    mat = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    for c in range(cols):
        pivot = None
        for r in range(rank, len(mat)):
            if mat[r][c] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        pv = mat[rank][c]
        mat[rank] = [x / pv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][c] != 0:
                f = mat[r][c]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def frac_det(matrix):
    """Determinant by cofactor-free elimination over Fraction."""
    mat = [[Fraction(x) for x in row] for row in matrix]
    n = len(mat)
    sign = 1
    result = Fraction(1)
    for c in range(n):
        pivot = None
        for r in range(c, n):
            if mat[r][c] != 0:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            mat[c], mat[pivot] = mat[pivot], mat[c]
            sign = -sign
        result *= mat[c][c]
        inv = 1 / mat[c][c]
        for r in range(c + 1, n):
            if mat[r][c] != 0:
                f = mat[r][c] * inv
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[c])]
    return sign * result


def solve_square(rows, rhs):
    """Solve a square rational system; None when singular."""
    n = len(rows)
    mat = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    for c in range(n):
        pivot = None
        for r in range(c, n):
            if mat[r][c] != 0:
                pivot = r
                break
        if pivot is None:
            return None
        mat[c], mat[pivot] = mat[pivot], mat[c]
        pv = mat[c][c]
        mat[c] = [x / pv for x in mat[c]]
        for r in range(n):
            if r != c and mat[r][c] != 0:
                f = mat[r][c]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[c])]
    return [mat[r][n] for r in range(n)]


def enumerate_basic_points(equalities, inequalities, n):
    """All intersection points of constraint subsets that are feasible.

    Constraints are (coeffs, offset) meaning coeffs . x + offset = 0 or
    >= 0.  For a bounded feasible region these are exactly the vertex
    candidates, so max/min of a linear objective over them solves the LP.
    """
    rows = [(list(c), Fraction(b)) for c, b in equalities]
    free = [(list(c), Fraction(b)) for c, b in inequalities]
    points = []
    need = n - len(rows)
    if need < 0:
        return points
    for subset in combinations(range(len(free)), need):
        sys_rows = [r for r, _ in rows] + [free[i][0] for i in subset]
        sys_rhs = [-b for _, b in rows] + [-free[i][1] for i in subset]
        point = solve_square(sys_rows, sys_rhs)
        if point is None:
            continue
        ok = all(
            sum(Fraction(c) * x for c, x in zip(coeffs, point)) + b >= 0
            for coeffs, b in free
        ) and all(
            sum(Fraction(c) * x for c, x in zip(coeffs, point)) + b == 0
            for coeffs, b in rows
        )
        if ok:
            points.append(tuple(point))
    return points


def lower_hull_edges(points):
    """Lower-hull edges of 2D points by brute pair scan.

    Returns (slope, horizontal_length) per maximal edge, left to right.
    Points must have distinct x coordinates.
    """
    pts = sorted((Fraction(x), Fraction(y)) for x, y in points)
    edges = []
    for i, j in combinations(range(len(pts)), 2):
        (x1, y1), (x2, y2) = pts[i], pts[j]
        slope = (y2 - y1) / (x2 - x1)
        below = False
        on_line = []
        for k, (x, y) in enumerate(pts):
            value = y - (y1 + slope * (x - x1))
            if value < 0:
                below = True
                break
            if value == 0:
                on_line.append(k)
        if below:
            continue
        # keep only the maximal segment on this supporting line
        if on_line[0] == i and on_line[-1] == j:
            edges.append((slope, x2 - x1))
    edges.sort()
    return edges


def min_attained_twice(terms, point):
    """Direct evaluation of the min-twice membership test."""
    values = []
    for exponent, valuation in terms:
        acc = Fraction(valuation)
        for e, w in zip(exponent, point):
            acc += e * Fraction(w)
        values.append(acc)
    m = min(values)
    return sum(1 for v in values if v == m) >= 2
