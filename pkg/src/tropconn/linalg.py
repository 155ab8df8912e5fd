"""Exact dense linear algebra over the rationals.

Everything here works on tuples/lists of Rat; matrices are lists of row
vectors.  Sizes are desk scale (dimension <= 10 or so), so plain
Gaussian elimination is the right tool.
"""

from __future__ import annotations

from math import gcd

from .rational import ONE, ZERO, Rat


def dot(u, v):
    acc = ZERO
    for a, b in zip(u, v):
        acc += a * b
    return acc


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vneg(u):
    return tuple(-a for a in u)


def vscale(c, u):
    return tuple(c * a for a in u)


def is_zero_vector(u) -> bool:
    return all(a == 0 for a in u)


def as_rat_vector(values):
    from .rational import as_rat

    return tuple(as_rat(v) for v in values)


def rref(rows):
    """Reduced row echelon form.

    Returns (reduced_rows, pivot_columns); zero rows are dropped.  The
    result is canonical for the row space, which several canonical
    encodings rely on.
    """
    mat = [list(r) for r in rows]
    ncols = len(mat[0]) if mat else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    reduced = [tuple(row) for row in mat[:r]]
    return reduced, pivots


def rank(rows) -> int:
    if not rows:
        return 0
    return len(rref(rows)[0])


def kernel_basis(rows, n):
    """Canonical basis of {x : rows @ x = 0} in dimension n."""
    if not rows:
        return [tuple(ONE if j == i else ZERO for j in range(n)) for i in range(n)]
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [ZERO] * n
        vec[f] = ONE
        for row, p in zip(reduced, pivots):
            vec[p] = -row[f]
        basis.append(tuple(vec))
    return basis


def reduce_mod_rows(vec, reduced_rows, pivots):
    """Subtract row-space multiples so the pivot coordinates vanish.

    With reduced_rows in RREF this picks the unique representative of
    vec modulo the row space whose pivot coordinates are zero.
    """
    out = list(vec)
    for row, p in zip(reduced_rows, pivots):
        f = out[p]
        if f != 0:
            out = [x - f * y for x, y in zip(out, row)]
    return tuple(out)


def det(matrix):
    """Exact determinant by fraction-free-enough Gaussian elimination."""
    n = len(matrix)
    if n == 0:
        return ONE
    mat = [[Rat(x) if isinstance(x, int) else x for x in row] for row in matrix]
    result = ONE
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if mat[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            return ZERO
        if pivot_row != c:
            mat[c], mat[pivot_row] = mat[pivot_row], mat[c]
            result = -result
        pv = mat[c][c]
        result *= pv
        for i in range(c + 1, n):
            if mat[i][c] != 0:
                f = mat[i][c] / pv
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[c])]
    return result


def invert(matrix):
    """Exact inverse, or None when singular."""
    n = len(matrix)
    aug = []
    for i, row in enumerate(matrix):
        r = [Rat(x) if isinstance(x, int) else x for x in row]
        r += [ONE if j == i else ZERO for j in range(n)]
        aug.append(r)
    reduced, pivots = rref(aug)
    if pivots != list(range(n)):
        return None
    return [tuple(row[n:]) for row in reduced]


def matvec(matrix, vec):
    return tuple(dot(row, vec) for row in matrix)


def matmul(a, b):
    bt = list(zip(*b))
    return [tuple(dot(row, col) for col in bt) for row in a]


def identity_int(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def primitive_vector(vec):
    """Positive primitive integer multiple of a rational vector.

    Returns a tuple of ints, or None for the zero vector.
    """
    if all(x == 0 for x in vec):
        return None
    lcm = 1
    for x in vec:
        d = int(x.denominator)
        lcm = lcm // gcd(lcm, d) * d
    ints = [int(x.numerator) * (lcm // int(x.denominator)) for x in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return tuple(v // g for v in ints)


def gcd_vector(ints) -> int:
    g = 0
    for v in ints:
        g = gcd(g, abs(int(v)))
    return g


def complete_primitive_to_unimodular(first_row):
    """Integer matrix with |det| = 1 whose first row is the given
    primitive vector.

    Column-reduces the vector to e1 by unimodular operations and
    inverts the accumulated transform.
    """
    n = len(first_row)
    c = [int(x) for x in first_row]
    if gcd_vector(c) != 1:
        raise ValueError("first row must be a primitive integer vector")
    trans = identity_int(n)  # maintains first_row @ trans == c

    def col_addmul(dst, src, q):
        for row in trans:
            row[dst] -= q * row[src]

    while True:
        nz = [j for j in range(n) if c[j] != 0]
        if len(nz) == 1:
            break
        p = min(nz, key=lambda j: abs(c[j]))
        for j in nz:
            if j == p:
                continue
            q = c[j] // c[p]
            if q:
                c[j] -= q * c[p]
                col_addmul(j, p, q)
    j0 = next(j for j in range(n) if c[j] != 0)
    if j0 != 0:
        for row in trans:
            row[0], row[j0] = row[j0], row[0]
        c[0], c[j0] = c[j0], c[0]
    if c[0] < 0:
        for row in trans:
            row[0] = -row[0]
        c[0] = -c[0]
    assert c[0] == 1
    inv = invert(trans)
    return [[int(x) for x in row] for row in inv]
