import random

from tropconn.linalg import (
    complete_primitive_to_unimodular,
    det,
    invert,
    kernel_basis,
    matmul,
    primitive_vector,
    rank,
    reduce_mod_rows,
    rref,
)
from tropconn.rational import Rat

from oracles import frac_det, frac_matrix_rank


def test_rref_and_rank():
    rows = [[Rat(1), Rat(2), Rat(3)], [Rat(2), Rat(4), Rat(6)], [Rat(0), Rat(1), Rat(1)]]
    reduced, pivots = rref(rows)
    assert pivots == [0, 1]
    assert rank(rows) == 2


def test_rank_matches_fraction_oracle_random():
    rng = random.Random(7)
    for _ in range(40):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        rows = [[Rat(rng.randint(-3, 3)) for _ in range(n)] for _ in range(m)]
        assert rank(rows) == frac_matrix_rank([[int(x) for x in row] for row in rows])


def test_kernel_basis_is_in_kernel():
    rows = [[Rat(1), Rat(1), Rat(0)], [Rat(0), Rat(1), Rat(1)]]
    basis = kernel_basis(rows, 3)
    assert len(basis) == 1
    (k,) = basis
    for row in rows:
        assert sum(a * b for a, b in zip(row, k)) == 0


def test_det_matches_fraction_oracle_random():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(1, 4)
        mat = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        assert det(mat) == frac_det(mat)


def test_invert_round_trip():
    mat = [[Rat(2), Rat(1)], [Rat(1), Rat(1)]]
    inv = invert(mat)
    prod = matmul(mat, inv)
    assert prod[0] == (Rat(1), Rat(0)) and prod[1] == (Rat(0), Rat(1))
    assert invert([[Rat(1), Rat(2)], [Rat(2), Rat(4)]]) is None


def test_primitive_vector():
    assert primitive_vector((Rat(2, 3), Rat(-4, 3))) == (1, -2)
    assert primitive_vector((Rat(0), Rat(0))) is None
    assert primitive_vector((Rat(-6), Rat(9))) == (-2, 3)


def test_reduce_mod_rows_zeroes_pivots():
    rows, pivots = rref([[Rat(1), Rat(2), Rat(0)], [Rat(0), Rat(0), Rat(1)]])
    reduced = reduce_mod_rows((Rat(5), Rat(1), Rat(7)), rows, pivots)
    assert reduced[0] == 0 and reduced[2] == 0


def test_complete_primitive_to_unimodular_random():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(2, 5)
        while True:
            vec = [rng.randint(-6, 6) for _ in range(n)]
            if any(vec):
                from math import gcd

                g = 0
                for x in vec:
                    g = gcd(g, abs(x))
                if g == 1:
                    break
        mat = complete_primitive_to_unimodular(vec)
        assert mat[0] == list(vec) or tuple(mat[0]) == tuple(vec)
        assert abs(frac_det(mat)) == 1
        assert all(isinstance(x, int) for row in mat for x in row)
