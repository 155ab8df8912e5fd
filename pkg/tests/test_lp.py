import random

from tropconn import lp
from tropconn.errors import InputError
from tropconn.rational import Rat

from oracles import enumerate_basic_points

import pytest


def _box01(n):
    """0 <= x_i <= 1 as (coeffs, offset) inequality pairs."""
    ineqs = []
    for i in range(n):
        e = [Rat(0)] * n
        e[i] = Rat(1)
        ineqs.append((tuple(e), Rat(0)))
        ineqs.append((tuple(-x for x in e), Rat(1)))
    return ineqs


def test_box_endpoint():
    res = lp.solve([Rat(1)], 1, [], _box01(1), "max")
    assert res.status == lp.OPTIMAL
    assert res.value == 1 and res.point == (Rat(1),)


def test_unbounded_ray():
    res = lp.solve([Rat(1)], 1, [], [((Rat(1),), Rat(0))], "max")
    assert res.status == lp.UNBOUNDED


def test_infeasible():
    res = lp.solve([Rat(1)], 1, [], [((Rat(1),), Rat(-2)), ((Rat(-1),), Rat(1))], "max")
    assert res.status == lp.INFEASIBLE


def test_cut_square_derived():
    # max x+y over the unit square with x+y <= 1/2; oracle: enumerate the
    # vertices of the constraint arrangement and take the best.
    ineqs = _box01(2) + [((Rat(-1), Rat(-1)), Rat(1, 2))]
    res = lp.solve([Rat(1), Rat(1)], 2, [], ineqs, "max")
    assert res.status == lp.OPTIMAL
    oracle_points = enumerate_basic_points([], ineqs, 2)
    best = max(sum(p) for p in oracle_points)
    assert res.value == best == Rat(1, 2)
    assert sum(res.point) == Rat(1, 2)


def test_equalities_and_min():
    # min x + y on the segment x + y = 1, 0 <= x, y <= 2
    eqs = [((Rat(1), Rat(1)), Rat(-1))]
    ineqs = _box01(2)
    res = lp.solve([Rat(1), Rat(0)], 2, eqs, ineqs, "min")
    assert res.status == lp.OPTIMAL
    assert res.value == 0 and res.point == (Rat(0), Rat(1))


def test_exact_constraint_satisfaction_random():
    # optimal points satisfy every constraint exactly; value matches the
    # vertex-enumeration oracle on bounded random problems
    rng = random.Random(5)
    for _ in range(25):
        n = rng.randint(1, 3)
        ineqs = _box01(n)
        for _ in range(rng.randint(0, 3)):
            coeffs = tuple(Rat(rng.randint(-3, 3)) for _ in range(n))
            ineqs.append((coeffs, Rat(rng.randint(0, 4))))
        obj = [Rat(rng.randint(-3, 3)) for _ in range(n)]
        res = lp.solve(obj, n, [], ineqs, "max")
        assert res.status == lp.OPTIMAL
        for coeffs, offset in ineqs:
            assert sum(c * x for c, x in zip(coeffs, res.point)) + offset >= 0
        assert sum(c * x for c, x in zip(obj, res.point)) == res.value
        oracle = max(
            sum(c * Rat(x) for c, x in zip(obj, p))
            for p in enumerate_basic_points([], ineqs, n)
        )
        assert res.value == oracle


def test_degenerate_termination():
    # highly degenerate constraints still terminate (Bland's rule)
    n = 3
    ineqs = []
    for i in range(n):
        e = [Rat(0)] * n
        e[i] = Rat(1)
        ineqs.append((tuple(e), Rat(0)))
    for signs in ((1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)):
        coeffs = tuple(Rat(-s) for s in signs)
        ineqs.append((coeffs, Rat(1)))
    res = lp.solve([Rat(1), Rat(1), Rat(1)], n, [], ineqs, "max")
    assert res.status == lp.OPTIMAL
    assert res.value == Rat(1)


def test_zero_dimensional():
    assert lp.solve([], 0, [], [], "max").status == lp.OPTIMAL
    assert lp.solve([], 0, [], [((), Rat(-1))], "max").status == lp.INFEASIBLE


def test_objective_arity_error():
    with pytest.raises(InputError):
        lp.solve([Rat(1)], 2, [], [], "max")
