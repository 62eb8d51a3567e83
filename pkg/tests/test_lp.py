import random
from fractions import Fraction

import pytest

from orbitcount.lp import feasible_point, maximize


def test_textbook_maximum():
    # max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18  -> (2, 6), value 36
    res = maximize([3, 5], [[1, 0], [0, 2], [3, 2]], [4, 12, 18])
    assert res.status == "optimal"
    assert res.x == [2, 6] and res.objective == 36


def test_equality_and_negative_rhs():
    # x + y = 1, -x <= -1/3  ->  maximize y gives y = 2/3
    res = maximize([0, 1], [[-1, 0]], [Fraction(-1, 3)], [[1, 1]], [1])
    assert res.x == [Fraction(1, 3), Fraction(2, 3)]


def test_infeasible_and_unbounded():
    assert maximize([1], [[1]], [-1]).status == "infeasible"
    assert not maximize([1], [[1]], [-1]).feasible
    assert maximize([1, 0], [[0, 1]], [3]).status == "unbounded"
    assert feasible_point([[1, 1]], [-2]) is None
    assert feasible_point([[1, 1]], [2]) is not None


def test_degenerate_problem_terminates():
    # a classic cycling example for the largest-coefficient rule
    c = [Fraction(3, 4), -150, Fraction(1, 50), -6]
    A = [[Fraction(1, 4), -60, Fraction(-1, 25), 9], [Fraction(1, 2), -90, Fraction(-1, 50), 3], [0, 0, 1, 0]]
    res = maximize(c, A, [0, 0, 1])
    assert res.status == "optimal" and res.objective == Fraction(1, 20)


def test_agrees_with_scipy_on_random_problems():
    linprog = pytest.importorskip("scipy.optimize").linprog
    rng = random.Random(3)
    for _ in range(60):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        c = [rng.randint(-5, 5) for _ in range(n)]
        A = [[rng.randint(-4, 6) for _ in range(n)] for _ in range(m)]
        b = [rng.randint(-3, 10) for _ in range(m)]
        ours = maximize(c, A, b)
        ref = linprog([-x for x in c], A_ub=A, b_ub=b, bounds=[(0, None)] * n, method="highs")
        expected = {0: "optimal", 2: "infeasible", 3: "unbounded"}[ref.status]
        assert ours.status == expected
        if expected == "optimal":
            assert abs(float(ours.objective) + ref.fun) < 1e-7
            assert all(sum(a * x for a, x in zip(row, ours.x)) <= bi for row, bi in zip(A, b))
            assert all(x >= 0 for x in ours.x)
