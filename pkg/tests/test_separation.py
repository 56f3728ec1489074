import random
from fractions import Fraction

import pytest

from discrepancy.oracles import separable_subset
from discrepancy.separation import feasible_point

F = Fraction


def _check(rows, nvars, x):
    for coeffs, rhs in rows:
        assert sum(a * b for a, b in zip(coeffs, x)) <= rhs


def test_simple_feasible_system():
    rows = [((F(1), F(0)), F(2)), ((F(-1), F(0)), F(0)), ((F(0), F(1)), F(1))]
    x = feasible_point(rows, 2)
    assert x is not None
    _check(rows, 2, x)


def test_infeasible_system():
    rows = [((F(1),), F(0)), ((F(-1),), F(-1))]  # x <= 0 and x >= 1
    assert feasible_point(rows, 1) is None


def test_negative_rhs_needs_artificials():
    rows = [((F(1), F(1)), F(-3)), ((F(-1), F(0)), F(5))]
    x = feasible_point(rows, 2)
    assert x is not None
    _check(rows, 2, x)


def test_trivial_rows():
    assert feasible_point([((F(0),), F(1))], 1) == [F(0)]
    assert feasible_point([((F(0),), F(-1))], 1) is None
    assert feasible_point([], 3) == [F(0)] * 3


def test_separation_system_margin_form():
    # blues (0,0),(1,1); red (1/2,1/2): convexity forces infeasibility
    rows = [
        ((F(0), F(0), F(-1)), F(0)),
        ((F(1), F(1), F(-1)), F(0)),
        ((F(-1, 2), F(-1, 2), F(1)), F(-1)),
    ]
    assert feasible_point(rows, 3) is None


def test_agrees_with_fourier_motzkin_on_random_separations():
    rng = random.Random(99)
    for _ in range(120):
        d = rng.randint(1, 3)
        blues = [
            tuple(F(rng.randint(0, 6), 6) for _ in range(d))
            for _ in range(rng.randint(1, 3))
        ]
        reds = [
            tuple(F(rng.randint(0, 6), 6) for _ in range(d))
            for _ in range(rng.randint(0, 4))
        ]
        rows = [(b + (F(-1),), F(0)) for b in blues]
        rows += [(tuple(-c for c in r) + (F(1),), F(-1)) for r in reds]
        x = feasible_point(rows, d + 1)
        assert (x is not None) == separable_subset(blues, reds)
        if x is not None:
            _check(rows, d + 1, x)
