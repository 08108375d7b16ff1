import random
from fractions import Fraction as F

import pytest

from lctforge.linprog import (
    LinearProgram,
    Optimal,
    Infeasible,
    Unbounded,
    lp_optimize,
)
from vertexenum import box, brute_max, satisfies


def solve(n, obj, sense, cons):
    return lp_optimize(LinearProgram(n, obj, sense, cons))


def test_simple_box_max():
    res = solve(2, [1, 1], "maximize",
                [([1, 0], "<=", 1), ([0, 1], "<=", 2),
                 ([1, 0], ">=", 0), ([0, 1], ">=", 0)])
    assert isinstance(res, Optimal)
    assert res.value == 3
    assert res.witness == (F(1), F(2))


def test_minimize_sense():
    res = solve(1, [3], "minimize",
                [([1], ">=", F(2, 7)), ([1], "<=", 5)])
    assert isinstance(res, Optimal)
    assert res.value == F(6, 7)
    assert res.witness == (F(2, 7),)


def test_equality_row():
    res = solve(2, [1, 0], "maximize",
                [([1, 1], "=", 1), ([1, 0], ">=", 0), ([0, 1], ">=", 0)])
    assert isinstance(res, Optimal)
    assert res.value == 1
    assert res.witness == (1, 0)


def test_infeasible():
    res = solve(1, [1], "maximize", [([1], "<=", -1), ([1], ">=", 0)])
    assert isinstance(res, Infeasible)


def test_unbounded():
    res = solve(1, [1], "maximize", [([1], ">=", 0)])
    assert isinstance(res, Unbounded)


def test_negative_bound_rows():
    # exercises the sign flip in the tableau setup
    res = solve(2, [-1, -1], "maximize",
                [([1, 1], ">=", -3), ([1, 0], "<=", 0), ([0, 1], "<=", 0),
                 ([1, 0], ">=", -5), ([0, 1], ">=", -5)])
    assert isinstance(res, Optimal)
    assert res.value == 3


def test_free_variables_negative_optimum():
    """Variables are free unless constrained; optimum can be negative."""
    res = solve(1, [1], "maximize", [([1], "<=", -2), ([1], ">=", -4)])
    assert isinstance(res, Optimal)
    assert res.value == -2
    assert res.witness == (-2,)


def test_tie_breaks_lexicographically():
    # the whole segment x+y = 1 is optimal; the refinement must pick
    # the lexicographically smallest point, every time
    cons = [([1, 1], "<=", 1), ([1, 0], ">=", 0), ([0, 1], ">=", 0)]
    for _ in range(3):
        res = solve(2, [1, 1], "maximize", cons)
        assert res == Optimal(F(1), (F(0), F(1)))


def test_degenerate_vertex():
    # three rows through one point; Bland's rule has to terminate
    cons = [([1, 1], "<=", 2), ([1, 0], "<=", 1), ([0, 1], "<=", 1),
            ([1, 0], ">=", 0), ([0, 1], ">=", 0)]
    res = solve(2, [2, 1], "maximize", cons)
    assert res == Optimal(F(3), (F(1), F(1)))


def test_validation():
    with pytest.raises(ValueError):
        LinearProgram(2, [1], "maximize", [])
    with pytest.raises(ValueError):
        LinearProgram(1, [1], "best", [])
    with pytest.raises(ValueError):
        LinearProgram(1, [1], "maximize", [([1], "!=", 0)])
    with pytest.raises(ValueError):
        LinearProgram(2, [1, 0], "maximize", [([1], "<=", 0)])


def test_oracle_equivalence_small_sample():
    """Sixty random boxed systems, n <= 3: simplex value must match the
    vertex-enumeration oracle, and Infeasible only when the oracle
    finds no feasible vertex.  (The acceptance suite runs the large
    version of this.)"""
    rng = random.Random(1105)
    for trial in range(60):
        n = rng.choice((1, 2, 3))
        cons = []
        for _ in range(rng.randint(1, 5)):
            coeffs = [F(rng.randint(-4, 4), rng.randint(1, 3))
                      for _ in range(n)]
            if rng.random() < 0.15:
                rel = "="
            else:
                rel = rng.choice(("<=", ">="))
            cons.append((coeffs, rel, F(rng.randint(-6, 6),
                                        rng.randint(1, 2))))
        cons.extend(box(n, 4))
        obj = [F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)]
        res = solve(n, obj, "maximize", cons)
        want = brute_max(n, obj, cons)
        if want is None:
            assert isinstance(res, Infeasible), f"trial {trial}"
        else:
            assert isinstance(res, Optimal), f"trial {trial}"
            assert res.value == want, f"trial {trial}"
            assert satisfies(res.witness, cons), f"trial {trial}"
