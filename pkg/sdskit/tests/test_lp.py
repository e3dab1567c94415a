# -*- coding: utf-8 -*-
"""Tests for the exact rational simplex."""
from fractions import Fraction

import numpy as np
import pytest

from ..lp import Constraint, LinearProgram, feasible, solve


def test_solve_single_bound():
    lp = LinearProgram(["x"], {"x": 1}, [Constraint({"x": 1}, "<=", Fraction(3, 7))])
    outcome = solve(lp)

    assert outcome.is_optimal
    assert outcome.assignment == {"x": Fraction(3, 7)}
    assert outcome.value == Fraction(3, 7)


def test_solve_infeasible():
    lp = LinearProgram(
        ["x"], {}, [Constraint({"x": 1}, ">=", 1), Constraint({"x": 1}, "<=", 0)]
    )

    assert solve(lp).status == "infeasible"
    assert feasible(lp) is None


def test_solve_unbounded():
    lp = LinearProgram(["x"], {"x": 1}, [Constraint({"x": 1}, ">=", 1)])

    assert solve(lp).status == "unbounded"


def test_solve_symmetric_split():
    """Maximize d with p_a + p_b = 1 and both p_a, p_b >= d."""
    lp = LinearProgram(
        ["pa", "pb", "d"],
        {"d": 1},
        [
            Constraint({"pa": 1, "pb": 1}, "=", 1),
            Constraint({"pa": 1, "d": -1}, ">=", 0),
            Constraint({"pb": 1, "d": -1}, ">=", 0),
        ],
    )
    outcome = solve(lp)

    assert outcome.value == Fraction(1, 2)
    assert outcome.assignment["pa"] == outcome.assignment["pb"] == Fraction(1, 2)


def test_free_variable():
    """Variables outside nonneg may go negative."""
    lp = LinearProgram(
        ["x", "y"],
        {"x": -1},
        [Constraint({"x": 1, "y": 1}, "=", 0), Constraint({"y": 1}, "<=", 2)],
        nonneg=["y"],
    )
    outcome = solve(lp)

    assert outcome.assignment == {"x": -2, "y": 2}
    assert outcome.value == 2


def _lottery_constraints(alternatives, bounds):
    cons = [Constraint({a: 1 for a in alternatives}, "=", 1)]
    cons += [Constraint({a: 1 for a in S}, ">=", rhs) for S, rhs in bounds]
    return cons


def test_feasible_lower_bounds():
    p = feasible(_lottery_constraints("abc", [("ab", 1)]))
    assert p is not None and p["c"] == 0 and p["a"] + p["b"] == 1

    assert feasible(_lottery_constraints("ab", [("a", "2/3"), ("b", "2/3")])) is None

    p = feasible(
        _lottery_constraints("abcdefgh", [("bcf", "1/3"), ("ah", "2/3")])
    )
    assert p is not None
    assert sum(p.values()) == 1


def test_redundant_equalities():
    """Linearly dependent rows are dropped after phase one."""
    lp = LinearProgram(
        ["x", "y"],
        {"x": 1},
        [
            Constraint({"x": 1, "y": 1}, "=", 1),
            Constraint({"x": 2, "y": 2}, "=", 2),
        ],
    )
    outcome = solve(lp)

    assert outcome.assignment == {"x": 1, "y": 0}


def test_negative_rhs():
    lp = LinearProgram(["x"], {"x": -1}, [Constraint({"x": -1}, "<=", -2)])

    assert solve(lp).assignment == {"x": 2}


def test_undeclared_variable_raises():
    with pytest.raises(ValueError, match="undeclared"):
        LinearProgram(["x"], {"y": 1})
    with pytest.raises(ValueError, match="relation"):
        Constraint({"x": 1}, "<", 0)


def test_determinism():
    lp = LinearProgram(
        ["a", "b", "c"],
        {"a": 1, "b": 1},
        _lottery_constraints("abc", [("ab", "1/2"), ("bc", "1/2")]),
    )
    outcomes = [solve(lp) for _ in range(3)]

    assert all(o.assignment == outcomes[0].assignment for o in outcomes)
    assert outcomes[0].value == 1


def _random_program(rng, n_vars, n_cons):
    A = rng.integers(-3, 6, size=(n_cons, n_vars))
    b = rng.integers(0, 10, size=n_cons)
    c = rng.integers(-2, 5, size=n_vars)
    return A, b, c


@pytest.mark.parametrize("seed", range(20))
def test_strong_duality_on_random_programs(seed):
    """max c.x, Ax <= b, x >= 0 against min b.y, A'y >= c, y >= 0."""
    rng = np.random.default_rng(seed)
    A, b, c = _random_program(rng, n_vars=3, n_cons=3)
    xs = [f"x{j}" for j in range(A.shape[1])]
    ys = [f"y{i}" for i in range(A.shape[0])]

    primal = LinearProgram(
        xs,
        {x: int(c[j]) for j, x in enumerate(xs)},
        [
            Constraint({x: int(A[i, j]) for j, x in enumerate(xs)}, "<=", int(b[i]))
            for i in range(A.shape[0])
        ],
    )
    dual = LinearProgram(
        ys,
        {y: -int(b[i]) for i, y in enumerate(ys)},
        [
            Constraint({y: int(A[i, j]) for i, y in enumerate(ys)}, ">=", int(c[j]))
            for j in range(A.shape[1])
        ],
    )
    p, d = solve(primal), solve(dual)

    # b >= 0 makes x = 0 primal feasible
    assert p.status in ("optimal", "unbounded")
    if p.is_optimal:
        assert d.is_optimal
        assert p.value == -d.value
    else:
        assert d.status == "infeasible"
