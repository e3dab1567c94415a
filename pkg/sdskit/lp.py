# -*- coding: utf-8 -*-
"""Exact rational linear programming.

Two-phase primal simplex on a dense tableau of ``Fraction`` entries, with
Bland's rule for entering and leaving variables, so every run terminates.
Problems solved here have at most a few dozen variables and constraints.

This module exports:

Constraint, LinearProgram
    immutable problem description
LpOutcome
    solution status with exact assignment and value
solve(lp)
    maximize the objective
feasible(lp)
    phase one only, a satisfying assignment or None
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction

__all__ = ["Constraint", "LinearProgram", "LpOutcome", "solve", "feasible"]

logger = logging.getLogger(__name__)

_RELATIONS = ("<=", "=", ">=")

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def _coeffs(mapping):
    return {var: Fraction(c) for var, c in dict(mapping).items() if Fraction(c) != 0}


@dataclass(frozen=True)
class Constraint:
    """Linear constraint ``sum(coeffs[v] * v) relation rhs``.

    Parameters
    ----------
    coeffs : mapping of variable name to rational coefficient
    relation : str, one of "<=", "=", ">="
    rhs : rational
    """

    coeffs: dict
    relation: str
    rhs: Fraction

    def __post_init__(self):
        if self.relation not in _RELATIONS:
            raise ValueError(
                f"relation must be one of {_RELATIONS}, but found {self.relation!r}"
            )
        object.__setattr__(self, "coeffs", _coeffs(self.coeffs))
        object.__setattr__(self, "rhs", Fraction(self.rhs))

    def lhs(self, assignment):
        """Evaluate the left hand side at `assignment`."""
        return sum((c * assignment[v] for v, c in self.coeffs.items()), Fraction(0))

    def is_satisfied(self, assignment):
        """Whether `assignment` satisfies the constraint exactly."""
        lhs = self.lhs(assignment)
        if self.relation == "<=":
            return lhs <= self.rhs
        if self.relation == ">=":
            return lhs >= self.rhs
        return lhs == self.rhs


@dataclass(frozen=True)
class LinearProgram:
    """Maximize a linear objective subject to linear constraints.

    Parameters
    ----------
    variables : sequence of str
        declared variables, at least one
    objective : mapping of variable to rational coefficient, optional
        maximized; empty means a pure feasibility problem
    constraints : sequence of Constraint, optional
    nonneg : iterable of str, optional, default = all variables
        variables constrained to be >= 0; the others are free
    """

    variables: tuple
    objective: dict = field(default_factory=dict)
    constraints: tuple = ()
    nonneg: frozenset = None

    def __post_init__(self):
        variables = tuple(self.variables)
        if not variables:
            raise ValueError("a LinearProgram needs at least one variable")
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variables in {variables}")
        declared = set(variables)
        nonneg = declared if self.nonneg is None else frozenset(self.nonneg)
        objective = _coeffs(self.objective)
        constraints = tuple(self.constraints)

        used = set(objective) | set(nonneg)
        for con in constraints:
            if not isinstance(con, Constraint):
                raise TypeError(f"constraints must be Constraint, found {con!r}")
            used |= set(con.coeffs)
        undeclared = used - declared
        if undeclared:
            raise ValueError(
                f"LinearProgram references undeclared variables {undeclared}"
            )

        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "objective", objective)
        object.__setattr__(self, "constraints", constraints)
        object.__setattr__(self, "nonneg", frozenset(nonneg))

    def with_constraints(self, *constraints):
        """Return a copy with `constraints` appended."""
        return LinearProgram(
            self.variables, self.objective, self.constraints + constraints, self.nonneg
        )

    def with_objective(self, objective):
        """Return a copy with a new objective."""
        return LinearProgram(self.variables, objective, self.constraints, self.nonneg)

    def objective_value(self, assignment):
        """Objective evaluated at `assignment`."""
        return sum(
            (c * assignment[v] for v, c in self.objective.items()), Fraction(0)
        )

    def check_assignment(self, assignment):
        """Names of violated constraints / bounds at `assignment` (empty if ok)."""
        violated = [
            f"constraint {k}" for k, con in enumerate(self.constraints)
            if not con.is_satisfied(assignment)
        ]
        violated += [f"{v} >= 0" for v in sorted(self.nonneg) if assignment[v] < 0]
        return violated


@dataclass(frozen=True)
class LpOutcome:
    """Result of `solve`.

    Attributes
    ----------
    status : str, one of "optimal", "infeasible", "unbounded"
    assignment : dict of variable to Fraction, present iff optimal
    value : Fraction, objective at assignment, present iff optimal
    """

    status: str
    assignment: dict = None
    value: Fraction = None

    @property
    def is_optimal(self):
        """Whether an optimum was found."""
        return self.status == OPTIMAL


class _Tableau:
    """Dense simplex tableau of a program in equality standard form."""

    def __init__(self, lp):
        self.lp = lp
        # structural columns: (variable, sign); free variables are split
        self.columns = []
        for var in lp.variables:
            self.columns.append((var, 1))
            if var not in lp.nonneg:
                self.columns.append((var, -1))
        col_index = {}
        for j, (var, sign) in enumerate(self.columns):
            col_index.setdefault(var, []).append((j, sign))

        rows, rhs, kinds = [], [], []
        for con in lp.constraints:
            row = [Fraction(0)] * len(self.columns)
            for var, c in con.coeffs.items():
                for j, sign in col_index[var]:
                    row[j] += sign * c
            b, relation = con.rhs, con.relation
            if b < 0:
                row = [-x for x in row]
                b = -b
                relation = {"<=": ">=", ">=": "<=", "=": "="}[relation]
            rows.append(row)
            rhs.append(b)
            kinds.append(relation)

        n_struct = len(self.columns)
        n_slack = sum(1 for k in kinds if k != "=")
        n_art = sum(1 for k in kinds if k != "<=")
        width = n_struct + n_slack + n_art
        self.artificial = set(range(n_struct + n_slack, width))

        self.T = []
        self.b = list(rhs)
        self.basis = []
        slack_j, art_j = n_struct, n_struct + n_slack
        for row, kind in zip(rows, kinds):
            full = row + [Fraction(0)] * (width - n_struct)
            if kind == "<=":
                full[slack_j] = Fraction(1)
                self.basis.append(slack_j)
                slack_j += 1
            else:
                if kind == ">=":
                    full[slack_j] = Fraction(-1)
                    slack_j += 1
                full[art_j] = Fraction(1)
                self.basis.append(art_j)
                art_j += 1
            self.T.append(full)
        self.width = width
        self.n_pivots = 0

    def pivot(self, i, j):
        piv = self.T[i][j]
        self.T[i] = [x / piv for x in self.T[i]]
        self.b[i] /= piv
        for k in range(len(self.T)):
            if k != i and self.T[k][j] != 0:
                f = self.T[k][j]
                self.T[k] = [x - f * y for x, y in zip(self.T[k], self.T[i])]
                self.b[k] -= f * self.b[i]
        self.basis[i] = j
        self.n_pivots += 1

    def run(self, cost, allowed):
        """Maximize cost over columns in `allowed` with Bland's rule."""
        while True:
            basic = set(self.basis)
            entering = None
            for j in range(self.width):
                if j in basic or j not in allowed:
                    continue
                reduced = cost[j] - sum(
                    cost[self.basis[i]] * self.T[i][j] for i in range(len(self.T))
                )
                if reduced > 0:
                    entering = j
                    break
            if entering is None:
                return OPTIMAL

            leaving = None
            for i in range(len(self.T)):
                a = self.T[i][entering]
                if a > 0:
                    key = (self.b[i] / a, self.basis[i])
                    if leaving is None or key < leaving[0]:
                        leaving = (key, i)
            if leaving is None:
                return UNBOUNDED
            self.pivot(leaving[1], entering)

    def phase_one(self):
        """Drive artificials to zero; return False iff infeasible."""
        if not self.artificial:
            return True
        cost = [Fraction(-1) if j in self.artificial else Fraction(0)
                for j in range(self.width)]
        self.run(cost, set(range(self.width)))
        infeasibility = sum(
            (self.b[i] for i, j in enumerate(self.basis) if j in self.artificial),
            Fraction(0),
        )
        if infeasibility > 0:
            return False

        # artificials left in the basis sit at zero: pivot them out or drop
        # their row, which is then a linear combination of the others
        i = 0
        while i < len(self.T):
            if self.basis[i] in self.artificial:
                for j in range(self.width):
                    if j not in self.artificial and self.T[i][j] != 0:
                        self.pivot(i, j)
                        break
                else:
                    del self.T[i], self.b[i], self.basis[i]
                    continue
            i += 1
        return True

    def phase_two(self):
        cost = [Fraction(0)] * self.width
        for j, (var, sign) in enumerate(self.columns):
            cost[j] = sign * self.lp.objective.get(var, Fraction(0))
        allowed = set(range(self.width)) - self.artificial
        return self.run(cost, allowed)

    def assignment(self):
        values = [Fraction(0)] * self.width
        for i, j in enumerate(self.basis):
            values[j] = self.b[i]
        result = {var: Fraction(0) for var in self.lp.variables}
        for j, (var, sign) in enumerate(self.columns):
            result[var] += sign * values[j]
        return result


def _verified(lp, assignment):
    violated = lp.check_assignment(assignment)
    if violated:
        raise RuntimeError(
            f"simplex produced an assignment violating {violated}; this is a bug"
        )
    return assignment


def solve(lp):
    """Maximize the objective of a linear program exactly.

    Parameters
    ----------
    lp : LinearProgram

    Returns
    -------
    LpOutcome
        optimal assignment and value, or infeasible / unbounded status.
        Optimal assignments are checked by exact substitution into every
        constraint before they are returned.
    """
    tableau = _Tableau(lp)
    if not tableau.phase_one():
        logger.debug("LP infeasible after %d pivots", tableau.n_pivots)
        return LpOutcome(INFEASIBLE)
    status = tableau.phase_two()
    if status == UNBOUNDED:
        logger.debug("LP unbounded after %d pivots", tableau.n_pivots)
        return LpOutcome(UNBOUNDED)

    assignment = _verified(lp, tableau.assignment())
    value = lp.objective_value(assignment)
    logger.debug("LP optimal value %s after %d pivots", value, tableau.n_pivots)
    return LpOutcome(OPTIMAL, assignment, value)


def feasible(lp):
    """Find some assignment satisfying all constraints (phase one of solve).

    Parameters
    ----------
    lp : LinearProgram or iterable of Constraint
        if constraints are given, the variables are those they mention
        (sorted) and all are nonnegative

    Returns
    -------
    dict of variable to Fraction, or None if infeasible
    """
    if not isinstance(lp, LinearProgram):
        constraints = tuple(lp)
        variables = sorted({v for con in constraints for v in con.coeffs})
        lp = LinearProgram(variables, constraints=constraints)
    tableau = _Tableau(lp)
    if not tableau.phase_one():
        return None
    return _verified(lp, tableau.assignment())
