# -*- coding: utf-8 -*-
"""Efficiency verification of lotteries: Pareto, ex post and SD-efficiency."""
import logging
from dataclasses import dataclass

from .extensions import ComparisonResult, sd_compare
from .lp import Constraint, LinearProgram, solve
from .preferences import Lottery

__all__ = [
    "EfficiencyVerdict",
    "pareto_optimal",
    "pareto_dominates",
    "ex_post_efficient",
    "sd_efficient",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EfficiencyVerdict:
    """Outcome of an efficiency check.

    Attributes
    ----------
    efficient : bool
    witness : object or None
        present iff not efficient. For ex post efficiency a pair
        (dominated, dominator) of alternatives, for SD-efficiency a Lottery
        that SD-dominates the checked lottery.
    """

    efficient: bool
    witness: object = None

    def to_dict(self):
        """Structured representation of the verdict."""
        if isinstance(self.witness, Lottery):
            witness = self.witness.to_dict()
        elif self.witness is None:
            witness = None
        else:
            witness = list(self.witness)
        return {"efficient": self.efficient, "witness": witness}


def pareto_dominates(profile, b, a):
    """Whether b Pareto dominates a: weakly preferred by all, strictly by one."""
    orders = [order for _, order in profile.orders()]
    return all(o.weakly_prefers(b, a) for o in orders) and any(
        o.strictly_prefers(b, a) for o in orders
    )


def _dominator(profile, a):
    for b in profile.sorted_alternatives():
        if b != a and pareto_dominates(profile, b, a):
            return b
    return None


def pareto_optimal(profile):
    """Pareto optimal alternatives of a profile.

    Parameters
    ----------
    profile : Profile

    Returns
    -------
    frozenset of str
        alternatives not Pareto dominated by any other alternative
    """
    return frozenset(
        a for a in profile.alternatives if _dominator(profile, a) is None
    )


def _check_lottery(profile, p):
    if p.alternatives != profile.alternatives:
        raise ValueError(
            f"lottery domain {sorted(p.alternatives)} does not match the "
            f"profile alternatives {profile.sorted_alternatives()}"
        )


def ex_post_efficient(profile, p):
    """Check whether `p` is a lottery over Pareto optimal alternatives.

    Parameters
    ----------
    profile : Profile
    p : Lottery over ``profile.alternatives``

    Returns
    -------
    EfficiencyVerdict
        witness = (dominated support alternative, its dominator),
        smallest dominated alternative first
    """
    _check_lottery(profile, p)
    for a in sorted(p.support):
        b = _dominator(profile, a)
        if b is not None:
            return EfficiencyVerdict(False, (a, b))
    return EfficiencyVerdict(True)


def sd_efficient(profile, p):
    """Check whether some lottery SD-dominates `p` for the profile.

    Solves: maximize the sum of slacks s(i, l) subject to q being a lottery
    and q(U) - p(U) = s(i, l) >= 0 for every agent i and upper set U, the
    l-th class prefix of i's order. `p` is SD-efficient iff the optimum is
    zero; otherwise the optimal q is a witness.

    Parameters
    ----------
    profile : Profile
    p : Lottery over ``profile.alternatives``

    Returns
    -------
    EfficiencyVerdict
        witness = Lottery q, SD-preferred by every agent, strictly by one

    Raises
    ------
    RuntimeError
        if a witness fails re-verification by SD comparison
    """
    _check_lottery(profile, p)
    alternatives = profile.sorted_alternatives()
    q_vars = [f"q:{a}" for a in alternatives]

    slack_vars = []
    constraints = [Constraint(dict.fromkeys(q_vars, 1), "=", 1)]
    for agent, order in profile.orders():
        # the last prefix is the full set, its slack is always 0
        for level, upper in enumerate(list(order.prefixes())[:-1]):
            slack = f"s:{agent}:{level}"
            slack_vars.append(slack)
            coeffs = {f"q:{a}": 1 for a in upper}
            coeffs[slack] = -1
            constraints.append(Constraint(coeffs, "=", p.mass(upper)))

    if not slack_vars:
        return EfficiencyVerdict(True)

    lp = LinearProgram(q_vars + slack_vars, dict.fromkeys(slack_vars, 1), constraints)
    outcome = solve(lp)
    if not outcome.is_optimal:
        raise RuntimeError(f"SD-efficiency LP is {outcome.status}; this is a bug")
    if outcome.value == 0:
        return EfficiencyVerdict(True)

    q = Lottery({a: outcome.assignment[f"q:{a}"] for a in alternatives})
    results = [sd_compare(order, q, p) for _, order in profile.orders()]
    if not (
        all(r.weakly_prefers for r in results)
        and ComparisonResult.STRICTLY_PREFERS in results
    ):
        raise RuntimeError(
            f"SD-efficiency witness {q.render()} does not dominate {p.render()}"
        )
    logger.debug("lottery %s SD-dominated by %s", p.render(), q.render())
    return EfficiencyVerdict(False, q)
