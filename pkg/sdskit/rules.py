# -*- coding: utf-8 -*-
"""Simple social decision schemes.

Functional forms (``constant_rule``, ``serial_dictatorship``, ``rsd``,
``proportional_plurality``, ``borda_uniform``) and their rule objects
(``ConstantRule``, ``SerialDictatorship``, ``RandomSerialDictatorship``,
``ProportionalPlurality``, ``BordaUniform``).
"""
from collections import Counter
from fractions import Fraction

from .base import BaseSDS, BudgetExceededError
from .preferences import Lottery, max_set, restrict

__all__ = [
    "ConstantRule",
    "SerialDictatorship",
    "RandomSerialDictatorship",
    "ProportionalPlurality",
    "BordaUniform",
    "constant_rule",
    "serial_dictatorship",
    "rsd",
    "proportional_plurality",
    "borda_uniform",
    "borda_scores",
]


def constant_rule(profile):
    """Uniform lottery over all alternatives, whatever the reports."""
    return Lottery.uniform(profile.alternatives)


def _check_permutation(profile, permutation):
    """Return the permutation restricted to the profile's agents."""
    if permutation is None:
        return list(profile.agents)
    permutation = list(permutation)
    if len(set(permutation)) != len(permutation):
        raise ValueError(f"invalid permutation {permutation}: duplicate agents")
    missing = set(profile.agents) - set(permutation)
    if missing:
        raise ValueError(
            f"invalid permutation {permutation}: agents {sorted(missing)} "
            "of the profile are not covered"
        )
    # agents listed but absent from the profile have abstained
    return [agent for agent in permutation if agent in profile]


def serial_dictatorship(profile, permutation=None):
    """Serial dictatorship with respect to a permutation of the agents.

    Each agent in turn keeps only its most preferred alternatives among
    those still available.

    Parameters
    ----------
    profile : Profile
    permutation : sequence of int, optional, default = ascending agent ids
        must contain every agent of the profile; agents not in the profile
        are skipped

    Returns
    -------
    lottery : Lottery
        uniform over the final set
    final_set : frozenset of str
        alternatives that survive all dictators
    """
    S = profile.alternatives
    for agent in _check_permutation(profile, permutation):
        S = max_set(profile[agent], S)
        if len(S) == 1:
            break
    return Lottery.uniform(profile.alternatives, over=S), S


def rsd(profile, max_agents=10):
    """Random serial dictatorship: serial dictatorship for a uniform permutation.

    Computed exactly by recursing over the first dictator. Sub-problems are
    memoised on the current alternative set and the multiset of remaining
    orders restricted to it, so agents with identical restricted orders
    are expanded once.

    Parameters
    ----------
    profile : Profile
    max_agents : int, default 10
        budget on the number of agents

    Returns
    -------
    Lottery

    Raises
    ------
    BudgetExceededError
        if the profile has more than `max_agents` agents
    """
    if profile.n_agents > max_agents:
        raise BudgetExceededError(
            f"rsd on {profile.n_agents} agents exceeds the budget of "
            f"{max_agents} agents (config max_agents)"
        )

    memo = {}

    def _distribution(S, orders):
        key = (S, orders)
        if key in memo:
            return memo[key]
        if len(S) == 1 or not orders:
            share = Fraction(1, len(S))
            result = {a: share for a in S}
        else:
            result = {a: Fraction(0) for a in S}
            counts = Counter(orders)
            for order, count in counts.items():
                S_next = max_set(order, S)
                rest = list(orders)
                rest.remove(order)
                rest = _canonical(restrict(o, S_next) for o in rest)
                weight = Fraction(count, len(orders))
                for a, prob in _distribution(S_next, rest).items():
                    result[a] += weight * prob
        memo[key] = result
        return result

    S = profile.alternatives
    orders = _canonical(order for _, order in profile.orders())
    probs = dict.fromkeys(profile.alternatives, 0)
    probs.update(_distribution(S, orders))
    return Lottery(probs)


def _canonical(orders):
    return tuple(sorted(orders, key=lambda o: o.sort_key()))


def proportional_plurality(profile):
    """Proportional plurality.

    Each agent splits one point uniformly over its top class; probabilities
    are the points divided by the number of agents.
    """
    points = dict.fromkeys(profile.alternatives, Fraction(0))
    for _, order in profile.orders():
        top = order.classes[0]
        for a in top:
            points[a] += Fraction(1, len(top))
    n = profile.n_agents
    return Lottery({a: v / n for a, v in points.items()})


def borda_scores(profile):
    """Symmetric Borda scores for weak orders.

    Each agent gives an alternative one point per alternative ranked strictly
    below it and half a point per other alternative in its class.

    Returns
    -------
    dict of str to Fraction
    """
    scores = dict.fromkeys(profile.alternatives, Fraction(0))
    for _, order in profile.orders():
        below = len(profile.alternatives)
        for cls in order.classes:
            below -= len(cls)
            for a in cls:
                scores[a] += below + Fraction(len(cls) - 1, 2)
    return scores


def borda_uniform(profile):
    """Uniform lottery over the alternatives with maximal Borda score."""
    scores = borda_scores(profile)
    best = max(scores.values())
    winners = [a for a, s in scores.items() if s == best]
    return Lottery.uniform(profile.alternatives, over=winners)


class ConstantRule(BaseSDS):
    """Constant rule, uniform over all alternatives independently of reports."""

    _tags = {"rule_id": "constant"}

    def _compute(self, profile):
        """Compute the rule's lottery for a valid profile.

        Parameters
        ----------
        profile : Profile

        Returns
        -------
        Lottery, uniform over ``profile.alternatives``
        """
        return constant_rule(profile)


class SerialDictatorship(BaseSDS):
    """Serial dictatorship with respect to a fixed permutation of agents.

    Parameters
    ----------
    permutation : tuple of int, optional, default = None
        order in which agents refine the set of alternatives.
        None = ascending agent ids of the profile.
        Agents of the permutation missing from a profile are skipped.
    """

    _tags = {
        "rule_id": "sd",
        "anonymous": False,
        "permutation_parameterized": True,
        "ex_post_efficient": True,
    }

    def __init__(self, permutation=None):
        self.permutation = permutation

        super(SerialDictatorship, self).__init__()

        if permutation is not None and not all(
            isinstance(agent, int) and agent >= 1 for agent in permutation
        ):
            raise ValueError(
                "in SerialDictatorship, permutation must be a sequence of "
                f"positive int agent ids, but found {permutation}"
            )

    @classmethod
    def get_test_params(cls, parameter_set="default"):
        """Return testing parameter settings for the rule.

        Returns
        -------
        params : list of dict
            identity order, and a fixed order listing more agents than
            the test profiles have
        """
        return [{}, {"permutation": (3, 1, 2, 4)}]

    def final_set(self, profile):
        """Alternatives left after all dictators, as a frozenset."""
        return serial_dictatorship(profile, self.permutation)[1]

    def _compute(self, profile):
        """Compute the rule's lottery for a valid profile.

        Parameters
        ----------
        profile : Profile

        Returns
        -------
        Lottery, uniform over the final set of the serial dictatorship
        """
        return serial_dictatorship(profile, self.permutation)[0]


class RandomSerialDictatorship(BaseSDS):
    """Random serial dictatorship, computed exactly over all permutations.

    The number of agents is limited by config ``max_agents``.
    """

    _tags = {"rule_id": "rsd", "ex_post_efficient": True}

    def _compute(self, profile):
        """Compute the rule's lottery for a valid profile.

        Parameters
        ----------
        profile : Profile

        Returns
        -------
        Lottery, average of serial dictatorship over all permutations
        """
        return rsd(profile, max_agents=self.get_config()["max_agents"])


class ProportionalPlurality(BaseSDS):
    """Proportional plurality, one point per agent split over its top class."""

    _tags = {"rule_id": "pp"}

    def _compute(self, profile):
        return proportional_plurality(profile)


class BordaUniform(BaseSDS):
    """Uniform randomization over the symmetric Borda winners."""

    _tags = {"rule_id": "bo"}

    def _compute(self, profile):
        return borda_uniform(profile)
