# -*- coding: utf-8 -*-
"""Base classes for social decision schemes and lottery extensions."""
from skbase.base import BaseObject as _BaseObject

from .preferences import Lottery, Profile, WeakOrder, _check_domain


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed its configured budget."""


class _CommonTags:
    """Mixin for common tag definitions to all object base classes."""

    _tags = {"object_type": "object"}


class BaseObject(_CommonTags, _BaseObject):
    """Base class for parametric objects of the package."""


class BaseSDS(BaseObject):
    """Base class for social decision schemes.

    A social decision scheme maps a preference profile to a lottery over
    the profile's alternatives. Concrete rules implement `_compute`.
    """

    # config common to all rules
    _config = {
        "return_type": "lottery",
        # determines return of compute
        # "lottery" - Lottery
        # "pandas" - pd.Series of Fraction, index = alternatives
        "max_agents": 10,
        # agent budget for rules enumerating agent permutations
    }

    _tags = {
        "object_type": "sds",
        "rule_id": None,
        "anonymous": True,
        "neutral": True,
        "permutation_parameterized": False,
        "ex_post_efficient": False,
    }

    def lottery(self, profile):
        """Compute the rule's lottery for a profile.

        Parameters
        ----------
        profile : Profile

        Returns
        -------
        Lottery over ``profile.alternatives``
        """
        if not isinstance(profile, Profile):
            raise TypeError(
                f"{type(self).__name__} expects a Profile, "
                f"but found {type(profile).__name__}"
            )

        result = self._compute(profile)

        if result.alternatives != profile.alternatives:
            raise RuntimeError(
                f"{self} returned a lottery over {sorted(result.alternatives)}, "
                f"but the profile has {profile.sorted_alternatives()}"
            )
        return result

    def compute(self, profile):
        """Compute the rule's outcome, converted per the return_type config.

        Parameters
        ----------
        profile : Profile

        Returns
        -------
        Lottery, or pd.Series of Fraction if config return_type is "pandas"
        """
        result = self.lottery(profile)

        return_config = self.get_config()["return_type"]
        if return_config == "lottery":
            return result
        elif return_config == "pandas":
            return result.to_series()
        else:
            raise ValueError(
                f"unexpected value in config return_type of {self}, "
                f'must be one of strings "lottery", "pandas", '
                f"but found {return_config}"
            )

    def _compute(self, profile):
        """Compute the rule's lottery for a valid profile.

        Private _compute called from lottery and compute.

        Parameters
        ----------
        profile : Profile

        Returns
        -------
        Lottery over ``profile.alternatives``
        """
        raise NotImplementedError


class BaseLotteryExtension(BaseObject):
    """Base class for lottery extensions.

    A lottery extension lifts an agent's weak order over alternatives to a
    (possibly incomplete) preference over lotteries.
    """

    _tags = {
        "object_type": "lottery_extension",
        "extension_id": None,
        "complete": False,
        "refines_sd": False,
    }

    def compare(self, order, p, q):
        """Compare lottery p against lottery q for an agent with `order`.

        Parameters
        ----------
        order : WeakOrder
        p, q : Lottery over ``order.alternatives``

        Returns
        -------
        ComparisonResult
            the agent's view of p relative to q
        """
        if not isinstance(order, WeakOrder):
            raise TypeError(f"order must be a WeakOrder, found {type(order).__name__}")
        _check_domain(order, p, q)

        return self._compare(order, p, q)

    def _compare(self, order, p, q):
        """Compare lotteries with matching domains, see `compare`."""
        raise NotImplementedError

    def exists_strict_improvement(self, order, q):
        """Decide whether some lottery is strictly preferred to q.

        For stochastic dominance and its refinements, this is the case iff
        q puts mass below 1 on the top class; shifting all remaining mass
        onto the lexicographically least top-class alternative is a witness.

        Parameters
        ----------
        order : WeakOrder
        q : Lottery over ``order.alternatives``

        Returns
        -------
        exists : bool
        witness : Lottery or None
            lottery strictly preferred to q, present iff exists
        """
        _check_domain(order, q)
        top = order.classes[0]
        top_mass = q.mass(top)
        if top_mass == 1:
            return False, None

        target = min(top)
        probs = {a: (q[a] if a in top else 0) for a in q.alternatives}
        probs[target] += 1 - top_mass
        witness = Lottery(probs)
        return True, witness
