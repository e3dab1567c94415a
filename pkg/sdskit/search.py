# -*- coding: utf-8 -*-
"""Exhaustive search over small profile spaces, and random instance samplers.

`search` runs the participation auditor, the efficiency verifiers or the
strategyproofness auditor on every profile with a given range of agents and
alternatives, and collects violations.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, permutations, product
from string import ascii_lowercase

import numpy as np

from .audit import (
    Level,
    OutcomeCache,
    ParticipationNotion,
    audit_participation,
    audit_strategyproofness,
)
from .base import BaseSDS, BudgetExceededError
from .efficiency import ex_post_efficient, sd_efficient
from .preferences import Lottery, Profile, WeakOrder, iter_weak_orders

__all__ = [
    "PROPERTIES",
    "SearchSpec",
    "SearchReport",
    "Violation",
    "enumerate_weak_orders",
    "search",
    "random_weak_order",
    "random_profile",
    "random_lottery",
]

logger = logging.getLogger(__name__)

PROPERTIES = (
    "participation",
    "strong",
    "very-strong",
    "expost",
    "sd-efficiency",
    "strategyproofness",
)
_PER_AGENT = ("participation", "strong", "very-strong", "strategyproofness")


def _letters(m):
    if not 1 <= m <= len(ascii_lowercase):
        raise ValueError(f"number of alternatives must be in 1..26, found {m}")
    return list(ascii_lowercase[:m])


def enumerate_weak_orders(m, alternatives=None, max_alternatives=5):
    """All weak orders over m alternatives, in canonical order.

    Parameters
    ----------
    m : int, >= 1
    alternatives : sequence of str, optional, default = first m letters
    max_alternatives : int, default 5
        enumeration budget; there are 541 weak orders over 5 alternatives

    Returns
    -------
    list of WeakOrder, of length the m-th ordered Bell number

    Raises
    ------
    BudgetExceededError
        if m exceeds `max_alternatives`
    """
    if m < 1:
        raise ValueError(f"m must be a positive int, found {m}")
    if m > max_alternatives:
        raise BudgetExceededError(
            f"enumerating weak orders over {m} alternatives exceeds the budget "
            f"of {max_alternatives} alternatives"
        )
    if alternatives is None:
        alternatives = _letters(m)
    elif len(set(alternatives)) != m:
        raise ValueError(f"expected {m} distinct alternatives, found {alternatives}")
    return list(iter_weak_orders(alternatives))


@dataclass
class SearchSpec:
    """Search space and property.

    Parameters
    ----------
    rule : BaseSDS
    property : str, one of PROPERTIES
        participation levels and "strategyproofness" are checked per agent
        under `extension`; "expost" and "sd-efficiency" check the rule's
        outcome on each profile
    extension : str, "sd" or "dl", default "sd"
    n_range : (int, int), default (2, 3)
        inclusive range of the number of agents
    m_range : (int, int), default (2, 3)
        inclusive range of the number of alternatives
    canonicalize : bool, optional, default = rule's "anonymous" tag
        enumerate profiles as multisets of orders instead of tuples
    budget : int, optional
        maximum number of profiles to check
    shard : (int, int), default (1, 1)
        (k, K): check only profiles whose index is k - 1 modulo K
    max_alternatives : int, default 5
        enumeration budget, also used by strategyproofness audits
    """

    rule: BaseSDS
    property: str
    extension: str = "sd"
    n_range: tuple = (2, 3)
    m_range: tuple = (2, 3)
    canonicalize: bool = None
    budget: int = None
    shard: tuple = (1, 1)
    max_alternatives: int = 5

    def __post_init__(self):
        if not isinstance(self.rule, BaseSDS):
            raise TypeError(f"rule must be a BaseSDS, found {type(self.rule).__name__}")
        if self.property not in PROPERTIES:
            raise ValueError(
                f"property must be one of {PROPERTIES}, found {self.property!r}"
            )
        for name in ("n_range", "m_range"):
            lo, hi = getattr(self, name)
            if not 1 <= lo <= hi:
                raise ValueError(f"{name} must satisfy 1 <= lo <= hi, found {(lo, hi)}")
        k, K = self.shard
        if not 1 <= k <= K:
            raise ValueError(f"shard must satisfy 1 <= k <= K, found {k}/{K}")
        if self.budget is not None and self.budget < 0:
            raise ValueError(f"budget must be nonnegative, found {self.budget}")
        permutation = getattr(self.rule, "permutation", None)
        if self.rule.get_tag("permutation_parameterized") and permutation is not None:
            missing = set(range(1, self.n_range[1] + 1)) - set(permutation)
            if missing:
                raise ValueError(
                    f"permutation {tuple(permutation)} does not cover agents "
                    f"{sorted(missing)} of n_range {self.n_range}"
                )
        if self.canonicalize is None:
            self.canonicalize = bool(self.rule.get_tag("anonymous"))


@dataclass(frozen=True)
class Violation:
    """Profile (and agent) on which the searched property fails."""

    profile: Profile
    agent: int
    rule: str
    verdict: object

    def sort_key(self):
        return (self.profile.canonical_key(), self.agent or 0, self.rule)

    def to_dict(self):
        """Structured representation of the violation."""
        return {
            "profile": self.profile.to_dict(),
            "agent": self.agent,
            "rule": self.rule,
            "verdict": self.verdict.to_dict(),
        }


@dataclass
class SearchReport:
    """Outcome of `search`.

    Attributes
    ----------
    spec : SearchSpec
    instances_checked : int
        number of profiles checked
    violations : list of Violation, sorted canonically
    exhausted : bool
        whether the whole (sharded) space was covered
    errors : list of (Profile, str)
        profiles on which the rule exceeded its budget
    """

    spec: SearchSpec
    instances_checked: int = 0
    violations: list = field(default_factory=list)
    exhausted: bool = False
    errors: list = field(default_factory=list)

    def to_dict(self):
        """Structured representation of the report."""
        return {
            "rule": str(self.spec.rule),
            "property": self.spec.property,
            "extension": self.spec.extension,
            "instances_checked": self.instances_checked,
            "exhausted": self.exhausted,
            "violations": [v.to_dict() for v in self.violations],
            "errors": [
                {"profile": p.to_dict(), "message": msg} for p, msg in self.errors
            ],
        }

    def to_frame(self):
        """Violations as pd.DataFrame, one row per violation."""
        import pandas as pd

        rows = [
            {
                "profile": v.profile.render().strip().replace("\n", "; "),
                "agent": v.agent,
                "rule": v.rule,
                "with": getattr(v.verdict, "with_lottery", None),
                "without": getattr(v.verdict, "without_lottery", None),
            }
            for v in self.violations
        ]
        columns = ["profile", "agent", "rule", "with", "without"]
        return pd.DataFrame(rows, columns=columns)


def _iter_profiles(spec):
    for n in range(spec.n_range[0], spec.n_range[1] + 1):
        if spec.property in _PER_AGENT[:3] and n < 2:
            continue
        for m in range(spec.m_range[0], spec.m_range[1] + 1):
            orders = enumerate_weak_orders(m, max_alternatives=spec.max_alternatives)
            if spec.canonicalize:
                tuples = combinations_with_replacement(orders, n)
            else:
                tuples = product(orders, repeat=n)
            for t in tuples:
                yield Profile(dict(enumerate(t, start=1)), _letters(m))


def _rule_family(rule, n):
    """Rules to check on n-agent profiles; fixes a permutation if needed."""
    if not rule.get_tag("permutation_parameterized") or rule.permutation is not None:
        return [rule]
    agents = tuple(range(1, n + 1))
    perms = list(permutations(agents)) if n <= 3 else [agents]
    return [rule.clone().set_params(permutation=perm) for perm in perms]


def _agents_to_check(spec, profile):
    if spec.property not in _PER_AGENT:
        return [None]
    if not spec.canonicalize:
        return list(profile.agents)
    # anonymous rules: agents with equal orders are interchangeable
    seen, agents = set(), []
    for agent, order in profile.orders():
        if order not in seen:
            seen.add(order)
            agents.append(agent)
    return agents


def _check(spec, rule, profile, agent, cache):
    """Return the verdict if the property fails, else None."""
    prop = spec.property
    if prop == "strategyproofness":
        verdict = audit_strategyproofness(
            rule, profile, agent, spec.extension, spec.max_alternatives, cache=cache
        )
        return None if verdict.holds else verdict
    if prop in ("expost", "sd-efficiency"):
        check = ex_post_efficient if prop == "expost" else sd_efficient
        verdict = check(profile, cache.lottery(rule, profile))
        return None if verdict.efficient else verdict
    notion = ParticipationNotion(Level(prop), spec.extension)
    verdict = audit_participation(rule, profile, agent, notion, cache=cache)
    return None if verdict.holds else verdict


def search(spec):
    """Check a property on every profile of a bounded space.

    Profiles are enumerated by increasing number of agents, then of
    alternatives, then in canonical order of order tuples (multisets if
    `spec.canonicalize`). Budget errors of the rule on single profiles are
    recorded in the report and the search goes on.

    Parameters
    ----------
    spec : SearchSpec

    Returns
    -------
    SearchReport
    """
    report = SearchReport(spec)
    cache = OutcomeCache()
    k, K = spec.shard
    exhausted = True
    for index, profile in enumerate(_iter_profiles(spec)):
        if index % K != k - 1:
            continue
        if spec.budget is not None and report.instances_checked >= spec.budget:
            exhausted = False
            break
        report.instances_checked += 1
        if report.instances_checked % 1000 == 0:
            logger.debug(
                "search checked %d profiles, %d violations",
                report.instances_checked,
                len(report.violations),
            )
        for rule in _rule_family(spec.rule, profile.n_agents):
            for agent in _agents_to_check(spec, profile):
                try:
                    verdict = _check(spec, rule, profile, agent, cache)
                except BudgetExceededError as err:
                    logger.warning("budget exceeded on %r: %s", profile, err)
                    report.errors.append((profile, str(err)))
                    continue
                if verdict is not None:
                    violation = Violation(profile, agent, str(rule), verdict)
                    report.violations.append(violation)

    report.violations.sort(key=Violation.sort_key)
    report.exhausted = exhausted
    logger.debug(
        "search done: %d profiles, %d violations, exhausted %s",
        report.instances_checked,
        len(report.violations),
        exhausted,
    )
    return report


def random_weak_order(alternatives, rng=None):
    """Random weak order: shuffled alternatives cut into classes at random.

    Parameters
    ----------
    alternatives : iterable of str
    rng : int, np.random.Generator or None
        seed or generator, passed to np.random.default_rng

    Returns
    -------
    WeakOrder
    """
    rng = np.random.default_rng(rng)
    alts = sorted(alternatives)
    shuffled = [alts[i] for i in rng.permutation(len(alts))]
    cuts = rng.integers(0, 2, size=len(alts) - 1)
    classes, current = [], [shuffled[0]]
    for alt, cut in zip(shuffled[1:], cuts):
        if cut:
            classes.append(current)
            current = []
        current.append(alt)
    classes.append(current)
    return WeakOrder(classes)


def random_profile(n, m, rng=None):
    """Random profile with agents 1..n over the first m letters."""
    rng = np.random.default_rng(rng)
    alternatives = _letters(m)
    return Profile(
        {agent: random_weak_order(alternatives, rng) for agent in range(1, n + 1)},
        alternatives,
    )


def random_lottery(alternatives, rng=None, denominator=12, sparsity=0.3):
    """Random lottery with exact probabilities from integer draws.

    Parameters
    ----------
    alternatives : iterable of str
    rng : int, np.random.Generator or None
    denominator : int, default 12
        integer weights are drawn from 0..denominator
    sparsity : float, default 0.3
        probability that an alternative gets weight 0

    Returns
    -------
    Lottery
    """
    rng = np.random.default_rng(rng)
    alts = sorted(alternatives)
    weights = rng.integers(1, denominator + 1, size=len(alts))
    weights = np.where(rng.random(len(alts)) < sparsity, 0, weights)
    if weights.sum() == 0:
        weights[rng.integers(len(alts))] = 1
    total = int(weights.sum())
    return Lottery({a: Fraction(int(w), total) for a, w in zip(alts, weights)})
