# -*- coding: utf-8 -*-
"""Participation and strategyproofness audits.

An audit runs a rule on a profile with and without one agent (participation)
or with every misreport of one agent (strategyproofness), and compares the
outcomes under a lottery extension with the agent's true order.

This module exports:

Level, ParticipationNotion, ALL_NOTIONS
    the participation notions, one level per lottery extension
AuditVerdict, StrategyproofnessVerdict
    audit results with both outcomes and witnesses
audit_participation, audit_all_notions, check_implications
audit_strategyproofness
OutcomeCache
    memoised rule outcomes, shared across audits
"""
import logging
from dataclasses import dataclass
from enum import Enum

from .base import BaseSDS, BudgetExceededError
from .extensions import ComparisonResult, get_extension
from .preferences import iter_weak_orders

__all__ = [
    "Level",
    "ParticipationNotion",
    "ALL_NOTIONS",
    "AuditVerdict",
    "StrategyproofnessVerdict",
    "OutcomeCache",
    "audit_participation",
    "audit_all_notions",
    "check_implications",
    "audit_strategyproofness",
]

logger = logging.getLogger(__name__)


class Level(Enum):
    """Participation levels, weakest first."""

    PARTICIPATION = "participation"
    STRONG = "strong"
    VERY_STRONG = "very-strong"


@dataclass(frozen=True)
class ParticipationNotion:
    """Participation level combined with a lottery extension id.

    Parameters
    ----------
    level : Level or str, e.g. "very-strong"
    extension : str, "sd" or "dl"
    """

    level: Level
    extension: str

    def __post_init__(self):
        object.__setattr__(self, "level", Level(self.level))
        ext = get_extension(self.extension).get_tag("extension_id")
        object.__setattr__(self, "extension", ext)

    @classmethod
    def parse(cls, text):
        """Parse an id such as ``"very-strong-sd"`` or ``"participation-dl"``."""
        level, sep, ext = str(text).rpartition("-")
        if not sep:
            raise ValueError(
                f"participation notion must look like 'strong-sd', found {text!r}"
            )
        return cls(level, ext)

    def __str__(self):
        return f"{self.level.value}-{self.extension}"


ALL_NOTIONS = tuple(
    ParticipationNotion(level, ext) for ext in ("sd", "dl") for level in Level
)


def _as_notion(notion):
    if isinstance(notion, ParticipationNotion):
        return notion
    return ParticipationNotion.parse(notion)


class OutcomeCache:
    """Memoised rule outcomes, keyed by rule class, parameters, config and profile."""

    def __init__(self):
        self._outcomes = {}
        self.hits = 0

    @staticmethod
    def key(rule, profile):
        params = tuple(sorted((k, repr(v)) for k, v in rule.get_params().items()))
        config = tuple(sorted((k, repr(v)) for k, v in rule.get_config().items()))
        return type(rule).__name__, params, config, profile

    def lottery(self, rule, profile):
        """Return ``rule.lottery(profile)``, computed at most once."""
        key = self.key(rule, profile)
        if key in self._outcomes:
            self.hits += 1
        else:
            self._outcomes[key] = rule.lottery(profile)
        return self._outcomes[key]

    def __len__(self):
        return len(self._outcomes)


@dataclass(frozen=True)
class AuditVerdict:
    """Result of a participation audit for one (rule, profile, agent).

    Attributes
    ----------
    notion : ParticipationNotion
    agent : int
    holds : bool
    with_lottery : Lottery
        outcome when the agent participates
    without_lottery : Lottery
        outcome when the agent abstains
    comparison : ComparisonResult
        the agent's view of with_lottery relative to without_lottery
    improvement_exists : bool
        whether some lottery is strictly preferred to without_lottery
    improvement : Lottery or None
        such a lottery, present iff improvement_exists
    explanation : str
    """

    notion: ParticipationNotion
    agent: int
    holds: bool
    with_lottery: object
    without_lottery: object
    comparison: ComparisonResult
    improvement_exists: bool
    improvement: object
    explanation: str

    def to_dict(self):
        """Structured representation of the verdict."""
        return {
            "notion": str(self.notion),
            "agent": self.agent,
            "holds": self.holds,
            "with": self.with_lottery.to_dict(),
            "without": self.without_lottery.to_dict(),
            "comparison": self.comparison.value,
            "improvement_exists": self.improvement_exists,
            "improvement": (
                None if self.improvement is None else self.improvement.to_dict()
            ),
            "explanation": self.explanation,
        }


def _check_rule(rule):
    if not isinstance(rule, BaseSDS):
        raise TypeError(f"rule must be a BaseSDS, found {type(rule).__name__}")


def _verdict(notion, agent, order, with_lottery, without_lottery):
    ext = get_extension(notion.extension)
    comparison = ext.compare(order, with_lottery, without_lottery)
    exists, improvement = ext.exists_strict_improvement(order, without_lottery)

    name = notion.extension.upper()
    if notion.level is Level.PARTICIPATION:
        holds = comparison is not ComparisonResult.STRICTLY_DISPREFERRED
        explanation = (
            f"abstaining is {name}-better for agent {agent}"
            if not holds
            else f"abstaining is not {name}-better for agent {agent}"
        )
    elif notion.level is Level.STRONG:
        holds = comparison.weakly_prefers
        explanation = (
            f"participating is {comparison.value} under {name} for agent {agent}"
        )
    else:
        strong = comparison.weakly_prefers
        holds = strong and (
            not exists or comparison is ComparisonResult.STRICTLY_PREFERS
        )
        if not strong:
            explanation = (
                f"participating is {comparison.value} under {name} for agent {agent}"
            )
        elif not holds:
            explanation = (
                f"participating leaves agent {agent} indifferent although "
                f"a strict {name}-improvement exists"
            )
        else:
            explanation = (
                f"participating is {comparison.value} under {name} for agent "
                f"{agent}, improvement exists: {exists}"
            )
    return AuditVerdict(
        notion=notion,
        agent=agent,
        holds=holds,
        with_lottery=with_lottery,
        without_lottery=without_lottery,
        comparison=comparison,
        improvement_exists=exists,
        improvement=improvement,
        explanation=explanation,
    )


def audit_participation(rule, profile, agent, notion, cache=None):
    """Audit one participation notion for one agent.

    Parameters
    ----------
    rule : BaseSDS
    profile : Profile, with at least 2 agents
    agent : int, agent of `profile`
    notion : ParticipationNotion or str such as "strong-sd"
    cache : OutcomeCache, optional

    Returns
    -------
    AuditVerdict

    Raises
    ------
    BudgetExceededError
        if the rule cannot be computed within its budget
    """
    _check_rule(rule)
    notion = _as_notion(notion)
    cache = OutcomeCache() if cache is None else cache
    order = profile[agent]
    with_lottery = cache.lottery(rule, profile)
    without_lottery = cache.lottery(rule, profile.remove_agent(agent))
    verdict = _verdict(notion, agent, order, with_lottery, without_lottery)
    logger.debug("%s agent %d %s: %s", rule, agent, notion, verdict.holds)
    return verdict


def audit_all_notions(rule, profile, agent, cache=None):
    """Audit all six participation notions, computing both outcomes once.

    Returns
    -------
    dict of ParticipationNotion to AuditVerdict, ordered as ALL_NOTIONS
    """
    cache = OutcomeCache() if cache is None else cache
    return {
        notion: audit_participation(rule, profile, agent, notion, cache=cache)
        for notion in ALL_NOTIONS
    }


def _n(level, ext):
    return ParticipationNotion(level, ext)


def _implications():
    P, S, VS = Level.PARTICIPATION, Level.STRONG, Level.VERY_STRONG
    rules = [
        ([_n(VS, "sd")], _n(VS, "dl")),
        ([_n(S, "sd")], _n(S, "dl")),
        ([_n(P, "dl")], _n(P, "sd")),
        ([_n(S, "sd"), _n(VS, "dl")], _n(VS, "sd")),
    ]
    for ext in ("sd", "dl"):
        rules.append(([_n(VS, ext)], _n(S, ext)))
        rules.append(([_n(S, ext)], _n(P, ext)))
        if get_extension(ext).get_tag("complete"):
            rules.append(([_n(P, ext)], _n(S, ext)))
    return rules


def check_implications(verdicts):
    """Violated implications between participation verdicts.

    Checked: very strong implies strong implies participation for each
    extension, SD-notions imply the DL-notions for the strong levels,
    DL-participation implies SD-participation, participation implies strong
    for complete extensions, and strong SD with very strong DL implies very
    strong SD.

    Parameters
    ----------
    verdicts : dict of ParticipationNotion to AuditVerdict,
        as returned by `audit_all_notions`

    Returns
    -------
    list of str, descriptions of violated implications, empty if none
    """
    holds = {notion: verdict.holds for notion, verdict in verdicts.items()}
    violated = []
    for premises, conclusion in _implications():
        if any(n not in holds for n in premises + [conclusion]):
            continue
        if all(holds[n] for n in premises) and not holds[conclusion]:
            lhs = " and ".join(str(n) for n in premises)
            violated.append(f"{lhs} holds but {conclusion} does not")
    return violated


@dataclass(frozen=True)
class StrategyproofnessVerdict:
    """Result of a strategyproofness audit for one (rule, profile, agent).

    Attributes
    ----------
    agent : int
    extension : str
    holds : bool
        whether the truthful outcome is weakly preferred to the outcome of
        every misreport (E-strategyproofness)
    manipulable : bool
        whether some misreport gives a strictly preferred outcome
    truthful_lottery : Lottery
    misreport : WeakOrder or None
        first manipulating misreport if manipulable, else first misreport
        breaking the strong contract, None if holds
    misreport_lottery : Lottery or None
        outcome under `misreport`
    comparison : ComparisonResult or None
        agent's view of misreport_lottery relative to truthful_lottery
    n_misreports : int
        number of misreports evaluated
    """

    agent: int
    extension: str
    holds: bool
    manipulable: bool
    truthful_lottery: object
    misreport: object
    misreport_lottery: object
    comparison: object
    n_misreports: int

    def to_dict(self):
        """Structured representation of the verdict."""
        return {
            "agent": self.agent,
            "extension": self.extension,
            "holds": self.holds,
            "manipulable": self.manipulable,
            "truthful": self.truthful_lottery.to_dict(),
            "misreport": None if self.misreport is None else self.misreport.render(),
            "misreport_lottery": (
                None if self.misreport_lottery is None
                else self.misreport_lottery.to_dict()
            ),
            "comparison": None if self.comparison is None else self.comparison.value,
            "n_misreports": self.n_misreports,
        }


def audit_strategyproofness(
    rule, profile, agent, ext="sd", max_alternatives=5, cache=None
):
    """Audit one agent's misreports over all weak orders of the alternatives.

    Parameters
    ----------
    rule : BaseSDS
    profile : Profile
    agent : int, agent of `profile`
    ext : str or BaseLotteryExtension, default "sd"
    max_alternatives : int, default 5
        enumeration budget, 541 weak orders at 5 alternatives
    cache : OutcomeCache, optional

    Returns
    -------
    StrategyproofnessVerdict

    Raises
    ------
    BudgetExceededError
        if the profile has more than `max_alternatives` alternatives
    """
    _check_rule(rule)
    ext = get_extension(ext)
    m = len(profile.alternatives)
    if m > max_alternatives:
        raise BudgetExceededError(
            f"strategyproofness audit over {m} alternatives exceeds the budget "
            f"of {max_alternatives} alternatives"
        )
    cache = OutcomeCache() if cache is None else cache
    truth = profile[agent]
    truthful = cache.lottery(rule, profile)

    manipulation, weak_spot = None, None
    n_misreports = 0
    for misreport in iter_weak_orders(profile.alternatives):
        if misreport == truth:
            continue
        n_misreports += 1
        outcome = cache.lottery(rule, profile.replace_order(agent, misreport))
        comparison = ext.compare(truth, outcome, truthful)
        if comparison is ComparisonResult.STRICTLY_PREFERS:
            manipulation = (misreport, outcome, comparison)
            break
        if weak_spot is None and not comparison.flip().weakly_prefers:
            weak_spot = (misreport, outcome, comparison)

    witness = manipulation or weak_spot or (None, None, None)
    verdict = StrategyproofnessVerdict(
        agent=agent,
        extension=ext.get_tag("extension_id"),
        holds=manipulation is None and weak_spot is None,
        manipulable=manipulation is not None,
        truthful_lottery=truthful,
        misreport=witness[0],
        misreport_lottery=witness[1],
        comparison=witness[2],
        n_misreports=n_misreports,
    )
    logger.debug(
        "%s agent %d %s-strategyproof: %s after %d misreports",
        rule, agent, verdict.extension, verdict.holds, n_misreports,
    )
    return verdict
