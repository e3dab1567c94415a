# -*- coding: utf-8 -*-
"""Tests for participation and strategyproofness audits."""
from types import SimpleNamespace

import pytest

from ..audit import (
    ALL_NOTIONS,
    Level,
    OutcomeCache,
    ParticipationNotion,
    audit_all_notions,
    audit_participation,
    audit_strategyproofness,
    check_implications,
)
from ..base import BudgetExceededError
from ..esr import EgalitarianSimultaneousReservation
from ..extensions import ComparisonResult, sd_compare
from ..mr import MaximalRecursive
from ..preferences import parse_lottery, parse_profile
from ..rules import (
    BordaUniform,
    ConstantRule,
    ProportionalPlurality,
    RandomSerialDictatorship,
    SerialDictatorship,
)
from ..search import random_profile
from ..worked_examples import PROFILES


def test_notion_parse_and_str():
    notion = ParticipationNotion.parse("very-strong-sd")

    assert notion == ParticipationNotion(Level.VERY_STRONG, "sd")
    assert str(notion) == "very-strong-sd"
    assert ParticipationNotion.parse("strong-DL").extension == "dl"
    assert ParticipationNotion("participation", "dl").level is Level.PARTICIPATION


@pytest.mark.parametrize("text", ["strong", "weak-sd", "strong-pc"])
def test_notion_parse_errors(text):
    with pytest.raises(ValueError):
        ParticipationNotion.parse(text)


def test_all_notions_order():
    assert [str(n) for n in ALL_NOTIONS] == [
        "participation-sd",
        "strong-sd",
        "very-strong-sd",
        "participation-dl",
        "strong-dl",
        "very-strong-dl",
    ]


def test_mr_agent_strictly_gains():
    profile = parse_profile(PROFILES["mr-recursion"])
    verdict = audit_participation(MaximalRecursive(), profile, 2, "very-strong-sd")

    assert verdict.holds
    assert verdict.comparison is ComparisonResult.STRICTLY_PREFERS
    assert verdict.with_lottery == parse_lottery("a: 10/18, c: 8/18", "abcde")
    assert verdict.without_lottery == parse_lottery("c: 1", "abcde")
    assert verdict.improvement_exists
    assert verdict.to_dict()["notion"] == "very-strong-sd"


def test_esr_indifferent_participation():
    profile = parse_profile(PROFILES["esr-4"])
    rule = EgalitarianSimultaneousReservation()

    very_strong = audit_participation(rule, profile, 4, "very-strong-sd")
    assert not very_strong.holds
    assert very_strong.comparison is ComparisonResult.INDIFFERENT
    assert very_strong.improvement_exists
    assert sd_compare(
        profile[4], very_strong.improvement, very_strong.without_lottery
    ) is ComparisonResult.STRICTLY_PREFERS
    assert "strict SD-improvement exists" in very_strong.explanation

    assert audit_participation(rule, profile, 4, "strong-sd").holds


def test_esr_strong_participation_fails():
    profile = parse_profile(PROFILES["esr-6"])
    verdict = audit_participation(
        EgalitarianSimultaneousReservation(), profile, 2, "strong-sd"
    )

    assert not verdict.holds
    assert verdict.comparison is ComparisonResult.INCOMPARABLE


def test_serial_dictatorship_very_strong_fails():
    profile = parse_profile(PROFILES["serial-dictatorship"])
    rule = SerialDictatorship(permutation=(1, 2, 3))

    for notion in ("very-strong-sd", "very-strong-dl"):
        verdict = audit_participation(rule, profile, 3, notion)
        assert not verdict.holds
        assert verdict.comparison is ComparisonResult.INDIFFERENT
    assert audit_participation(rule, profile, 3, "strong-sd").holds


def test_constant_rule_strong_but_not_very_strong():
    profile = parse_profile("1: a,b\n2: b,a")
    verdicts = audit_all_notions(ConstantRule(), profile, 1)

    holds = {str(n): v.holds for n, v in verdicts.items()}
    assert holds == {
        "participation-sd": True,
        "strong-sd": True,
        "very-strong-sd": False,
        "participation-dl": True,
        "strong-dl": True,
        "very-strong-dl": False,
    }
    assert check_implications(verdicts) == []


def test_cache_computes_each_outcome_once():
    cache = OutcomeCache()
    profile = parse_profile(PROFILES["mr-recursion"])
    audit_all_notions(MaximalRecursive(), profile, 2, cache=cache)

    assert len(cache) == 2
    assert cache.hits == 2 * len(ALL_NOTIONS) - 2


def test_cache_separates_parameters():
    cache = OutcomeCache()
    profile = parse_profile("1: a,b\n2: b,a")
    first = cache.lottery(SerialDictatorship(permutation=(1, 2)), profile)
    second = cache.lottery(SerialDictatorship(permutation=(2, 1)), profile)

    assert first != second
    assert len(cache) == 2 and cache.hits == 0


def test_cache_separates_config():
    cache = OutcomeCache()
    profile = parse_profile("1: a,b\n2: b,a")
    cache.lottery(RandomSerialDictatorship(), profile)
    rule = RandomSerialDictatorship().set_config(max_agents=1)

    with pytest.raises(BudgetExceededError):
        cache.lottery(rule, profile)
    assert len(cache) == 1 and cache.hits == 0


def test_check_implications_reports_violations():
    verdicts = {n: SimpleNamespace(holds=True) for n in ALL_NOTIONS}
    verdicts[ParticipationNotion("strong", "dl")] = SimpleNamespace(holds=False)

    violated = check_implications(verdicts)
    assert "strong-sd holds but strong-dl does not" in violated
    assert "very-strong-dl holds but strong-dl does not" in violated
    assert "participation-dl holds but strong-dl does not" in violated


@pytest.mark.parametrize("seed", range(20))
def test_implications_hold_on_random_profiles(seed):
    profile = random_profile(2 + seed % 3, 2 + seed % 3, rng=seed)
    cache = OutcomeCache()

    for rule in (MaximalRecursive(), ProportionalPlurality(), BordaUniform()):
        for agent in profile.agents:
            verdicts = audit_all_notions(rule, profile, agent, cache=cache)
            assert check_implications(verdicts) == []


def test_audit_rejects_non_rule():
    with pytest.raises(TypeError, match="BaseSDS"):
        audit_participation(object(), parse_profile("1: a\n2: a"), 1, "strong-sd")


def test_constant_rule_is_strategyproof():
    profile = parse_profile("1: a,b,c\n2: b,a,c")
    verdict = audit_strategyproofness(ConstantRule(), profile, 1)

    assert verdict.holds and not verdict.manipulable
    assert verdict.n_misreports == 12
    assert verdict.misreport is None


def test_serial_dictatorship_is_strategyproof_on_strict_profile():
    profile = parse_profile("1: a,b,c\n2: b,a,c")
    rule = SerialDictatorship(permutation=(1, 2))

    for agent in profile.agents:
        assert audit_strategyproofness(rule, profile, agent).holds


def test_borda_is_manipulable():
    profile = parse_profile("1: a,b,c\n2: b,a,c")
    verdict = audit_strategyproofness(BordaUniform(), profile, 1)

    assert not verdict.holds and verdict.manipulable
    assert verdict.comparison is ComparisonResult.STRICTLY_PREFERS
    assert sd_compare(
        profile[1], verdict.misreport_lottery, verdict.truthful_lottery
    ) is ComparisonResult.STRICTLY_PREFERS
    assert verdict.to_dict()["misreport"] == verdict.misreport.render()


def test_strategyproofness_budget():
    profile = parse_profile("1: a,b,c,d,e,f\n2: f,e,d,c,b,a")

    with pytest.raises(BudgetExceededError, match="budget"):
        audit_strategyproofness(ConstantRule(), profile, 1)
    verdict = audit_strategyproofness(ConstantRule(), profile, 1, max_alternatives=6)
    assert verdict.holds
