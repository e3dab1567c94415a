# -*- coding: utf-8 -*-
"""Worked examples with known outcomes, replayed by ``sdskit check-examples``.

Each example runs rules, comparators or audits on a fixed profile and
compares with the known exact outcome.
"""
from dataclasses import dataclass
from fractions import Fraction

from .audit import audit_all_notions, audit_participation, check_implications
from .esr import EgalitarianSimultaneousReservation
from .extensions import ComparisonResult, dl_compare, sd_compare
from .mr import MaximalRecursive
from .preferences import Lottery, parse_lottery, parse_order, parse_profile
from .rules import BordaUniform, ConstantRule, ProportionalPlurality, SerialDictatorship

__all__ = ["PROFILES", "WorkedExample", "ExampleResult", "EXAMPLES", "get_example"]

PROFILES = {
    "mr-recursion": """\
alternatives: a, b, c, d, e
1: {a,b,c,d},e
2: {a,b},{c,d},e
3: {c,e},a,d,b
""",
    "esr-4": """\
1: a,b
2: a,b
3: b,a
4: b,a
""",
    "esr-6": """\
alternatives: a, b, c, d, e, f, g, h
1: {b,c,f},{a,d,e,g,h}
2: {a,h},{c,d,e,f,g},b
3: {b,c,d,e,h},{a,f,g}
4: {a,d},{b,c,g},e,{f,h}
5: {a,d,e,f,h},{b,g},c
6: {e,h},{a,c,f},{b,d,g}
""",
    "serial-dictatorship": """\
1: {a,b},c
2: c,b,a
3: c,b,a
""",
    "comparator": """\
1: a,b,c,d
2: {a,b},{c,d}
3: {c,d},{a,b}
""",
}


@dataclass(frozen=True)
class ExampleResult:
    """Outcome of running one worked example."""

    id: str
    passed: bool
    detail: str
    informational: bool = False

    def to_dict(self):
        """Structured representation of the result."""
        return {
            "id": self.id,
            "passed": self.passed,
            "informational": self.informational,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class WorkedExample:
    """Worked example: id, description and a check returning (passed, detail).

    Informational examples are reported but do not decide the exit code.
    """

    id: str
    description: str
    check: object
    informational: bool = False

    def run(self):
        """Run the check; exceptions count as failures."""
        try:
            passed, detail = self.check()
        except Exception as err:
            passed, detail = False, f"{type(err).__name__}: {err}"
        return ExampleResult(self.id, bool(passed), detail, self.informational)


def _profile(name):
    return parse_profile(PROFILES[name])


def _expect_lottery(actual, expected):
    expected = parse_lottery(expected, actual.alternatives)
    if actual == expected:
        return True, actual.render()
    return False, f"got {actual.render()}, expected {expected.render()}"


def _mr_recursion():
    profile = _profile("mr-recursion")
    rule = MaximalRecursive()
    passed, detail = _expect_lottery(rule.lottery(profile), "a: 10/18, c: 8/18")
    tree = rule.tree(profile)
    children = [(sorted(c.set), c.weight) for c in tree.children]
    expected = [(["a", "b"], Fraction(10, 18)), (["c"], Fraction(8, 18))]
    grandchildren = [(sorted(c.set), c.weight) for c in tree.children[0].children]
    tree_ok = children == expected and grandchildren == [(["a"], Fraction(10, 18))]
    if not tree_ok:
        detail += f"; unexpected recursion tree\n{tree.render()}"
    return passed and tree_ok, detail


def _mr_abstain():
    profile = _profile("mr-recursion").remove_agent(2)
    return _expect_lottery(MaximalRecursive().lottery(profile), "c: 1")


def _mr_participation():
    verdict = audit_participation(
        MaximalRecursive(), _profile("mr-recursion"), 2, "very-strong-sd"
    )
    passed = verdict.holds and verdict.comparison is ComparisonResult.STRICTLY_PREFERS
    return passed, verdict.explanation


def _esr_4():
    profile = _profile("esr-4")
    rule = EgalitarianSimultaneousReservation()
    with_ok, with_detail = _expect_lottery(rule.lottery(profile), "a: 1/2, b: 1/2")
    without = rule.lottery(profile.remove_agent(4))
    without_ok, without_detail = _expect_lottery(without, "a: 1/2, b: 1/2")
    return with_ok and without_ok, f"with: {with_detail}; without 4: {without_detail}"


def _esr_4_very_strong():
    profile = _profile("esr-4")
    rule = EgalitarianSimultaneousReservation()
    very_strong = audit_participation(rule, profile, 4, "very-strong-sd")
    strong = audit_participation(rule, profile, 4, "strong-sd")
    passed = not very_strong.holds and strong.holds
    detail = (
        f"very-strong-sd holds: {very_strong.holds}, "
        f"strong-sd holds: {strong.holds}"
    )
    return passed, detail


def _esr_6_strong():
    verdict = audit_participation(
        EgalitarianSimultaneousReservation(), _profile("esr-6"), 2, "strong-sd"
    )
    passed = not verdict.holds and verdict.comparison is ComparisonResult.INCOMPARABLE
    return passed, verdict.explanation


def _esr_6_lotteries():
    profile = _profile("esr-6")
    rule = EgalitarianSimultaneousReservation()
    with_ok, with_detail = _expect_lottery(
        rule.lottery(profile), "a: 1/3, b: 1/6, c: 1/6, h: 1/3"
    )
    without_ok, without_detail = _expect_lottery(
        rule.lottery(profile.remove_agent(2)),
        "a: 2/9, b: 1/9, c: 2/9, d: 1/9, e: 1/3",
    )
    return with_ok and without_ok, f"with: {with_detail}; without 2: {without_detail}"


def _serial_dictatorship():
    profile = _profile("serial-dictatorship")
    rule = SerialDictatorship(permutation=(1, 2, 3))
    expected = Lottery.degenerate(profile.alternatives, "b")
    outcomes_ok = (
        rule.lottery(profile) == expected
        and rule.lottery(profile.remove_agent(3)) == expected
    )
    verdicts = [
        audit_participation(rule, profile, 3, notion)
        for notion in ("very-strong-dl", "very-strong-sd")
    ]
    passed = outcomes_ok and not any(v.holds for v in verdicts)
    return passed, "; ".join(v.explanation for v in verdicts)


def _comparator():
    order = parse_order("a,b,c,d")
    p = parse_lottery("a: 2/3, d: 1/3", "abcd")
    q = parse_lottery("a: 1/2, c: 1/2", "abcd")
    sd = sd_compare(order, p, q)
    dl = dl_compare(order, p, q)
    passed = (
        sd is ComparisonResult.INCOMPARABLE
        and dl is ComparisonResult.STRICTLY_PREFERS
    )
    return passed, f"sd: {sd.value}, dl: {dl.value}"


def _lattice():
    rules = [
        MaximalRecursive(),
        ProportionalPlurality(),
        BordaUniform(),
        ConstantRule(),
        EgalitarianSimultaneousReservation(),
    ]
    violated = []
    n_checked = 0
    for name in ("mr-recursion", "esr-4", "serial-dictatorship", "comparator"):
        profile = _profile(name)
        for rule in rules:
            for agent in profile.agents:
                n_checked += 1
                verdicts = audit_all_notions(rule, profile, agent)
                violated += [
                    f"{name} {rule} agent {agent}: {msg}"
                    for msg in check_implications(verdicts)
                ]
    if violated:
        return False, "; ".join(violated)
    return True, f"{n_checked} (rule, profile, agent) triples consistent"


EXAMPLES = (
    WorkedExample(
        "mr-recursion",
        "MR lottery and recursion tree on the three-agent profile",
        _mr_recursion,
    ),
    WorkedExample(
        "mr-abstain", "MR outcome without agent 2 is c: 1", _mr_abstain
    ),
    WorkedExample(
        "mr-participation",
        "MR, agent 2 strictly SD-prefers participating",
        _mr_participation,
    ),
    WorkedExample("esr-4", "ESR gives a: 1/2, b: 1/2 with and without agent 4", _esr_4),
    WorkedExample(
        "esr-4-very-strong",
        "ESR violates very strong SD-participation, keeps strong SD-participation",
        _esr_4_very_strong,
    ),
    WorkedExample(
        "esr-6-strong",
        "ESR violates strong SD-participation for agent 2, outcomes incomparable",
        _esr_6_strong,
    ),
    WorkedExample(
        "esr-6-lotteries",
        "ESR reference lotteries with and without agent 2",
        _esr_6_lotteries,
        informational=True,
    ),
    WorkedExample(
        "serial-dictatorship",
        "serial dictatorship 1,2,3 violates very strong DL- and SD-participation",
        _serial_dictatorship,
    ),
    WorkedExample(
        "comparator",
        "2/3 a + 1/3 d vs 1/2 a + 1/2 c: SD-incomparable, DL-preferred",
        _comparator,
    ),
    WorkedExample(
        "lattice", "participation implications on the worked profiles", _lattice
    ),
)


def get_example(example_id):
    """Return the WorkedExample with the given id."""
    for example in EXAMPLES:
        if example.id == example_id:
            return example
    raise ValueError(
        f"unknown example {example_id!r}, must be one of {[e.id for e in EXAMPLES]}"
    )
