# -*- coding: utf-8 -*-
"""Tests for weak orders, profiles, lotteries and their text grammar."""
from fractions import Fraction

import pytest

from ..preferences import (
    Lottery,
    Profile,
    ProfileSyntaxError,
    WeakOrder,
    iter_weak_orders,
    max_set,
    parse_lottery,
    parse_order,
    parse_profile,
    restrict,
)


def test_parse_profile_classes():
    """Braces group indifferent alternatives, bare names are singletons."""
    profile = parse_profile("1: {a,b},{c}\n2: c,b,a")

    assert profile.agents == (1, 2)
    assert profile[1] == WeakOrder([{"a", "b"}, {"c"}])
    assert profile[2] == WeakOrder(["c", "b", "a"])
    assert profile.alternatives == frozenset("abc")


def test_parse_profile_header_comments_and_render():
    text = "# example\nalternatives: a, b, c\n\n1: a, {b, c}  # trailing\n3: c,b,a\n"
    profile = parse_profile(text)

    assert profile.agents == (1, 3)
    assert profile.render() == "alternatives: a, b, c\n1: a,{b,c}\n3: c,b,a\n"
    assert parse_profile(profile.render()) == profile


@pytest.mark.parametrize(
    "text, message, line",
    [
        ("1: a,b\n1: b,a", "duplicate agent id", 2),
        ("1: a,{a,b}", "duplicate alternative in order", 1),
        ("alternatives: a, b, c\n1: a,b", "incomplete order", 2),
        ("1: a,b\n2: a", "incomplete order", 2),
        ("1: a,,b", "expected an alternative", 1),
        ("x: a,b", "expected an agent id", 1),
        ("1: a,b\nalternatives: a, b", "must precede", 2),
    ],
)
def test_parse_profile_errors(text, message, line):
    """Malformed profiles raise ProfileSyntaxError with the line number."""
    with pytest.raises(ProfileSyntaxError, match=message) as err:
        parse_profile(text)
    assert err.value.line == line


def test_syntax_error_is_value_error():
    with pytest.raises(ValueError):
        parse_order("{a,b")


def test_restrict_and_max_set():
    order = parse_order("{c,e},a,d,b")

    assert restrict(order, {"a", "b"}) == WeakOrder(["a", "b"])
    assert max_set(parse_order("{a,b,c,d},e"), set("abcde")) == frozenset("abcd")
    assert max_set(parse_order("c,b,a"), {"a", "b"}) == frozenset("b")


def test_restrict_empty_set_raises():
    with pytest.raises(ValueError):
        restrict(parse_order("a,b"), set())


def test_order_predicates():
    order = parse_order("{a,b},c,d")

    assert order.rank("c") == 1
    assert order.weakly_prefers("a", "b") and order.weakly_prefers("b", "a")
    assert order.strictly_prefers("b", "d")
    assert not order.is_strict
    assert not order.is_dichotomous
    assert parse_order("{a,b},{c,d}").is_dichotomous
    assert list(order.prefixes()) == [
        frozenset("ab"),
        frozenset("abc"),
        frozenset("abcd"),
    ]


def test_weak_order_rejects_duplicates():
    with pytest.raises(ValueError, match="duplicate alternative in order"):
        WeakOrder([{"a", "b"}, {"b"}])


def test_remove_agent():
    profile = parse_profile("1: a,b\n2: b,a\n3: {a,b}")
    without = profile.remove_agent(2)

    assert without.agents == (1, 3)
    assert without[3] == profile[3]
    assert without.add_agent(2, profile[2]) == profile

    with pytest.raises(ValueError, match="unknown agent"):
        profile.remove_agent(7)
    with pytest.raises(ValueError, match="last agent"):
        parse_profile("1: a,b").remove_agent(1)


def test_profile_rejects_incomplete_orders():
    with pytest.raises(ValueError, match="incomplete order"):
        Profile({1: WeakOrder(["a", "b"]), 2: WeakOrder(["a"])})


def test_lottery_validation():
    with pytest.raises(ValueError, match="sum to 1"):
        Lottery({"a": Fraction(1, 2), "b": Fraction(1, 3)})
    with pytest.raises(ValueError, match="negative"):
        Lottery({"a": 2, "b": -1})
    with pytest.raises(TypeError):
        Lottery({"a": 0.5, "b": 0.5})


def test_lottery_render_reduced_and_decimal():
    lottery = Lottery({"c": Fraction(8, 18), "a": Fraction(10, 18), "b": 0})

    assert lottery.render() == "a: 5/9, b: 0, c: 4/9"
    assert lottery.render("decimal") == "a: 0.555556, b: 0.000000, c: 0.444444"
    assert lottery.support == frozenset("ac")
    assert lottery.mass({"a", "b"}) == Fraction(5, 9)


def test_lottery_render_parses_back():
    lottery = Lottery({"a": Fraction(1, 3), "b": Fraction(1, 6), "h": Fraction(1, 2)})

    assert parse_lottery(lottery.render()) == lottery


def test_parse_lottery_with_domain():
    lottery = parse_lottery("a: 1/2, c: 1/2", "abcd")

    assert lottery.alternatives == frozenset("abcd")
    assert lottery["b"] == 0
    with pytest.raises(ValueError, match="unknown alternatives"):
        parse_lottery("z: 1", "ab")
    with pytest.raises(ProfileSyntaxError, match="malformed probability"):
        parse_lottery("a: half, b: 1/2")


def test_class_masses():
    lottery = parse_lottery("a: 1/2, c: 1/3, d: 1/6", "abcd")

    masses = lottery.class_masses(parse_order("{a,b},{c,d}"))
    assert masses == (Fraction(1, 2), Fraction(1, 2))
    with pytest.raises(ValueError, match="does not match"):
        lottery.class_masses(parse_order("a,b"))


def test_lottery_to_series():
    lottery = Lottery.uniform("cab")

    series = lottery.to_series()
    assert list(series.index) == ["a", "b", "c"]
    assert series["b"] == Fraction(1, 3)


@pytest.mark.parametrize("m, count", [(1, 1), (2, 3), (3, 13), (4, 75), (5, 541)])
def test_iter_weak_orders_counts(m, count):
    """Weak orders are counted by the ordered Bell numbers."""
    orders = list(iter_weak_orders("abcde"[:m]))

    assert len(orders) == count
    assert len(set(orders)) == count


def test_iter_weak_orders_canonical_order():
    orders = [o.render() for o in iter_weak_orders("ba")]

    assert orders == ["a,b", "b,a", "{a,b}"]
