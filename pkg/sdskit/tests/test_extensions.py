# -*- coding: utf-8 -*-
"""Tests for the SD and DL lottery extensions."""
import pytest

from ..extensions import (
    ComparisonResult,
    dl_compare,
    exists_strict_improvement,
    get_extension,
    sd_compare,
)
from ..preferences import Lottery, parse_lottery, parse_order
from ..search import random_lottery, random_weak_order

PREFERS = ComparisonResult.STRICTLY_PREFERS
DISPREFERRED = ComparisonResult.STRICTLY_DISPREFERRED
INDIFFERENT = ComparisonResult.INDIFFERENT
INCOMPARABLE = ComparisonResult.INCOMPARABLE


def test_sd_incomparable_dl_decides():
    """2/3 a + 1/3 d against 1/2 a + 1/2 c for the order a,b,c,d."""
    order = parse_order("a,b,c,d")
    p = parse_lottery("a: 2/3, d: 1/3", "abcd")
    q = parse_lottery("a: 1/2, c: 1/2", "abcd")

    assert sd_compare(order, p, q) is INCOMPARABLE
    assert dl_compare(order, p, q) is PREFERS
    assert dl_compare(order, q, p) is DISPREFERRED


def test_compare_on_classes_only():
    """Moving mass within an indifference class leaves the agent indifferent."""
    order = parse_order("{a,b},c")
    p = parse_lottery("a: 1/2, c: 1/2", "abc")
    q = parse_lottery("b: 1/2, c: 1/2", "abc")

    assert sd_compare(order, p, q) is INDIFFERENT
    assert dl_compare(order, p, q) is INDIFFERENT


def test_sd_strict():
    order = parse_order("a,b,c")
    p = parse_lottery("a: 1/2, b: 1/2", "abc")
    q = parse_lottery("a: 1/2, c: 1/2", "abc")

    assert sd_compare(order, p, q) is PREFERS
    assert sd_compare(order, q, p) is DISPREFERRED


def test_domain_mismatch_raises():
    with pytest.raises(ValueError, match="does not match"):
        sd_compare(parse_order("a,b"), parse_lottery("a: 1"), parse_lottery("a: 1"))


def test_exists_strict_improvement():
    order = parse_order("{a,b},c")

    q = parse_lottery("a: 1/2, b: 1/2", "abc")
    exists, witness = exists_strict_improvement(order, q)
    assert not exists and witness is None

    q = parse_lottery("b: 1/4, c: 3/4", "abc")
    exists, witness = exists_strict_improvement(order, q, ext="dl")
    assert exists
    assert witness == parse_lottery("a: 3/4, b: 1/4", "abc")
    assert sd_compare(order, witness, q) is PREFERS


def test_get_extension():
    assert get_extension("SD").get_tag("extension_id") == "sd"
    assert get_extension("dl").get_tag("complete")
    with pytest.raises(ValueError, match="extension must be one of"):
        get_extension("pc")


def test_flip_and_weakly_prefers():
    assert PREFERS.flip() is DISPREFERRED
    assert INCOMPARABLE.flip() is INCOMPARABLE
    assert PREFERS.weakly_prefers and INDIFFERENT.weakly_prefers
    assert not INCOMPARABLE.weakly_prefers


def test_dl_refines_sd_on_random_samples():
    """DL is complete, keeps SD-strict and SD-indifferent comparisons."""
    n_strict = 0
    for seed in range(10_000):
        alternatives = "abcd"[: 2 + seed % 3]
        order = random_weak_order(alternatives, rng=seed)
        p = random_lottery(alternatives, rng=[seed, 1])
        q = random_lottery(alternatives, rng=[seed, 2])
        sd, dl = sd_compare(order, p, q), dl_compare(order, p, q)

        assert dl is not INCOMPARABLE
        if sd in (PREFERS, DISPREFERRED, INDIFFERENT):
            assert dl is sd
        n_strict += sd is PREFERS

    assert n_strict > 0


def test_dl_is_transitive_on_random_triples():
    for seed in range(3_000):
        alternatives = "abcd"[: 2 + seed % 3]
        order = random_weak_order(alternatives, rng=seed)
        p, q, r = (random_lottery(alternatives, rng=[seed, k]) for k in range(3))
        pq, qr, pr = (dl_compare(order, x, y) for x, y in [(p, q), (q, r), (p, r)])

        if pq.weakly_prefers and qr.weakly_prefers:
            assert pr.weakly_prefers
        if pq is PREFERS and qr is PREFERS:
            assert pr is PREFERS


@pytest.mark.parametrize("ext", ["sd", "dl"])
@pytest.mark.parametrize("seed", range(5))
def test_no_strict_improvement_means_nothing_beats_q(ext, seed):
    """Mass on the top class cannot be improved on by any lottery."""
    alternatives = "abcd"[: 2 + seed % 3]
    order = random_weak_order(alternatives, rng=seed)
    q = Lottery.uniform(alternatives, over=order.classes[0])

    exists, witness = exists_strict_improvement(order, q, ext=ext)
    assert not exists and witness is None
    compare = sd_compare if ext == "sd" else dl_compare
    for k in range(1_000):
        p = random_lottery(alternatives, rng=[seed, k])
        assert compare(order, p, q) is not PREFERS


def test_strict_improvement_found_off_the_top_class():
    for seed in range(200):
        alternatives = "abcd"[: 2 + seed % 3]
        order = random_weak_order(alternatives, rng=seed)
        q = random_lottery(alternatives, rng=[seed, 7])

        exists, witness = exists_strict_improvement(order, q)
        off_top = any(q[a] > 0 for a in alternatives if a not in order.classes[0])
        assert exists == off_top
        if exists:
            assert sd_compare(order, witness, q) is PREFERS
