# -*- coding: utf-8 -*-
"""Tests for registry lookup of rules and extensions."""
import pytest

from ..extensions import DLExtension, SDExtension
from ..lookup import all_extensions, all_rules, get_rule, rule_ids
from ..mr import MaximalRecursive
from ..rules import SerialDictatorship


def test_rule_ids():
    assert rule_ids() == ["bo", "constant", "esr", "mr", "pp", "rsd", "sd"]


def test_all_rules_names_and_tags():
    names = [name for name, _ in all_rules()]
    assert "MaximalRecursive" in names
    assert names == sorted(names)

    anonymous = all_rules(filter_tags={"anonymous": False}, return_names=False)
    assert anonymous == [SerialDictatorship]


def test_all_extensions():
    assert set(all_extensions(return_names=False)) == {SDExtension, DLExtension}
    complete = all_extensions(filter_tags={"complete": True}, return_names=False)
    assert complete == [DLExtension]


def test_get_rule():
    assert isinstance(get_rule("mr"), MaximalRecursive)

    rule = get_rule("sd", permutation=(2, 1))
    assert rule.get_params()["permutation"] == (2, 1)


def test_get_rule_unknown():
    with pytest.raises(ValueError, match="unknown rule"):
        get_rule("sml")
