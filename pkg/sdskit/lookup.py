# -*- coding: utf-8 -*-
"""Registry lookup methods.

This module exports the following methods for registry lookup:

all_rules(filter_tags, exclude_rules, ...)
    lookup and filtering of social decision schemes

all_extensions(filter_tags, ...)
    lookup and filtering of lottery extensions

get_rule(rule_id, **params)
    construct a rule from its rule_id tag

rule_ids()
    the rule_id tags of all rules
"""
from pathlib import Path

from skbase.lookup import all_objects

from .base import BaseLotteryExtension, BaseSDS

__all__ = ["all_rules", "all_extensions", "get_rule", "rule_ids"]

MODULES_TO_IGNORE = ("tests", "__main__")
ROOT = str(Path(__file__).parent)  # package root directory
CLASS_LOOKUP = {"sds": BaseSDS, "lottery_extension": BaseLotteryExtension}


def _all(object_types, filter_tags, exclude, return_names, as_dataframe, return_tags):
    return all_objects(
        object_types=object_types,
        filter_tags=filter_tags,
        exclude_objects=exclude,
        return_names=return_names,
        as_dataframe=as_dataframe,
        return_tags=return_tags,
        suppress_import_stdout=True,
        package_name="sdskit",
        path=ROOT,
        modules_to_ignore=MODULES_TO_IGNORE,
        class_lookup=CLASS_LOOKUP,
    )


def all_rules(
    filter_tags=None,
    exclude_rules=None,
    return_names=True,
    as_dataframe=False,
    return_tags=None,
):
    """Get a list of all social decision schemes in the package.

    Parameters
    ----------
    filter_tags : dict of (str or list of str), optional (default=None)
        subsets the returned rules, each key/value pair is a statement in
        conjunction: tag `key` must equal `value`, or be in set(value)
    exclude_rules : str, list of str, optional (default=None)
        class names of rules to exclude
    return_names : bool, optional (default=True)
        whether the class name is included in the return
    as_dataframe : bool, optional (default=False)
        if True, return a pandas.DataFrame with columns "names", "objects"
        and one column per tag in return_tags
    return_tags : str or list of str, optional (default=None)
        names of tags whose values are returned with each rule

    Returns
    -------
    list of classes, list of tuples (name, class, tags...) or pd.DataFrame,
    in alphabetical order of class name
    """
    return _all(
        "sds", filter_tags, exclude_rules, return_names, as_dataframe, return_tags
    )


def all_extensions(
    filter_tags=None,
    return_names=True,
    as_dataframe=False,
    return_tags=None,
):
    """Get a list of all lottery extensions in the package, see `all_rules`."""
    return _all(
        "lottery_extension", filter_tags, None, return_names, as_dataframe, return_tags
    )


def rule_ids():
    """Sorted list of the rule_id tags of all rules."""
    ids = (cls.get_class_tag("rule_id") for cls in all_rules(return_names=False))
    return sorted(rule_id for rule_id in ids if rule_id is not None)


def get_rule(rule_id, **params):
    """Construct the rule with the given rule_id tag.

    Parameters
    ----------
    rule_id : str, e.g. "mr", "esr", "sd"
    **params : parameters passed to the rule's constructor

    Returns
    -------
    BaseSDS instance

    Raises
    ------
    ValueError
        if no rule has the given rule_id
    """
    found = all_rules(filter_tags={"rule_id": rule_id}, return_names=False)
    if not found:
        raise ValueError(f"unknown rule {rule_id!r}, must be one of {rule_ids()}")
    return found[0](**params)
