# -*- coding: utf-8 -*-
"""Rule and extension checking utility."""
from .tests.test_all_objects import TestAllExtensions, TestAllObjects, TestAllRules


def check_rule(
    rule,
    raise_exceptions=False,
    tests_to_run=None,
    fixtures_to_run=None,
    tests_to_exclude=None,
    fixtures_to_exclude=None,
):
    """Run all tests on one single rule or lottery extension.

    Tests that are run:
        all generic skbase object tests in TestAllObjects
        the contract tests of TestAllRules for social decision schemes,
        or of TestAllExtensions for lottery extensions

    Parameters
    ----------
    rule : rule / extension class or instance
    raise_exceptions : bool, optional, default=False
        whether to return exceptions/failures in the results dict, or raise them

        * if False: returns exceptions in returned `results` dict
        * if True: raises exceptions as they occur

    tests_to_run : str or list of str, optional. Default = run all tests.
        Names (test/function name string) of tests to run.
    fixtures_to_run : str or list of str, optional. Default = run all tests.
        pytest test-fixture combination codes, which test-fixture combinations to run.
    tests_to_exclude : str or list of str, names of tests to exclude. default = None
    fixtures_to_exclude : str or list of str, fixtures to exclude. default = None

    Returns
    -------
    results : dict of results of the tests in self
        keys are test/fixture strings, identical as in pytest, e.g., test[fixture]
        entries are the string "PASSED" if the test passed,
        or the exception raised if the test did not pass
    """
    kwargs = dict(
        obj=rule,
        raise_exceptions=raise_exceptions,
        tests_to_run=tests_to_run,
        fixtures_to_run=fixtures_to_run,
        tests_to_exclude=tests_to_exclude,
        fixtures_to_exclude=fixtures_to_exclude,
    )
    results = TestAllObjects().run_tests(**kwargs)

    object_type = rule.get_class_tags()["object_type"]
    if object_type == "sds":
        results.update(TestAllRules().run_tests(**kwargs))
    elif object_type == "lottery_extension":
        results.update(TestAllExtensions().run_tests(**kwargs))

    return results
