# -*- coding: utf-8 -*-
"""Command line interface.

Commands: compute, compare, verify, audit, audit-sp, search, check-examples.
Exit codes: 0 success or property holds, 2 property violated, 1 usage or
input error.
"""
import argparse
import json
import logging
import os
import sys
from pathlib import Path

from .audit import ParticipationNotion, audit_participation, audit_strategyproofness
from .base import BudgetExceededError
from .efficiency import ex_post_efficient, sd_efficient
from .esr import esr
from .extensions import get_extension
from .lookup import get_rule
from .mr import mr
from .preferences import parse_lottery, parse_order, parse_profile
from .search import PROPERTIES, SearchSpec, search
from .worked_examples import EXAMPLES

__all__ = ["main", "build_parser", "check_examples"]

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATED = 2

ENV_MAX_AGENTS = "SDSKIT_MAX_AGENTS"
ENV_MAX_ALTERNATIVES = "SDSKIT_MAX_ALTERNATIVES"


class _ArgumentParser(argparse.ArgumentParser):
    """Argument parser exiting with code 1 on usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _env_int(name, default):
    value = os.environ.get(name)
    if value is None:
        return default
    try:
        return int(value)
    except ValueError:
        raise ValueError(
            f"environment variable {name} must be an int, found {value!r}"
        ) from None


def _read_profile(path):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_profile(text)


def _parse_ints(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(
            f"expected comma separated agent ids, found {text!r}"
        ) from None


def _parse_shard(text):
    k, sep, K = text.partition("/")
    try:
        return int(k), int(K)
    except ValueError:
        raise ValueError(f"shard must look like k/K, found {text!r}") from None


def _make_rule(args):
    params = {}
    if getattr(args, "permutation", None):
        params["permutation"] = _parse_ints(args.permutation)
    rule = get_rule(args.rule, **params)
    rule.set_config(max_agents=_env_int(ENV_MAX_AGENTS, 10))
    return rule


def _emit(args, data, text):
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _cmd_compute(args):
    profile = _read_profile(args.profile)
    rule = _make_rule(args)
    lottery = rule.lottery(profile)
    data = {"rule": str(rule), "lottery": lottery.to_dict()}
    lines = [lottery.render(args.format)]
    if args.trace:
        rule_id = rule.get_tag("rule_id")
        if rule_id == "mr":
            tree = mr(profile)[1]
            data["tree"] = tree.to_dict()
            lines.append(tree.render())
        elif rule_id == "esr":
            trace = esr(profile)[1]
            data["trace"] = trace.to_dict()
            lines.append(trace.render())
        else:
            logger.info("rule %s has no trace", rule_id)
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def _cmd_compare(args):
    if args.order is not None:
        order = parse_order(args.order)
    elif args.profile is not None and args.agent is not None:
        order = _read_profile(args.profile)[args.agent]
    else:
        raise ValueError("compare needs --order, or --profile with --agent")
    p = parse_lottery(args.p, order.alternatives)
    q = parse_lottery(args.q, order.alternatives)
    result = get_extension(args.extension).compare(order, p, q)
    data = {
        "order": order.render(),
        "extension": args.extension,
        "p": p.to_dict(),
        "q": q.to_dict(),
        "comparison": result.value,
    }
    _emit(args, data, result.value)
    return EXIT_OK


def _cmd_verify(args):
    profile = _read_profile(args.profile)
    p = parse_lottery(args.lottery, profile.alternatives)
    check = ex_post_efficient if args.property == "expost" else sd_efficient
    verdict = check(profile, p)
    if verdict.efficient:
        text = f"{args.property}-efficient"
    elif args.property == "expost":
        dominated, dominator = verdict.witness
        text = f"not expost-efficient: {dominated} is Pareto dominated by {dominator}"
    else:
        text = f"not sd-efficient: dominated by {verdict.witness.render(args.format)}"
    _emit(args, {"property": args.property, **verdict.to_dict()}, text)
    return EXIT_OK if verdict.efficient else EXIT_VIOLATED


def _render_verdict(verdict, fmt):
    status = "holds" if verdict.holds else "violated"
    return "\n".join(
        [
            f"agent {verdict.agent} {verdict.notion}: {status} "
            f"({verdict.comparison.value})",
            f"  with:    {verdict.with_lottery.render(fmt)}",
            f"  without: {verdict.without_lottery.render(fmt)}",
            f"  {verdict.explanation}",
        ]
    )


def _cmd_audit(args):
    profile = _read_profile(args.profile)
    rule = _make_rule(args)
    notion = ParticipationNotion(args.notion, args.extension)
    if args.all_agents:
        agents = profile.agents
    elif args.agent is not None:
        agents = (args.agent,)
    else:
        raise ValueError("audit needs --agent or --all-agents")
    verdicts = [audit_participation(rule, profile, agent, notion) for agent in agents]
    _emit(
        args,
        {"rule": str(rule), "verdicts": [v.to_dict() for v in verdicts]},
        "\n".join(_render_verdict(v, args.format) for v in verdicts),
    )
    return EXIT_OK if all(v.holds for v in verdicts) else EXIT_VIOLATED


def _cmd_audit_sp(args):
    profile = _read_profile(args.profile)
    rule = _make_rule(args)
    verdict = audit_strategyproofness(
        rule,
        profile,
        args.agent,
        args.extension,
        max_alternatives=_env_int(ENV_MAX_ALTERNATIVES, 5),
    )
    ext = args.extension.upper()
    lines = [
        f"agent {args.agent} {ext}-strategyproof: "
        f"{'holds' if verdict.holds else 'violated'} "
        f"({verdict.n_misreports} misreports, manipulable: {verdict.manipulable})",
        f"  truthful: {verdict.truthful_lottery.render(args.format)}",
    ]
    if verdict.misreport is not None:
        lines += [
            f"  misreport {verdict.misreport.render()}: "
            f"{verdict.misreport_lottery.render(args.format)} "
            f"({verdict.comparison.value})",
        ]
    _emit(args, {"rule": str(rule), **verdict.to_dict()}, "\n".join(lines))
    return EXIT_OK if verdict.holds else EXIT_VIOLATED


def _cmd_search(args):
    spec = SearchSpec(
        rule=_make_rule(args),
        property=args.property,
        extension=args.extension,
        n_range=(args.min_agents, args.max_agents),
        m_range=(args.min_alts, args.max_alts),
        canonicalize=False if args.no_canonicalize else None,
        budget=args.budget,
        shard=_parse_shard(args.shard),
        max_alternatives=_env_int(ENV_MAX_ALTERNATIVES, 5),
    )
    report = search(spec)
    lines = [
        f"checked {report.instances_checked} profiles, "
        f"{len(report.violations)} violations, exhausted: {report.exhausted}"
    ]
    for violation in report.violations[: args.show]:
        agent = "" if violation.agent is None else f" agent {violation.agent}"
        lines.append(f"- {violation.rule}{agent}:")
        lines += ["    " + line for line in violation.profile.render().splitlines()]
    for profile, message in report.errors:
        lines.append(f"! {message}")
    _emit(args, report.to_dict(), "\n".join(lines))
    return EXIT_VIOLATED if report.violations else EXIT_OK


def check_examples(list_only=False, as_json=False):
    """Run all worked examples and print one line per example.

    Parameters
    ----------
    list_only : bool, default False
        print example ids and descriptions without running them
    as_json : bool, default False

    Returns
    -------
    int, exit code: 0 iff every non-informational example passed
    """
    if list_only:
        if as_json:
            listing = [{"id": e.id, "description": e.description} for e in EXAMPLES]
            print(json.dumps(listing))
        else:
            for example in EXAMPLES:
                print(f"{example.id}: {example.description}")
        return EXIT_OK

    results = [example.run() for example in EXAMPLES]
    if as_json:
        print(json.dumps([r.to_dict() for r in results], indent=2))
    else:
        for r in results:
            status = "PASS" if r.passed else ("INFO" if r.informational else "FAIL")
            print(f"{status} {r.id}: {r.detail}")
    failed = [r for r in results if not r.passed and not r.informational]
    return EXIT_OK if not failed else EXIT_VIOLATED


def _cmd_check_examples(args):
    return check_examples(list_only=args.list, as_json=args.json)


def build_parser():
    """Build the argparse parser of the sdskit command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("fraction", "decimal"), default="fraction",
        help="exact reduced fractions, or 6 decimal digits",
    )
    common.add_argument("--json", action="store_true", help="structured output")
    common.add_argument("--verbose", "-v", action="store_true", help="debug logging")

    ruled = argparse.ArgumentParser(add_help=False)
    ruled.add_argument("--rule", required=True, help="rule id, e.g. mr, esr, rsd")
    ruled.add_argument(
        "--permutation", help="agent order of serial dictatorship, e.g. 1,2,3"
    )

    extension = argparse.ArgumentParser(add_help=False)
    extension.add_argument("--extension", choices=("sd", "dl"), default="sd")

    parser = _ArgumentParser(
        prog="sdskit", description="Randomized social choice with exact lotteries."
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("compute", parents=[common, ruled], help="rule outcome")
    p.add_argument("--profile", required=True, help="profile file, - for stdin")
    p.add_argument(
        "--trace", "--tree", action="store_true", help="MR tree or ESR events"
    )
    p.set_defaults(func=_cmd_compute)

    p = commands.add_parser(
        "compare", parents=[common, extension], help="compare two lotteries"
    )
    p.add_argument("--order", help='agent order, e.g. "a,b,{c,d}"')
    p.add_argument("--profile", help="profile file, - for stdin")
    p.add_argument("--agent", type=int)
    p.add_argument("--p", required=True, help='lottery, e.g. "a: 1/2, b: 1/2"')
    p.add_argument("--q", required=True, help="lottery compared against")
    p.set_defaults(func=_cmd_compare)

    p = commands.add_parser("verify", parents=[common], help="efficiency of a lottery")
    p.add_argument("--profile", required=True)
    p.add_argument("--lottery", required=True)
    p.add_argument("--property", choices=("expost", "sd"), required=True)
    p.set_defaults(func=_cmd_verify)

    p = commands.add_parser(
        "audit", parents=[common, ruled, extension], help="participation audit"
    )
    p.add_argument("--profile", required=True)
    agents = p.add_mutually_exclusive_group(required=True)
    agents.add_argument("--agent", type=int)
    agents.add_argument("--all-agents", action="store_true")
    p.add_argument(
        "--notion", choices=("participation", "strong", "very-strong"), required=True
    )
    p.set_defaults(func=_cmd_audit)

    p = commands.add_parser(
        "audit-sp", parents=[common, ruled, extension], help="strategyproofness audit"
    )
    p.add_argument("--profile", required=True)
    p.add_argument("--agent", type=int, required=True)
    p.set_defaults(func=_cmd_audit_sp)

    p = commands.add_parser(
        "search", parents=[common, ruled, extension], help="exhaustive property search"
    )
    p.add_argument("--property", choices=PROPERTIES, required=True)
    p.add_argument("--min-agents", type=int, default=2)
    p.add_argument("--max-agents", type=int, default=3)
    p.add_argument("--min-alts", type=int, default=2)
    p.add_argument("--max-alts", type=int, default=3)
    p.add_argument("--shard", default="1/1", help="k/K, check every K-th profile")
    p.add_argument("--budget", type=int, help="maximum number of profiles")
    p.add_argument("--show", type=int, default=5, help="violations printed")
    p.add_argument(
        "--no-canonicalize", action="store_true",
        help="enumerate order tuples even for anonymous rules",
    )
    p.set_defaults(func=_cmd_search)

    p = commands.add_parser(
        "check-examples", parents=[common], help="replay the worked examples"
    )
    p.add_argument("--list", action="store_true", help="list example ids only")
    p.set_defaults(func=_cmd_check_examples)

    return parser


def main(argv=None):
    """Run the sdskit command line, return the exit code."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except (ValueError, OSError, BudgetExceededError) as err:
        print(f"sdskit {args.command}: error: {err}", file=sys.stderr)
        return EXIT_ERROR
