# -*- coding: utf-8 -*-
"""Tests for the sdskit command line."""
import json

import pytest

from ..cli import main
from ..worked_examples import EXAMPLES, PROFILES


@pytest.fixture
def profile_file(tmp_path):
    def write(name):
        path = tmp_path / f"{name}.txt"
        path.write_text(PROFILES[name])
        return str(path)

    return write


def test_compute_mr(profile_file, capsys):
    code = main(["compute", "--rule", "mr", "--profile", profile_file("mr-recursion")])

    assert code == 0
    assert capsys.readouterr().out.strip() == "a: 5/9, b: 0, c: 4/9, d: 0, e: 0"


def test_compute_mr_trace(profile_file, capsys):
    path = profile_file("mr-recursion")
    main(["compute", "--rule", "mr", "--trace", "--profile", path])

    out = capsys.readouterr().out
    assert "  {a,b} @ 5/9" in out
    assert "    a @ 5/9" in out


def test_compute_mr_tree_flag(profile_file, capsys):
    path = profile_file("mr-recursion")
    code = main(["compute", "--rule", "mr", "--tree", "--json", "--profile", path])
    data = json.loads(capsys.readouterr().out)

    assert code == 0
    assert data["tree"]["children"][0]["set"] == ["a", "b"]


def test_compute_esr_trace_json(profile_file, capsys):
    args = ["compute", "--rule", "esr", "--trace", "--json"]
    code = main(args + ["--profile", profile_file("esr-4")])
    data = json.loads(capsys.readouterr().out)

    assert code == 0
    assert data["lottery"] == {"a": "1/2", "b": "1/2"}
    assert data["trace"]["events"][-1]["kind"] == "terminate"


def test_compute_constant_decimal(profile_file, capsys):
    main(
        [
            "compute",
            "--rule",
            "constant",
            "--format",
            "decimal",
            "--profile",
            profile_file("mr-recursion"),
        ]
    )

    assert capsys.readouterr().out.strip() == (
        "a: 0.200000, b: 0.200000, c: 0.200000, d: 0.200000, e: 0.200000"
    )


def test_compute_serial_dictatorship_permutation(profile_file, capsys):
    path = profile_file("serial-dictatorship")
    main(["compute", "--rule", "sd", "--permutation", "2,1,3", "--profile", path])

    assert capsys.readouterr().out.strip() == "a: 0, b: 0, c: 1"


def test_compare(capsys):
    args = ["compare", "--order", "a,b,c,d", "--p", "a: 2/3, d: 1/3"]
    args += ["--q", "a: 1/2, c: 1/2"]

    assert main(args) == 0
    assert capsys.readouterr().out.strip() == "incomparable"
    main(args + ["--extension", "dl"])
    assert capsys.readouterr().out.strip() == "strictly_prefers"


def test_verify(tmp_path, capsys):
    path = tmp_path / "profile.txt"
    path.write_text("1: {a,b},c\n2: c,b,a\n3: c,b,a\n")
    lottery = "a: 1/6, b: 1/6, c: 2/3"

    args = ["verify", "--profile", str(path), "--lottery"]
    code = main(args + [lottery, "--property", "expost"])
    assert code == 2
    assert "a is Pareto dominated by b" in capsys.readouterr().out

    code = main(args + ["c: 1", "--property", "sd"])
    assert code == 0
    assert capsys.readouterr().out.strip() == "sd-efficient"


def test_audit_strong_violation(profile_file, capsys):
    args = ["audit", "--rule", "esr", "--profile", profile_file("esr-6")]
    code = main(args + ["--agent", "2", "--notion", "strong"])

    assert code == 2
    out = capsys.readouterr().out
    assert "agent 2 strong-sd: violated (incomparable)" in out


def test_audit_all_agents_json(profile_file, capsys):
    args = ["audit", "--rule", "mr", "--profile", profile_file("mr-recursion")]
    code = main(args + ["--all-agents", "--notion", "very-strong", "--json"])
    data = json.loads(capsys.readouterr().out)

    assert code == 0
    assert [v["agent"] for v in data["verdicts"]] == [1, 2, 3]
    assert all(v["holds"] for v in data["verdicts"])


def test_audit_sp(tmp_path, capsys):
    path = tmp_path / "profile.txt"
    path.write_text("1: a,b,c\n2: b,a,c\n")

    args = ["audit-sp", "--profile", str(path), "--agent", "1"]
    assert main(args + ["--rule", "constant"]) == 0
    assert "12 misreports" in capsys.readouterr().out
    assert main(args + ["--rule", "bo"]) == 2
    assert "misreport" in capsys.readouterr().out


def test_audit_sp_alternative_budget(tmp_path, capsys, monkeypatch):
    path = tmp_path / "profile.txt"
    path.write_text("1: a,b,c\n2: b,a,c\n")
    monkeypatch.setenv("SDSKIT_MAX_ALTERNATIVES", "2")

    code = main(["audit-sp", "--rule", "mr", "--profile", str(path), "--agent", "1"])
    assert code == 1
    assert "budget" in capsys.readouterr().err


def test_search(capsys):
    args = ["search", "--rule", "pp", "--property", "expost"]
    code = main(args + ["--min-agents", "1", "--max-agents", "2", "--max-alts", "2"])

    assert code == 2
    assert "violations, exhausted: True" in capsys.readouterr().out


def test_check_examples(capsys):
    assert main(["check-examples", "--list"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == len(EXAMPLES)

    assert main(["check-examples"]) == 0
    assert "FAIL" not in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["compute", "--rule", "mr"],
        ["audit", "--rule", "mr", "--profile", "p.txt", "--notion", "weak"],
    ],
)
def test_usage_errors_exit_1(argv):
    with pytest.raises(SystemExit) as err:
        main(argv)
    assert err.value.code == 1


def test_input_errors_return_1(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("1: a,b\n2: a\n")

    assert main(["compute", "--rule", "mr", "--profile", str(bad)]) == 1
    assert "incomplete order" in capsys.readouterr().err
    good = tmp_path / "good.txt"
    good.write_text("1: a,b\n")
    assert main(["compute", "--rule", "sml", "--profile", str(good)]) == 1
    assert "unknown rule" in capsys.readouterr().err
    assert main(["compute", "--rule", "mr", "--profile", str(tmp_path / "none")]) == 1
