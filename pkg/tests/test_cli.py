"""End-to-end tests for the command-line interface."""
from __future__ import annotations

import json
import os

import pytest

from srlaguerre.cli import main


def run_cli(capsys, *argv: str) -> tuple[int, str]:
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_enumerate_histories_n2(capsys):
    code, out = run_cli(capsys, "enumerate", "--n", "2", "--kind", "histories")
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[-1] == "count: 2"
    assert sorted(lines[:-1]) == ["EE/0,0", "NS/0,1"]


def test_enumerate_perms_n1(capsys):
    code, out = run_cli(capsys, "enumerate", "--n", "1", "--kind", "perms")
    assert code == 0
    assert out.strip().splitlines() == ["1", "count: 1"]


def test_enumerate_count_is_factorial(capsys):
    code, out = run_cli(capsys, "enumerate", "--n", "6", "--kind", "histories")
    assert code == 0
    assert out.strip().splitlines()[-1] == "count: 720"


def test_enumerate_json_and_csv_counts(capsys):
    code, out = run_cli(capsys, "enumerate", "--n", "2", "--kind", "perms",
                        "--format", "json")
    assert code == 0
    assert json.loads(out.strip().splitlines()[-1]) == {"count": 2}
    code, out = run_cli(capsys, "enumerate", "--n", "2", "--kind", "perms",
                        "--format", "csv")
    assert code == 0
    assert out.strip().splitlines()[-1] == "count,2"


def test_enumerate_bad_args(capsys):
    assert run_cli(capsys, "enumerate", "--n", "0", "--kind", "perms")[0] == 2
    assert run_cli(capsys, "enumerate", "--n", "99", "--kind", "perms")[0] == 2


def test_max_n_env_override(capsys):
    os.environ["LAGUERRE_MAX_N"] = "3"
    try:
        assert run_cli(capsys, "enumerate", "--n", "4", "--kind", "perms")[0] == 2
        assert run_cli(capsys, "enumerate", "--n", "3", "--kind", "perms")[0] == 0
    finally:
        del os.environ["LAGUERRE_MAX_N"]


def test_map_examples(capsys):
    code, out = run_cli(capsys, "map", "--via", "rho", "6,7,1,3,9,5,4,8,2")
    assert (code, out.strip()) == (0, "9,3,7,6,2,8,1,4,5")
    code, out = run_cli(capsys, "map", "--via", "mfs", "5,9,6,1,3,7,4,2,8")
    assert (code, out.strip()) == (0, "6,9,5,1,4,7,3,2,8")
    code, out = run_cli(capsys, "map", "--via", "fv", "6,1,8,7,4,2,5,9,3")
    assert (code, out.strip()) == (0, "NNNDESDSS/0,0,0,2,1,3,2,2,1")
    code, out = run_cli(capsys, "map", "--via", "fv-inv",
                        "NNNDESDSS/0,0,0,2,1,3,2,2,1")
    assert (code, out.strip()) == (0, "6,1,8,7,4,2,5,9,3")


def test_map_accepts_bare_digit_strings(capsys):
    code, out = run_cli(capsys, "map", "--via", "r", "618742593")
    assert (code, out.strip()) == (0, "3,9,5,2,4,7,8,1,6")


def test_map_error_codes(capsys):
    # Unparseable input -> 3; parseable but invariant-violating -> 4.
    assert run_cli(capsys, "map", "--via", "fv", "not-a-perm")[0] == 3
    assert run_cli(capsys, "map", "--via", "fv", "1,1,2")[0] == 4
    assert run_cli(capsys, "map", "--via", "fv-inv", "NX/0,0")[0] == 3
    assert run_cli(capsys, "map", "--via", "fv-inv", "NS/0,0")[0] == 4


def test_stat_examples(capsys):
    code, out = run_cli(capsys, "stat", "--perm", "9,4,7,6,1,2,8,5,3",
                        "--stat", "den")
    assert (code, out.strip()) == (0, "23")
    code, out = run_cli(capsys, "stat", "--perm", "1,2,3", "--stat", "maj")
    assert (code, out.strip()) == (0, "0")
    code, out = run_cli(capsys, "stat", "--perm", "6,1,8,7,4,2,5,9,3",
                        "--stat", "mak")
    assert (code, out.strip()) == (0, "23")


def test_stat_all_is_json(capsys):
    code, out = run_cli(capsys, "stat", "--perm", "6,1,8,7,4,2,5,9,3",
                        "--stat", "all")
    assert code == 0
    record = json.loads(out)
    assert set(record) == {"linear", "cyclic", "shifted"}


def test_stat_unknown_name(capsys):
    assert run_cli(capsys, "stat", "--perm", "1,2", "--stat", "bogus")[0] == 5


def test_distribution_examples(capsys):
    code, out = run_cli(capsys, "distribution", "--n", "3", "--stats", "inv")
    assert (code, out.strip()) == (0, "1 + 2 q + 2 q^2 + q^3")
    code, out = run_cli(capsys, "distribution", "--n", "3", "--stats", "des")
    assert (code, out.strip()) == (0, "1 + 4 q + q^2")
    assert run_cli(capsys, "distribution", "--n", "0", "--stats", "des")[0] == 2


def test_verify_pass_lines(capsys):
    code, out = run_cli(capsys, "verify", "--claim", "thm3.2-involution",
                        "--n-max", "5")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 5
    assert all(": pass" in line for line in lines)


def test_verify_json_report_schema(capsys):
    code, out = run_cli(capsys, "verify", "--claim", "lem4.14", "--n-max", "4",
                        "--format", "json")
    assert code == 0
    for line in out.strip().splitlines():
        report = json.loads(line)
        assert report["status"] == "pass"
        assert {"claim", "n", "status", "checked", "millis"} <= set(report)


def test_verify_unknown_claim(capsys):
    assert run_cli(capsys, "verify", "--claim", "nope", "--n-max", "3")[0] == 5


def test_verify_threads_deterministic(capsys):
    _, single = run_cli(capsys, "verify", "--claim", "cor3.3", "--n-max", "5",
                        "--threads", "1")
    _, multi = run_cli(capsys, "verify", "--claim", "cor3.3", "--n-max", "5",
                       "--threads", "4")
    strip = lambda text: [line.split(",")[0].split(" (")[0]
                          for line in text.strip().splitlines()]
    assert strip(single) == strip(multi)


def test_moments(capsys):
    values = lambda text: [int(line.split("=")[1]) for line in
                           text.strip().splitlines()]
    code, out = run_cli(capsys, "moments", "--count", "5")
    assert code == 0
    assert values(out) == [1, 1, 2, 6, 24]
    code, out = run_cli(capsys, "moments", "--alpha", "1", "--count", "4")
    assert code == 0
    assert values(out) == [1, 2, 6, 24]
