import json
import os
import subprocess

import pytest

import abacore


def test_hook_lengths_and_degree():
    assert abacore.hook_lengths([7, 5, 4, 1]) == [
        1, 1, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 7, 7, 8, 10,
    ]
    assert abacore.character_degree([7, 5, 4, 1]) == 1050192
    assert abacore.character_degree([]) == 1
    assert abacore.character_degree([2, 1]) == 2


def test_cores_and_quotients():
    assert abacore.partition_core([7, 5, 4, 1], 3) == [4, 2, 1, 1]
    assert abacore.partition_quotient([7, 5, 4, 1], 3) == [[1], [], [1, 1]]
    assert abacore.beta_partition([11, 8, 6, 2, 0]) == [7, 5, 4, 1]
    assert abacore.beta_core([11, 8, 6, 2, 0], 3) == [8, 5, 3, 2, 0]
    assert abacore.beta_quotient([11, 8, 6, 2, 0], 3) == [8, 6, 5, 4, 1, 0]


def test_symbol_operations():
    s = [[2, 0], [], [3, 2, 0]]
    assert abacore.symbol_partition(s) == [7, 5, 4, 1]
    assert abacore.symbol_quotient(s) == [[2, 0], [1, 0], [2, 1]]
    assert abacore.symbol_core(s) == [[1, 0], [], [2, 1, 0]]
    lengths = abacore.symbol_lengths(s, "(0,1,2;3)")
    assert lengths == ["1", "1", "1", "1", "2", "2", "3", "3", "4", "4",
                       "5", "5", "6", "7", "7", "8", "10"]
    assert abacore.signed_quotient_lengths(s, "(0,1,2;3)") == [
        "1", "3", "3", "5", "5", "6", "7", "8", "10",
    ]
    assert abacore.check_decomposition(s, "(1/2,0,3;2)")


def test_split_and_twist():
    s = [[9, 7, 4, 2], [3, 1, 0]]
    assert abacore.ell_core(s, 3) == [[4, 2, 1, 0], [3, 1, 0]]
    assert abacore.ell_core(s, 3, 1) == [[4, 3, 2, 1, 0], [1, 0]]
    assert abacore.ell_quotient(s, 3, 1) == [[1], [2], [2], [0], [0], [0]]
    assert abacore.delta_for_split(s, 3) == "(3,6,7,4,5,2;3)"
    assert abacore.check_split_identity(s, 3)
    assert abacore.check_twisted_identity(s, 3, 1)


def test_degree_factorization():
    f = abacore.degree_factorization([7, 5, 4, 1], 3)
    assert f["symmetric_factor"] == 8821612800
    assert f["quotient_product"] == 756000
    assert f["core_degree"] == 90
    assert f["degree"] == 1050192


def test_validation_errors():
    with pytest.raises(ValueError):
        abacore.beta_partition([1, 1])
    with pytest.raises(ValueError):
        abacore.partition_core([1, 2], 3)
    with pytest.raises(RuntimeError):
        abacore.symbol_lengths([[0]], "not a tuple")


def test_examples_round_trip():
    assert abacore.example_ids() == ["1.15", "4.8", "5.1", "5.3", "5.6"]
    text = abacore.run_example("1.15")
    assert "check p(S) = p(X): pass" in text
    doc = json.loads(abacore.run_example_json("5.3"))
    assert doc["id"] == "5.3"
    assert all(doc["checks"].values())


cli = os.environ.get("ABACORE_CLI")


@pytest.mark.skipif(not cli, reason="ABACORE_CLI not set")
def test_cli_exit_codes():
    run = lambda *args: subprocess.run(
        [cli, *args], capture_output=True, text=True
    )
    ok = run("core", "{11,8,6,2,0}", "--d", "3")
    assert ok.returncode == 0
    assert "{8,5,3,2,0}" in ok.stdout

    usage = run("core", "{11,8,6,2,0}")  # --d is required here
    assert usage.returncode == 2

    bad_input = run("core", "{1,1}", "--d", "2")
    assert bad_input.returncode == 2

    verify = run("verify", "--suite", "thm33", "--trials", "3", "--json")
    assert verify.returncode == 0
    reports = json.loads(verify.stdout)
    assert len(reports) == 6
    assert all(r["pass"] for r in reports)
