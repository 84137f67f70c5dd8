import json

import pytest

from splitcount.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_envelope_matches_contract(capsys):
    code, out, _ = run_cli(
        capsys, "count", "--q", "2", "--m", "2", "--n", "2", "--via", "oracle,closed"
    )
    assert code == 0
    env = json.loads(out)
    assert env["count"] == "20"
    assert env["agreement"] is True
    assert env["provenances"] == ["oracle", "closed-form"]
    assert env["parameters"]["N"] == 4
    assert {r["provenance"]: r["count"] for r in env["results"]} == {
        "oracle": "20",
        "closed-form": "20",
    }
    assert env["elapsed_ms"] >= 0


def test_flag_base_case(capsys):
    code, out, _ = run_cli(capsys, "flag", "--q", "2", "--N", "4", "--tuple", "(0,0)")
    assert code == 0
    env = json.loads(out)
    assert env["count"] == "1" and env["agreement"] is True


def test_count_plain_output(capsys):
    code, out, _ = run_cli(capsys, "count", "--q", "2", "--m", "2", "--n", "3", "--plain")
    assert code == 0
    assert out.strip() == "336"


def test_symbolic_output(capsys):
    code, out, _ = run_cli(
        capsys,
        "flag", "--N", "5", "--tuple", "(3,1),(1,0)", "--symbolic", "--via", "recursion,closed",
    )
    assert code == 0
    env = json.loads(out)
    assert env["coefficients"] == [0, 0, 1, 1, 1, 1, 1]
    assert all("coefficients" in r for r in env["results"])


def test_identity_sweep(capsys):
    code, out, _ = run_cli(capsys, "identity", "--lemma", "1", "--max-A", "8")
    assert code == 0
    env = json.loads(out)
    assert env["agreement"] is True and env["cases"] > 100 and env["failures"] == []


def test_identity_single_case(capsys):
    code, out, _ = run_cli(
        capsys, "identity", "--lemma", "2", "--A", "5", "--B", "3", "--C", "0", "--D", "1"
    )
    assert code == 0
    env = json.loads(out)
    assert env["agreement"] is True and env["lhs"] == env["rhs"]


def test_q1_modes(capsys):
    code, out, _ = run_cli(capsys, "q1", "--m", "2", "--n", "3")
    assert code == 0 and json.loads(out)["count"] == "3"
    code, out, _ = run_cli(capsys, "q1", "--N", "5", "--a", "2", "--b", "0")
    assert code == 0 and json.loads(out)["count"] == "5"
    code, out, _ = run_cli(capsys, "q1", "--N", "4", "--tuple", "(2,0)")
    assert code == 0 and json.loads(out)["count"] == "2"


def test_bijection_command(capsys):
    code, out, _ = run_cli(capsys, "bijection", "--q", "2", "--N", "4")
    assert code == 0
    env = json.loads(out)
    assert env["agreement"] is True
    assert [r["k"] for r in env["reports"]] == [2, 3]
    assert all(r["ok"] and r["domain_size"] == 15 for r in env["reports"])


def test_pair_command_cross_checks(capsys):
    code, out, _ = run_cli(capsys, "pair", "--q", "3", "--N", "4", "--a", "2", "--b", "1")
    assert code == 0
    env = json.loads(out)
    assert env["agreement"] is True and env["count"] == "40"  # [4]_3


def test_angle_command(capsys):
    code, out, _ = run_cli(capsys, "angle", "--q", "2", "--N", "4", "--tuple", "(3,1),(1,0)")
    assert code == 0
    assert json.loads(out)["count"] == "45"


def test_modulus_selection(capsys):
    code, out, _ = run_cli(
        capsys, "count", "--q", "2", "--m", "1", "--n", "3", "--modulus-index", "1"
    )
    assert code == 0
    env = json.loads(out)
    assert env["parameters"]["modulus"] == "1,0,1,1"
    assert env["count"] == "7"


def test_prime_power_field_flag(capsys):
    code, out, _ = run_cli(
        capsys,
        "count", "--q", "9", "--base-poly", "1,0,1", "--m", "1", "--n", "2",
        "--via", "oracle,closed",
    )
    assert code == 0
    env = json.loads(out)
    assert env["count"] == "10"  # [2]_9 = 1 + 9


def test_usage_error_exit_code_1(capsys):
    assert run_cli(capsys, "count", "--q", "2", "--m", "2")[0] == 1  # missing --n
    assert run_cli(capsys, "nonsense")[0] == 1
    assert run_cli(capsys, "count", "--q", "6", "--m", "1", "--n", "2")[0] == 1
    assert run_cli(capsys, "flag", "--N", "4", "--tuple", "oops", "--q", "2")[0] == 1
    code, _, err = run_cli(capsys, "verify", "--suite", "no-such-suite")
    assert code == 1


def test_disagreement_exit_code_2(capsys, monkeypatch):
    # force a mismatch through the envelope path
    from splitcount import cli

    results = [("oracle", 20), ("closed-form", 21)]

    class Args:
        plain = False

    code = cli._emit(Args(), "count", {}, results, 0.0)
    out, _ = capsys.readouterr()
    env = json.loads(out)
    assert code == 2 and env["agreement"] is False and "count" not in env


def test_verify_suite_output(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "pascal", "--max-N", "6")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1].startswith("suite=pascal passed=")
    assert all(line.startswith(("ok", "FAIL", "suite=")) for line in lines)


def test_verify_sigma_independence(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "sigma-independence")
    assert code == 0
    assert "moduli=2" in out  # at least one case really uses two moduli
