"""Command-line interface: outputs, exit codes, determinism."""

import json

import pytest

from qktoledo.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_pullback_human(capsys):
    code, out, _ = run_cli(capsys, "pullback", "--embedding", "sym-square")
    assert code == 0
    assert "ratio_to_OmegaB2: 11/64" in out
    assert "omega_on_basis: 11/4" in out
    assert "convention:" in out


def test_pullback_totally_real(capsys):
    code, out, _ = run_cli(capsys, "pullback", "--embedding", "totally-real")
    assert code == 0
    assert "ratio_to_OmegaB2: 0" in out


def test_pullback_json(capsys):
    code, out, _ = run_cli(capsys, "pullback", "--embedding", "rho", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["ratio_to_OmegaB2"] == "1/4"
    assert payload["embedding"] == "rho"
    assert set(payload) == {"embedding", "omega_on_basis",
                            "ratio_to_OmegaB2", "convention"}


def test_pullback_general_n(capsys):
    code, out, _ = run_cli(capsys, "pullback", "--embedding", "rho", "--n", "3")
    assert code == 0
    assert "ratio_to_OmegaB2: 1/4" in out


def test_sym_square_requires_n2(capsys):
    with pytest.raises(SystemExit) as err:
        main(["pullback", "--embedding", "sym-square", "--n", "3"])
    assert err.value.code == 2


def test_unknown_verb_exits_2(capsys):
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2


def test_unknown_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as err:
        main(["pullback", "--embedding", "rho", "--frequency", "9"])
    assert err.value.code == 2


def test_lift_check_twistor(capsys):
    code, out, _ = run_cli(capsys, "lift-check", "--domain", "twistor",
                           "--samples", "5", "--seed", "7")
    assert code == 0
    assert out.count("member=false") == 5
    assert "summary: PASS" in out
    assert "seed: 7" in out


def test_lift_check_u3u1u2(capsys):
    code, out, _ = run_cli(capsys, "lift-check", "--domain", "u3u1u2",
                           "--samples", "4", "--seed", "3")
    assert code == 0
    assert "summary: PASS" in out
    assert out.count("holomorphic=True, horizontal=True") == 4


def test_lift_check_json_deterministic(capsys):
    args = ("lift-check", "--domain", "twistor", "--samples", "6",
            "--seed", "11", "--json")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["summary"] == "PASS"
    assert payload["seed"] == 11
    assert len(payload["samples"]) == 6
    for sample in payload["samples"]:
        assert {"check", "input", "verdict", "violations"} <= set(sample)


def test_classify_table(capsys):
    code, out, _ = run_cli(capsys, "classify", "--embedding", "totally-real")
    assert code == 0
    assert "column 1 overall: linear" in out
    assert "column 2 overall: conjugate_linear" in out
    assert "fails" in out


def test_classify_json(capsys):
    code, out, _ = run_cli(capsys, "classify", "--embedding", "sym-square", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["columns"]["1"] == "neither"
    assert payload["twistor_lift_condition"] is False


def test_period_triple_base(capsys):
    code, out, _ = run_cli(capsys, "period-triple", "--vector", "0,0,1")
    assert code == 0
    assert "S2Lperp: dimension 3, positive definite" in out
    assert "L2: dimension 1, positive definite" in out
    assert "LoLperp: dimension 2, negative definite" in out


def test_period_triple_exact_components(capsys):
    code, out, _ = run_cli(capsys, "period-triple", "--vector",
                           "1/2, 1/2*i, 1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["LoLperp"]["definiteness"] == "negative"
    assert payload["vector"] == ["1/2", "1/2*i", "1"]


def test_period_triple_parse_error_exits_2(capsys):
    with pytest.raises(SystemExit) as err:
        main(["period-triple", "--vector", "0,0,zebra"])
    assert err.value.code == 2


def test_period_triple_positive_vector_fails(capsys):
    code, out, err = run_cli(capsys, "period-triple", "--vector", "1,0,0")
    assert code == 1
    assert "negative" in err


def test_selftest_passes(capsys):
    code, out, _ = run_cli(capsys, "selftest")
    assert code == 0
    assert "selftest: PASS" in out
    assert "FAIL" not in out


def test_selftest_json(capsys):
    code, out, _ = run_cli(capsys, "selftest", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["summary"] == "PASS"
    assert all(check["pass"] for check in payload["checks"])
