"""CLI behavior: subcommands, formats, files, exit codes, determinism."""

import io
import json
import os
import subprocess
import sys
from contextlib import redirect_stdout
from pathlib import Path

import pytest

import dirichlet_ring
from dirichlet_ring import generate, identity, make
from dirichlet_ring.cli import main, parse_ideal_spec
from dirichlet_ring.ideals import IdealSpec
from dirichlet_ring.seqfile import load, save

SRC_DIR = str(Path(dirichlet_ring.__file__).resolve().parent.parent)


def run_cli(*argv) -> tuple[int, str]:
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


def run_cli_subprocess(*argv, env_extra=None):
    env = dict(os.environ)
    env["PYTHONPATH"] = SRC_DIR + os.pathsep + env.get("PYTHONPATH", "")
    env.update(env_extra or {})
    return subprocess.run(
        [sys.executable, "-m", "dirichlet_ring", *argv],
        capture_output=True,
        env=env,
    )


# spec string parsing ---------------------------------------------------------


def test_parse_ideal_specs():
    assert parse_ideal_spec("I:5") == IdealSpec.norm_floor(5)
    assert parse_ideal_spec("P:6") == IdealSpec.coprime_vanishing(6)
    assert parse_ideal_spec("P:6,1") == IdealSpec.gcd_count(6, 1)
    assert parse_ideal_spec("K:3") == IdealSpec.prime_tail(3)
    assert parse_ideal_spec("J:2,3") == IdealSpec.prime_products((2, 3))
    assert parse_ideal_spec("J:~2,3") == IdealSpec.prime_products((2, 3), complement=True)
    assert parse_ideal_spec("maximal") == IdealSpec.maximal()
    with pytest.raises(ValueError):
        parse_ideal_spec("Q:4")


# generation --------------------------------------------------------------------


def test_gen_mobius_csv_row():
    code, out = run_cli("gen", "mobius", "--n", "6", "--format", "csv")
    assert code == 0
    assert out == "1,-1,-1,0,-1,1\n"


def test_gen_json_round_trips_to_equal_function(tmp_path):
    path = tmp_path / "phi.json"
    code, _ = run_cli("gen", "euler_phi", "--n", "24", "--out", str(path))
    assert code == 0
    name, f = load(path)
    assert name == "euler_phi"
    assert f == generate("euler_phi", 24)


def test_gen_with_param(tmp_path):
    code, out = run_cli("gen", "delta", "--param", "4", "--n", "6", "--format", "csv")
    assert code == 0
    assert out == "0,0,0,1,0,0\n"


def test_gen_float_conversion_and_refusal():
    code, out = run_cli("gen", "mobius", "--n", "3", "--mode", "float", "--format", "csv")
    assert code == 0
    assert out == "1.0,-1.0,-1.0\n"
    code, _ = run_cli("gen", "mangoldt", "--n", "3", "--mode", "exact")
    assert code == 1


def test_gen_env_window_override():
    result = run_cli_subprocess(
        "gen", "unit_u", "--format", "csv", env_extra={"DIRICHLET_N": "5"}
    )
    assert result.returncode == 0
    assert result.stdout == b"1,1,1,1,1\n"


# arithmetic commands --------------------------------------------------------------


def test_conv_with_identity_returns_other_operand(tmp_path):
    e_path, f_path = tmp_path / "e.json", tmp_path / "f.json"
    save(identity(8), e_path, "e")
    f = generate("liouville", 8)
    save(f, f_path, "lambda")
    code, out = run_cli("conv", str(e_path), str(f_path), "--format", "csv")
    assert code == 0
    assert out == "1,-1,-1,1,-1,1,-1,-1\n"


def test_inv_command(tmp_path):
    u_path = tmp_path / "u.json"
    save(generate("unit_u", 12), u_path, "u")
    out_path = tmp_path / "mu.json"
    code, _ = run_cli("inv", str(u_path), "--out", str(out_path))
    assert code == 0
    _, f = load(out_path)
    assert f == generate("mobius", 12)


def test_norm_command(tmp_path):
    path = tmp_path / "d.json"
    save(make([0, 0, 0, 0, 0, 1]), path, "d6")
    code, out = run_cli("norm", str(path), "--format", "table")
    assert code == 0 and out == "6\n"
    code, out = run_cli("norm", str(path))
    assert json.loads(out) == {"norm": 6}
    save(make([0, 0]), path, "z")
    code, out = run_cli("norm", str(path), "--format", "table")
    assert code == 0 and out == "zero-function\n"


def test_divide_command_success_and_witness(tmp_path):
    d6, d2, d3 = tmp_path / "d6.json", tmp_path / "d2.json", tmp_path / "d3.json"
    save(make([0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0]), d6, "d6")
    save(make([0, 1] + [0] * 10), d2, "d2")
    save(make([0, 0, 1] + [0] * 9), d3, "d3")
    code, out = run_cli("divide", str(d6), str(d2), "--format", "csv")
    assert code == 0 and out == "0,0,1,0,0,0\n"
    code, out = run_cli("divide", str(d3), str(d2))
    assert code == 0
    assert json.loads(out)["divisible"] is False
    assert json.loads(out)["index"] == 3


def test_classify_command(tmp_path):
    path = tmp_path / "d7.json"
    save(make([0] * 6 + [1] + [0] * 5), path, "d7")
    code, out = run_cli("classify", str(path))
    report = json.loads(out)
    assert report["is_unit"] is False
    assert report["norm"] == 7
    assert report["atom_certificate"] == "prime_norm"


# ideal commands ---------------------------------------------------------------------


def test_ideal_member_command(tmp_path):
    path = tmp_path / "d5.json"
    save(make([0, 0, 0, 0, 1, 0]), path, "d5")
    code, out = run_cli("ideal", "member", "P:6", str(path))
    obj = json.loads(out)
    assert code == 0
    assert obj["verdict"] == "non_member" and obj["index"] == 5


def test_ideal_quotient_command(tmp_path):
    path = tmp_path / "d6.json"
    save(make([0, 0, 0, 0, 0, 1] + [0] * 6), path, "d6")
    code, out = run_cli("ideal", "quotient", "2", str(path), "--format", "csv")
    assert code == 0 and out == "0,0,1,0,0,0\n"
    code, _ = run_cli("ideal", "quotient", "5", str(path))
    assert code == 1  # d6 is not in P_5


def test_ideal_decompose_command(tmp_path):
    path = tmp_path / "f.json"
    save(make([0, 1, 1, 0, 0, 1] + [0] * 6), path, "f")
    code, out = run_cli("ideal", "decompose", "6", str(path))
    obj = json.loads(out)
    assert code == 0
    assert obj["generator_points"] == [2, 3]
    assert obj["reconstruction_matches"] is True


def test_ideal_chain_command_table_and_dot():
    code, out = run_cli("ideal", "chain", "P_ascending", "--length", "3", "--n", "64",
                        "--format", "table")
    assert code == 0
    assert "P_2 < P_6  (separator delta_3)" in out
    code, out = run_cli("chain", "K_ascending", "--length", "3", "--n", "64", "--dot")
    assert code == 0
    assert out.startswith("digraph chain {")
    assert '"K_1" -> "K_2" [label="delta_2"];' in out


def test_ideal_probe_command():
    code, out = run_cli("ideal", "probe", "K:3", "--trials", "0", "--n", "32")
    obj = json.loads(out)
    assert code == 0
    assert obj["verdict"] == "non_member"
    assert len(obj["witness_pair"]) == 2
    code, out = run_cli("ideal", "probe", "P:6", "--trials", "25", "--seed", "5",
                        "--n", "32")
    assert json.loads(out)["verdict"] == "undecided_at_truncation"


# exit codes and determinism ------------------------------------------------------------


def test_usage_error_exits_two():
    result = run_cli_subprocess("gen", "no_such_function")
    assert result.returncode == 2


def test_computation_error_exits_one(tmp_path):
    missing = tmp_path / "nope.json"
    code, _ = run_cli("norm", str(missing))
    assert code == 1


def test_verify_paper_small_window_rejected():
    code, _ = run_cli("verify-paper", "--n", "8")
    assert code == 1


def test_verify_paper_deterministic_and_green():
    first = run_cli_subprocess("verify-paper", "--n", "64", "--seed", "11")
    second = run_cli_subprocess("verify-paper", "--n", "64", "--seed", "11")
    assert first.returncode == 0
    assert first.stdout == second.stdout
    assert b"26/26 checks passed" in first.stdout
