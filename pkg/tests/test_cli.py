import json
import subprocess
import sys

import pytest

from cherednik.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_blocks_kappa_in_prime_field(capsys):
    code, data = run_json(capsys, "blocks", "-p", "3", "-r", "2", "-m", "1", "-n", "2", "--kappa", "2")
    assert code == 0
    assert len(data["classes"]) == 1


def test_blocks_kappa_generic(capsys):
    code, data = run_json(capsys, "blocks", "-p", "3", "-r", "2", "-m", "1", "-n", "2", "--kappa", "t")
    assert code == 0
    assert len(data["classes"]) == 2
    assert data["singletons"]


def test_blocks_rank1_c_in_prime_field(capsys):
    code, data = run_json(capsys, "blocks", "-p", "3", "-r", "1", "-m", "2", "-n", "1", "--c", "1")
    assert code == 0
    assert len(data["classes"]) == 1


def test_json_embeds_ctx(capsys):
    _, data = run_json(capsys, "blocks", "-p", "7", "-m", "3", "-n", "1", "--c", "1", "2")
    assert data["schema"] == 1
    assert data["ctx"]["p"] == 7 and "modulus" in data["ctx"]


def test_smooth_exit_codes(capsys):
    assert run(capsys, "smooth", "-p", "3", "-r", "2", "-m", "1", "-n", "2", "--kappa", "1")[0] == 1
    assert run(capsys, "smooth", "-p", "3", "-r", "2", "-m", "1", "-n", "2", "--kappa", "t")[0] == 0


@pytest.mark.parametrize("bad", ["t^^2", "2*", "x+1", "*t"])
def test_parse_errors_exit_2(capsys, bad):
    assert run(capsys, "smooth", "-p", "3", "-r", "2", "-m", "1", "-n", "2", "--kappa", bad)[0] == 2


def test_t_in_prime_field_is_parse_error(capsys):
    assert run(capsys, "blocks", "-p", "3", "-r", "1", "-m", "1", "-n", "2", "--kappa", "t")[0] == 2


def test_default_extension_degree(capsys):
    # t needs r >= 2 even when the roots of unity already live in F_p
    _, data = run_json(capsys, "blocks", "-p", "3", "-m", "1", "-n", "2", "--kappa", "t")
    assert data["ctx"]["r"] == 2
    _, data = run_json(capsys, "blocks", "-p", "5", "-m", "3", "-n", "1", "--c", "1", "2")
    assert data["ctx"]["r"] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["blocks", "-p", "4", "-m", "1", "-n", "2"],
        ["blocks", "-p", "3", "-r", "1", "-m", "4", "-n", "1", "--c", "0", "0", "0"],
        ["blocks", "-p", "3", "-r", "2", "--modulus", "t^2+2", "-m", "1", "-n", "2"],
        ["blocks", "-p", "5", "-m", "3", "-n", "1", "--c", "1"],
    ],
)
def test_ctx_errors_exit_3(capsys, argv):
    assert run(capsys, *argv)[0] == 3


def test_tsv_output(capsys):
    code, out = run(capsys, "blocks", "-p", "3", "-r", "2", "-m", "2", "-n", "2", "--c", "t", "--kappa", "t", "--format", "tsv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "class\tmembers"
    _, data = run_json(capsys, "blocks", "-p", "3", "-r", "2", "-m", "2", "-n", "2", "--c", "t", "--kappa", "t")
    assert len(lines) == 1 + len(data["classes"])
    assert sorted(lines[1].split("\t")[1].split() + lines[2].split("\t")[1].split()) == sorted(
        data["classes"][0]["members"] + data["classes"][1]["members"]
    )


def test_classify_all_divisible(capsys):
    code, data = run_json(capsys, "classify", "--m-max", "3", "--n-max", "3", "-p", "5")
    assert code == 0
    assert data["all_divisible"]
    assert all(row["ok"] for row in data["rows"])


def test_g4_verdict(capsys):
    code, data = run_json(capsys, "g4", "-p", "7", "-r", "2", "--c1", "t", "--c2", "t+1")
    assert code == 0
    assert data["verdict"] in ("singleton-blocks", "inconclusive")
    assert data["table_separates"]
    _, zero = run_json(capsys, "g4", "-p", "7", "-r", "2", "--c1", "0", "--c2", "0")
    assert zero["verdict"] == "inconclusive"


def test_g4_sampling_is_seeded(capsys):
    argv = ["g4", "-p", "7", "-r", "2", "--samples", "20", "--seed", "3"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_fake(capsys):
    code, data = run_json(capsys, "fake", "-m", "2", "-n", "2")
    assert code == 0
    assert sum(row["dim"] ** 2 for row in data["rows"]) == 8


def test_oracle_rank1(capsys):
    code, data = run_json(capsys, "oracle", "rank1", "-p", "3", "-r", "2", "--c1", "t")
    assert code == 0
    assert data["blocks"] == 2
    assert data["simple_head_dims"] == {"[1|]": 6, "[|1]": 6}
    assert all(data["identities"].values())


def test_oracle_s2(capsys):
    code, data = run_json(capsys, "oracle", "s2", "-p", "3", "--kappa", "t", "--skip-identities")
    assert code == 0
    assert data["blocks"] == 2 and data["dim"] == 648


def test_oracle_budget_exit_1(capsys):
    assert run(capsys, "oracle", "s2", "-p", "5", "--kappa", "t")[0] == 1


def test_repeat_output_byte_identical(capsys):
    argv = ["blocks", "-p", "7", "-m", "2", "-n", "3", "--c", "t", "--kappa", "3"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "cherednik", "smooth", "-p", "3", "-r", "2", "-m", "1", "-n", "2", "--kappa", "0"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 1
    assert json.loads(res.stdout)["verdict"] == "singular"
