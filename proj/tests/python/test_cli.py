import json
import os
import subprocess

import pytest

CLI = os.environ.get("MDSUM_CLI", "build/mdsum")


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("MDSUM_ORDER", None)
    full_env.pop("MDSUM_FORMAT", None)
    full_env.update(env or {})
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env)


def test_series_text_and_exit_codes():
    r = run("series", "1", "--order", "3")
    assert r.returncode == 0
    assert r.stdout.strip() == "[1] = q + 2*q^2 + 2*q^3 + O(q^4)"
    assert run("series", "0").returncode == 2
    assert run("series", "2,x").returncode == 2
    assert run("nonsense").returncode == 2


def test_series_json_round_trip():
    r = run("series", "4,2", "--order", "8", "--format", "json")
    data = json.loads(r.stdout)
    assert data["order"] == 8
    assert data["coeffs"][:3] == ["0/1", "0/1", "1/6"]
    assert json.dumps(data, indent=2, sort_keys=True) == r.stdout.rstrip("\n")


def test_environment_and_flag_precedence():
    r = run("series", "2", env={"MDSUM_ORDER": "4"})
    assert r.stdout.strip().endswith("O(q^5)")
    r = run("series", "2", "--order", "2", env={"MDSUM_ORDER": "4"})
    assert r.stdout.strip().endswith("O(q^3)")
    r = run("series", "2", "--order", "2", env={"MDSUM_FORMAT": "json"})
    assert json.loads(r.stdout)["order"] == 2
    assert run("series", "2", env={"MDSUM_ORDER": "many"}).returncode == 2


def test_product_derive_decompose():
    r = run("product", "1", "2,1")
    assert r.returncode == 0
    assert r.stdout.splitlines()[0] == "[1] * [2,1] = -3/2[2,1] + [2,2] + [3,1] + [1,2,1] + 2[2,1,1]"
    assert "agree through q^120" in r.stdout
    r = run("derive", "1")
    assert r.stdout.splitlines()[0] == "d[1] = 1/2[2] + [3] - [2,1]"
    r = run("decompose", "1,2")
    assert r.stdout.splitlines()[0].startswith("[1,2] = ([2])*T + (1/2[2] - [3] - [2,1])")


def test_dims_csv_and_cap(tmp_path):
    out = tmp_path / "t.csv"
    r = run("dims", "--space", "mda", "--max-weight", "6", "--order", "120", "--out", str(out))
    assert r.returncode == 0
    rows = out.read_text().splitlines()
    assert rows[0] == "space,kind,k,l,value,certainty"
    cells = {(int(c[2]), int(c[3])): int(c[4]) for c in (row.split(",") for row in rows[1:])}
    assert cells[(6, 3)] == 18 and cells[(5, 5)] == 13
    assert run("dims", "--space", "md", "--max-weight", "15", "--max-length", "10").returncode == 4
    assert run("dims", "--space", "xyz").returncode == 2


def test_threads_do_not_change_output():
    a = run("--threads", "1", "dims", "--max-weight", "6", "--certify")
    b = run("--threads", "3", "dims", "--max-weight", "6", "--certify")
    assert a.returncode == 0 and a.stdout == b.stdout
    assert "lower_bound" not in a.stdout


def test_relations():
    r = run("relations", "--weight", "4", "--length", "2", "--format", "json")
    (rel,) = json.loads(r.stdout)
    terms = {tuple(t["parts"]): t["coeff"] for t in rel["terms"]}
    assert terms == {(4,): "1/1", (2, 2): "-2/1", (3, 1): "2/1", (3,): "-1/1", (2,): "1/3"}


def test_mzv():
    r = run("mzv", "3,1", "--format", "json")
    data = json.loads(r.stdout)
    assert data["index"] == [3, 1]
    assert abs(float(data["value"]) - 0.2705808084277845) < 1e-15
    assert float(data["error_bound"]) <= 1e-10
    assert run("mzv", "1,2").returncode == 2


@pytest.mark.parametrize("group", [1, 4, 10])
def test_verify_passing_groups(group):
    assert run("verify", "--suite", "paper", "--group", str(group)).returncode == 0


def test_verify_reports_printed_modular_identities():
    r = run("verify", "--suite", "paper", "--group", "7")
    assert r.returncode == 3
    assert "dG4 = 15G6" in r.stderr
    assert run("verify", "--suite", "other").returncode == 2
