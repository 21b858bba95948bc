from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from umbral.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    rc = run(list(argv), out=out, err=err)
    return rc, out.getvalue(), err.getvalue()


def test_seq_examples():
    assert call("seq", "bernoulli", "--n", "12") == (0, "-691/2730\n", "")
    assert call("seq", "zagier-bstar", "--n", "1")[1] == "3/4\n"
    assert call("seq", "gen-euler:4", "--n", "1")[1] == "-1\n"
    rc, out, _ = call("seq", "bell", "--n", "5", "--upto")
    assert out.splitlines()[-1] == "5 52"


def test_usage_errors_exit_2():
    assert call()[0] == 2
    assert call("frobnicate")[0] == 2
    assert call("seq", "nope", "--n", "1")[0] == 2
    assert call("seq", "bernoulli")[0] == 2
    assert call("verify")[0] == 2
    assert call("verify", "--all", "mehler")[0] == 2
    assert call("verify", "no-such-id")[0] == 2
    assert call("verify", "mehler", "--cap", "x")[0] == 2
    assert call("verify", "mehler", "--cap", "x=1")[0] == 2  # below floor
    assert call("cong", "nonsense")[0] == 2
    assert call("seq", "zagier-bstar", "--n", "0")[0] == 2


def test_verify_json(tmp_path):
    path = tmp_path / "report.json"
    rc, out, _ = call("verify", "mehler", "bell-rota", "--json", str(path), "--jobs", "1")
    assert rc == 0
    assert out.splitlines()[-1] == "2/2 passed"
    data = json.loads(path.read_text())
    assert [d["id"] for d in data] == ["mehler", "bell-rota"]
    for d in data:
        assert set(d) == {"id", "caps", "status", "mismatch", "millis"}
        assert d["status"] == "pass" and d["mismatch"] is None


def test_verify_cap_override():
    rc, out, _ = call("verify", "mehler", "--cap", "x=5")
    assert rc == 0 and "[x=5]" in out


def test_table_tau_csv(tmp_path):
    path = tmp_path / "tau.csv"
    rc, out, _ = call("table", "tau", "--jmax", "6", "--nmax", "6", "--csv", str(path))
    assert rc == 0
    rows = list(csv.reader(path.open()))
    assert rows[0] == ["j", "n", "computed", "predicted", "sharp"]
    assert len(rows) == 1 + 7 * 7
    assert ["3", "2", "6", "4", "false"] in rows
    assert out.splitlines()[0] == "j,n,computed,predicted,sharp"


def test_tables_mu_frobenius_conjecture():
    assert call("table", "mu", "--nmax", "3")[0] == 0
    assert call("table", "frobenius", "--nmax", "3")[0] == 0
    rc, out, _ = call("table", "conjecture", "--nmax", "2", "--jmax", "0", "--tmax", "1")
    assert rc == 0
    assert out.splitlines()[0].startswith("j,n,t,computed,conjectured")


def test_cong_groups():
    rc, out, _ = call("cong", "tau", "mu", "frobenius")
    assert rc == 0
    assert "XFAIL tau: tau literal" in out
    assert "PASS  mu: mu" in out


def test_list():
    rc, out, _ = call("list")
    assert rc == 0 and "mehler" in out
    rc, out, _ = call("list", "--json")
    assert any(e["id"] == "rogers-szego-bilinear" for e in json.loads(out))


def test_output_is_deterministic():
    a = call("table", "tau", "--jmax", "3", "--nmax", "3")
    b = call("table", "tau", "--jmax", "3", "--nmax", "3")
    assert a == b


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "umbral.cli", "seq", "bernoulli", "--n", "12"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "-691/2730\n"


@pytest.mark.parametrize("argv", [["seq", "euler", "--n", "-1"]])
def test_negative_index_rejected(argv):
    assert call(*argv)[0] == 2
