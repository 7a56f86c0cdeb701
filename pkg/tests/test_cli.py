import csv
import io
import json
import subprocess
import sys

import pytest

from qcong.cli import main


def run(*argv):
    out = io.StringIO()
    rc = main(list(argv), out=out)
    return rc, out.getvalue()


def test_expand_text_and_csv():
    rc, text = run("expand", "E2^3/E1^2", "-N", "5")
    assert rc == 0
    assert [line.split()[1] for line in text.splitlines()[1:]] == ["1", "2", "2", "4", "5"]
    rc, text = run("expand", "PHI", "-N", "5", "--format", "csv")
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["n", "coeff"] and [r[1] for r in rows[1:]] == ["1", "-2", "0", "0", "2"]


def test_expand_json_modular():
    rc, text = run("expand", "1/E1", "-N", "10", "--mod", "5", "--format", "json")
    data = json.loads(text)
    assert data["modulus"] == 5 and data["coeffs"][9] == 0 and data["coeffs"][4] == 0


def test_expand_figure(tmp_path):
    fig = tmp_path / "plots" / "p.png"
    rc, _ = run("expand", "1/E1", "-N", "60", "--figure", str(fig))
    assert rc == 0 and fig.stat().st_size > 0


def test_verify_shipped_subset_with_figure_and_json(tmp_path):
    fig = tmp_path / "v.png"
    rc, text = run("verify", "-N", "50", "--filter", "p-5n4", "--figure", str(fig))
    assert rc == 0 and fig.is_file()
    assert text.splitlines()[0].startswith("PASS")
    assert "2/2 passed" in text
    rc, text = run("verify", "-N", "50", "--filter", "p-5n4", "--json")
    assert json.loads(text)["summary"]["failed"] == 0


def test_verify_failing_file(tmp_path):
    f = tmp_path / "bad.qc"
    f.write_text("id ne: E1 == E2\nid x [experimental]: E1 == E3\n", encoding="utf-8")
    rc, text = run("verify", str(f), "-N", "4")
    assert rc == 1
    assert "FAIL " in text and "first failure at n=1: lhs -1, rhs 0" in text
    assert "XFAIL" in text


def test_oracle_table():
    rc, text = run("oracle", "pomega", "--max", "4", "--format", "csv")
    assert text.splitlines() == ["n,pomega", "1,1", "2,2", "3,3", "4,4"]


def test_crosscheck_and_figure(tmp_path):
    fig = tmp_path / "c.png"
    rc, text = run("crosscheck", "pnu", "--max", "20", "--figure", str(fig))
    assert rc == 0 and "0 mismatches" in text and fig.is_file()


def test_scan_and_figure(tmp_path):
    fig = tmp_path / "s.png"
    rc, text = run("scan", "1/E1", "--mod", "5", "--max-step", "10", "-N", "300",
                   "--figure", str(fig))
    assert rc == 0 and fig.is_file()
    assert text.splitlines()[0].startswith("5n+4  60 witnesses")
    assert "(refines a shorter step)" in text
    rc, text = run("scan", "1/E1", "--mod", "5", "--max-step", "6", "-N", "500", "--json")
    assert json.loads(text)["hits"] == [{"step": 5, "offset": 4, "witnesses": 100}]


@pytest.mark.parametrize("argv", [
    ("expand", "E1 +", "-N", "5"),
    ("expand", "1/(2*E1)", "-N", "5"),
    ("scan", "E1", "--mod", "5", "--max-step", "40", "-N", "10"),
    ("verify", "/nonexistent/file.qc"),
    ("oracle", "sptomega", "--max", "99"),
])
def test_errors_exit_with_status_2(argv, capsys):
    rc, _ = run(*argv)
    assert rc == 2
    assert capsys.readouterr().err.startswith("qcong: error:")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qcong", "expand", "q", "-N", "2"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.split() == ["n", "coeff", "0", "0", "1", "1"]
