import csv
import io
import json
import subprocess
import sys

import pytest

from schubmax.cli import main


def run(capsys, *argv):
    status = main(list(argv))
    cap = capsys.readouterr()
    return status, cap.out, cap.err


def test_upsilon_plain(capsys):
    status, out, err = run(capsys, "upsilon", "1423")
    assert status == 0 and out == "3\n"
    assert err.startswith("# schubmax {")


def test_upsilon_pair(capsys):
    status, out, _ = run(capsys, "upsilon", "195283746", "--pair")
    assert out.split() == ["6195", "1462", "9057090"]


def test_upsilon_json_and_commas(capsys):
    _, out, _ = run(capsys, "upsilon", "1,4,3,2,12,11,10,9,8,7,6,5", "--format", "json")
    data = json.loads(out)
    assert data["perm"] == "1,4,3,2,12,11,10,9,8,7,6,5" and data["upsilon"] > 1


def test_upsilon_bad_input(capsys):
    status, _, err = run(capsys, "upsilon", "1124")
    assert status == 2 and "error" in err


def test_vmax_csv(capsys):
    status, out, _ = run(capsys, "vmax", "--n", "12")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "composition", "f6"]
    assert rows[12] == ["12", "(1, 3, 8)", "0.229879"]


def test_vmax_diff_clean(capsys):
    status, _, err = run(capsys, "vmax", "--n", "40", "--diff", "--format", "table")
    assert status == 0 and "0 mismatches" in err


def test_vmax_json(capsys):
    _, out, _ = run(capsys, "vmax", "--n", "5", "--format", "json")
    data = json.loads(out)
    assert data[4]["composition"] == [1, 1, 3] and data[4]["v"] == "14"


def test_constants(capsys, tmp_path):
    plot = tmp_path / "f.tsv"
    status, out, _ = run(capsys, "constants", "--plot", str(plot), "--points", "20")
    assert out.splitlines() == ["alpha=0.4331818312", "gamma=0.2032558981", "gamma/log2=0.2932362762"]
    lines = plot.read_text().splitlines()
    assert len(lines) == 20 and lines[0].startswith("x\t")


def test_constants_json_bisection(capsys):
    _, out, _ = run(capsys, "constants", "--method", "bisection", "--format", "json", "--precision", "6")
    assert json.loads(out)["alpha"] == "0.433182"


def test_verify_quick_suites(capsys):
    status, out, _ = run(capsys, "--threads", "2", "verify", "--suite", "integral", "--grid", "3")
    assert status == 0 and out.startswith("PASS integral: 9 pairs")
    status, out, _ = run(capsys, "verify", "--suite", "bounds", "--max-n", "30")
    assert status == 0 and "0 violations" in out
    status, out, _ = run(capsys, "verify", "--suite", "limit", "--max-n", "30")
    assert status == 0 and out.startswith("PASS limit")
    status, out, _ = run(capsys, "verify", "--suite", "lemma", "--grid-points", "10000")
    assert status == 0 and out.startswith("PASS lemma")


def test_verify_proctor(capsys):
    status, out, _ = run(capsys, "verify", "--suite", "proctor")
    assert status == 0 and out.count("PASS") == 4


def test_conjectures_table(capsys):
    status, out, _ = run(capsys, "conjectures", "--name", "uprime", "--n", "6")
    assert status == 0 and "162534" in out and "status: holds" in out


def test_conjectures_json(capsys):
    status, out, _ = run(capsys, "conjectures", "--name", "cauchy", "--n", "5", "--format", "json")
    assert status == 0 and json.loads(out)["status"] == "holds"


def test_conjectures_large_guard(capsys):
    status, _, err = run(capsys, "conjectures", "--name", "ms", "--n", "9")
    assert status == 2 and "large job" in err


def test_sweep(capsys, tmp_path):
    target = tmp_path / "s4.csv"
    status, out, _ = run(capsys, "-o", str(target), "sweep", "--n", "4")
    assert out == ""
    rows = target.read_text().splitlines()
    assert rows[0] == "n,permutation,upsilon" and len(rows) == 25
    _, out, _ = run(capsys, "sweep", "--n", "5", "--format", "json")
    assert json.loads(out) == {"n": 5, "u": 14, "a": 393, "argmax": ["12543", "15432", "21543"]}
    status, _, _ = run(capsys, "sweep", "--n", "9")
    assert status == 2


def test_ftable_and_matrix(capsys):
    _, out, _ = run(capsys, "ftable", "--max-n", "4")
    rows = out.splitlines()
    assert rows[0] == "m,p,bitlength,log2" and len(rows) == 1 + 10
    assert "1,3,3,2.321928094887" in rows
    _, out, _ = run(capsys, "matrix", "--vmax", "4")
    assert out.splitlines()[1:] == ["1,1", "2,4", "3,3", "4,2"]


def test_console_script():
    res = subprocess.run([sys.executable, "-m", "schubmax.cli", "upsilon", "15243"],
                         capture_output=True, text=True, check=True)
    assert res.stdout == "11\n"
