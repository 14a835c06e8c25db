import json
import subprocess
import sys

import pytest

from gorjordan.cli import main

from test_jordan import EXAMPLE_M
from test_sequences import COUNTER_M, COUNTER_N

EX = ["--poly", "X1^2*X2^2*X3^2", "--linear", "x1"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_hilbert(capsys):
    code, out, _ = run(capsys, "hilbert", "--poly", "X1^2*X2^2*X3^2")
    assert code == 0 and json.loads(out) == [1, 3, 6, 7, 6, 3, 1]


def test_rank_matrix(capsys):
    code, out, _ = run(capsys, "rank-matrix", *EX)
    assert code == 0 and json.loads(out)["matrix"] == EXAMPLE_M


def test_jordan_type_json_and_text(capsys):
    code, out, _ = run(capsys, "jordan-type", *EX)
    data = json.loads(out)
    assert code == 0 and data["partition"] == [3] * 9
    assert data["small_part"]["nilpotency_order"] == 3
    code, out, _ = run(capsys, "jordan-type", "--format", "text", *EX)
    assert "P = (3^9)" in out


def test_jordan_type_two_variables(capsys):
    code, out, _ = run(capsys, "jordan-type", "--vars", "2", "--poly", "X1^3*X2", "--linear", "x2")
    assert code == 0 and "small_part" not in json.loads(out)


def test_jdt(capsys):
    code, out, _ = run(capsys, "jdt", "--poly", "X^3*Y^4+X^3*Z^4+X^2*Y*Z^4+Y^3*Z^4", "--linear", "x")
    data = json.loads(out)
    assert code == 0
    parts = [(p["part"], p["degree"]) for p in data["jordan_degree_type"]]
    assert parts == [(4, 0), (4, 1), (4, 1), (4, 2), (4, 2), (4, 3), (4, 3), (4, 4), (2, 2), (2, 3), (2, 4)]


def test_check_matrix(capsys, tmp_path):
    good, bad_m, bad_n = (tmp_path / f for f in ("good.json", "m.json", "n.json"))
    good.write_text(json.dumps(EXAMPLE_M))
    bad_m.write_text(json.dumps({"matrix": COUNTER_M}))
    bad_n.write_text(json.dumps(COUNTER_N))
    code, out, _ = run(capsys, "check-matrix", "--file", str(good))
    assert code == 0 and json.loads(out)["passed"]
    code, out, _ = run(capsys, "check-matrix", "--file", str(bad_m))
    assert code == 1
    assert any(v["condition"] == "ii" for v in json.loads(out)["violations"])
    code, out, _ = run(capsys, "check-matrix", "--format", "text", "--file", str(bad_n))
    assert code == 1 and "(3,1;5,4)" in out


def test_check_matrix_bad_input(capsys, tmp_path):
    f = tmp_path / "x.json"
    f.write_text("[[1, 2], [3")
    assert run(capsys, "check-matrix", "--file", str(f))[0] == 2
    f.write_text("[[1, 0], [1, 1]]")
    assert run(capsys, "check-matrix", "--file", str(f))[0] == 2
    assert run(capsys, "check-matrix", "--file", str(tmp_path / "missing.json"))[0] == 2


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--socle-degree", "6")
    data = json.loads(out)
    assert code == 0 and len(data["triples"]) == 17
    code, out, _ = run(capsys, "classify", "--socle-degree", "6", "--params", "2,4,6")
    (t,) = json.loads(out)["triples"]
    assert len(t["profiles"]) == 2
    code, out, _ = run(capsys, "classify", "--socle-degree", "6", "--params", "1,2")
    assert code == 0 and len(json.loads(out)["pairs"]) == 1


@pytest.mark.parametrize("params", ["2,4,20", "1,2,3,4", "a,b"])
def test_classify_bad_params(capsys, params):
    assert run(capsys, "classify", "--socle-degree", "6", "--params", params)[0] == 2


def test_verify_classification(capsys):
    code, out, _ = run(capsys, "verify-classification", "--max-degree", "5")
    assert code == 0 and json.loads(out)["failures"] == []


def test_search(capsys, tmp_path):
    out_file = tmp_path / "s.ndjson"
    code, out, _ = run(capsys, "search", "--socle-degree", "3", "--budget", "50", "--output", str(out_file))
    data = json.loads(out)
    assert code == 0 and data["total"] == len(out_file.read_text().splitlines())


@pytest.mark.parametrize(
    "argv",
    [
        ["rank-matrix", "--poly", "X1+Y", "--linear", "x1"],
        ["rank-matrix", "--poly", "X1^2*", "--linear", "x1"],
        ["hilbert", "--poly", "0"],
        ["classify", "--socle-degree", "1"],
        ["classify", "--vars", "2", "--socle-degree", "4"],
        ["search", "--socle-degree", "3", "--budget", "-1"],
        ["no-such-command"],
    ],
)
def test_input_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gorjordan", "hilbert", "--format", "text", "--poly", "X^2+Y^2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "[1,2,1]"
