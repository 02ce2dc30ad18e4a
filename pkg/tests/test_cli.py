from __future__ import annotations

import json
import subprocess
import sys

import pytest

from massadmit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    lines = text.strip().splitlines()
    header = lines[0].split("\t")
    return [dict(zip(header, line.split("\t"))) for line in lines[1:]]


@pytest.mark.parametrize("argv,code", [
    (["--d", "8", "--l", "3", "--k", "2", "--j", "4"], 0),
    (["--d", "3", "--l", "2", "--k", "2", "--j", "2"], 2),
    (["--d", "5", "--l", "2", "--k", "3", "--j", "1"], 3),
])
def test_check_exit_codes(capsys, argv, code):
    got, out, _ = run(capsys, "check", *argv)
    assert got == code
    (rec,) = rows(out)
    assert rec["verdict"] == {0: "certified-admissible", 2: "inconclusive", 3: "inapplicable"}[code]


def test_check_tsv_fields(capsys):
    _, out, _ = run(capsys, "check", "--d", "47", "--l", "23", "--k", "2", "--j", "31")
    (rec,) = rows(out)
    assert rec["witness"] == "x1^46x2^45"
    assert (rec["ramos_lower"], rec["mvz_upper"], rec["theorem2_bound"]) == ("47", "47", "47")
    assert "elapsed" not in rec


def test_check_json_round_trips(capsys):
    _, out, _ = run(capsys, "check", "--d", "8", "--l", "3", "--k", "2", "--j", "4", "--format", "json")
    obj = json.loads(out)
    assert json.dumps(obj) + "\n" == out
    assert obj["verdict"] == "certified-admissible" and obj["witness"] == "x1^7x2^3"


def test_output_is_deterministic(capsys):
    argv = ["check", "--d", "9", "--l", "3", "--k", "3", "--j", "3", "--method", "both"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_timing_flag(capsys):
    _, out, _ = run(capsys, "check", "--d", "8", "--l", "3", "--k", "2", "--j", "4", "--timing", "--format", "json")
    assert json.loads(out)["elapsed"] >= 0


@pytest.mark.parametrize("argv", [
    ["check", "--d", "x", "--l", "2", "--k", "1", "--j", "1"],
    ["check", "--d", "0", "--l", "2", "--k", "1", "--j", "1"],
    ["check", "--d", "4"],
    ["nonsense"],
    [],
    ["check", "--d", "4", "--l", "1", "--k", "1", "--j", "1", "--method", "guess"],
])
def test_malformed_flags_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 1
    assert "usage" in capsys.readouterr().err


def test_invalid_ring_parameters_exit_1(capsys):
    code, _, err = run(capsys, "ring-info", "--d", "3", "--l", "3")
    assert code == 1 and "error" in err


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--k", "2", "--j", "3", "--dmax", "32")
    assert code == 0
    assert rows(out) == [{"k": "2", "j": "3", "min_d": "5", "ramos_lower": "5", "theorem2_bound": "5"}]
    code, out, _ = run(capsys, "search", "--k", "1", "--j", "7", "--dmax", "32", "--with-oracle")
    assert code == 0 and rows(out)[0]["min_d"] == "7"
    code, out, _ = run(capsys, "search", "--k", "2", "--j", "2", "--dmax", "3", "--format", "json")
    assert code == 2 and json.loads(out)["min_d"] is None


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--k", "2", "--j", "15", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"k": 2, "j": 15, "ramos_lower": 23, "mvz_upper": 23, "theorem2_bound": 23}


def test_ring_info(capsys):
    code, out, _ = run(capsys, "ring-info", "--d", "4", "--l", "2")
    assert code == 0
    ranks_part, duals_part = out.strip().split("\n\n")
    assert ranks_part.splitlines() == ["degree\trank", "0\t1", "1\t1", "2\t2", "3\t1", "4\t1"]
    assert duals_part.splitlines()[4] == "3\tw1^3"
    _, out, _ = run(capsys, "ring-info", "--d", "5", "--l", "2", "--format", "json")
    obj = json.loads(out)
    assert sum(obj["ranks"]) == 10 and obj["dual_classes"][0] == "1"


def test_dickson(capsys):
    code, out, _ = run(capsys, "dickson", "--k", "2")
    assert code == 0
    assert rows(out)[2] == {"name": "D_2,1", "polynomial": "x2^2 + x1x2 + x1^2"}
    _, out, _ = run(capsys, "dickson", "--k", "3", "--format", "json")
    assert json.loads(out)["polynomials"]["D_3,3"] == "1"


def test_table1_output(capsys):
    code, out, _ = run(capsys, "table1", "--format", "json")
    recs = json.loads(out)
    assert [(r["d"], r["l"], r["k"], r["j"]) for r in recs] == [
        (8, 3, 2, 4), (9, 3, 3, 3), (11, 8, 2, 7), (17, 14, 2, 15), (23, 11, 2, 15), (47, 23, 2, 31),
    ]
    # the exit status reports whether every row was certified
    assert code == (0 if all(r["verdict"] == "certified-admissible" for r in recs) else 1)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "massadmit", "bounds", "--k", "1", "--j", "3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1] == "1\t3\t3\t3\t3"
