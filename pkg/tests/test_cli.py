import json
import math
import subprocess
import sys

import numpy as np
import pytest

from specnorm.cli import main, parse_params
from specnorm.matio import read_matrix, write_matrix


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if code == 0 else None), err


def test_norm_trace_k4(capsys):
    code, doc, _ = run(capsys, "norm", "--graph6", "C~", "--trace")
    assert code == 0 and doc["value"] == 6.0
    assert doc["tool"] == "specnorm" and doc["command"][1:] == ["norm", "--graph6", "C~", "--trace"]


@pytest.mark.parametrize("flag,expected", [(["--kyfan", "2"], 4.0), (["--schatten", "2"], math.sqrt(12)),
                                           (["--operator"], 3.0), (["--frobenius"], math.sqrt(12)),
                                           (["--schatten", "inf"], 3.0)])
def test_norm_kinds(capsys, flag, expected):
    code, doc, _ = run(capsys, "norm", "--graph6", "C~", *flag)
    assert code == 0 and doc["value"] == pytest.approx(expected)


def test_norm_matrix_file(capsys, tmp_path):
    f = tmp_path / "a.txt"
    f.write_text("2 3\n1 0 0\n0 2 0\n")
    code, doc, _ = run(capsys, "norm", "--matrix", str(f), "--trace")
    assert doc["value"] == pytest.approx(3)
    code, doc, _ = run(capsys, "bound", "--id", "KM_GRAPH", "--matrix", str(f), "--as-graph")
    assert code == 2


def test_bound_km_k4(capsys):
    code, doc, _ = run(capsys, "bound", "--id", "KM_GRAPH", "--graph6", "C~")
    r = doc["report"]
    assert code == 0 and r["equality"] and r["equality_verdict"] == "holds"


def test_bound_params(capsys):
    code, doc, _ = run(capsys, "bound", "--id", "SCH_GRAPH_UP", "--params", "p=1.5", "--graph6", "D~{")
    assert code == 0 and doc["report"]["params"]["p"] == 1.5
    assert parse_params("k=2,variant=mid,p=1.5") == {"k": 2, "variant": "mid", "p": 1.5}


def test_bound_observational(capsys):
    code, _, err = run(capsys, "bound", "--id", "NG_TRACE_GRAPH", "--graph6", "Dhc")
    assert code == 4 and "n >= 7" in err
    code, doc, _ = run(capsys, "bound", "--id", "NG_TRACE_GRAPH", "--graph6", "Dhc", "--observational")
    assert code == 0 and doc["report"]["observational"]


def test_construct_and_certify(capsys, tmp_path):
    out = tmp_path / "c13.txt"
    code, doc, _ = run(capsys, "construct", "paley-conference", "--q", "13", "--out", str(out))
    assert code == 0 and doc["certificate"]["verdict"] == "pass"
    a = read_matrix(str(out))
    assert np.array_equal(a @ a.T, 13 * np.eye(14))
    code, doc, _ = run(capsys, "certify", "--matrix", str(out))
    assert code == 0 and doc["certificate"]["kind"] == "conference" and doc["certificate"]["verdict"] == "pass"


@pytest.mark.parametrize("argv", [["paley-hadamard", "--q", "7"], ["sylvester", "--k", "3"],
                                  ["sym-hadamard-double", "--q", "5"], ["paley-graph", "--q", "13"],
                                  ["turan", "--n", "7", "--r", "3"], ["rpartite-matrix", "--q", "5", "--k", "2"],
                                  ["rpartite-graph", "--q", "5", "--k", "2"],
                                  ["ng-extremal", "--k", "3", "--t", "2", "--p", "1", "--q", "1"],
                                  ["kyfan-extremal", "--k", "2", "--q", "2", "--r", "3", "--s", "2"]])
def test_construct_kinds(capsys, argv):
    code, doc, _ = run(capsys, "construct", *argv)
    assert code == 0 and doc["construction"] == argv[0]
    if argv[0] in ("paley-hadamard", "sylvester", "sym-hadamard-double"):
        assert doc["certificate"]["verdict"] == "pass"
    if argv[0] in ("paley-graph", "turan", "rpartite-graph"):
        assert doc["graph6"] and doc["order"] == len(doc["matrix"])


def test_construct_unavailable(capsys):
    code, _, err = run(capsys, "construct", "kyfan-extremal", "--k", "2", "--q", "3", "--r", "1", "--s", "1")
    assert code == 5 and err
    code, _, _ = run(capsys, "construct", "paley-conference", "--q", "7")
    assert code == 2
    code, _, _ = run(capsys, "construct", "sylvester")
    assert code == 2


def test_search(capsys):
    code, doc, _ = run(capsys, "search", "--n", "4", "--objective", "energy", "--exhaustive")
    assert code == 0 and doc["result"]["best"] == pytest.approx(6) and doc["result"]["witnesses"] == ["C~"]
    code, doc, _ = run(capsys, "search", "--n", "9", "--objective", "energy", "--sample", "50", "--seed", "4")
    assert code == 0 and doc["seed"] == 4 and doc["result"]["examined"] == 50
    code, _, _ = run(capsys, "search", "--n", "9", "--objective", "energy", "--exhaustive")
    assert code == 2


def test_search_budget(capsys):
    code, _, err = run(capsys, "search", "--n", "7", "--objective", "energy", "--max-graphs", "10")
    assert code == 6
    partial = json.loads(err.strip().splitlines()[-1])
    assert not partial["complete"] and partial["examined"] > 0


def test_curve_and_recover(capsys):
    code, doc, _ = run(capsys, "curve", "--graph6", "C~", "--xs", "1:3:1")
    assert [p["x"] for p in doc["curve"]] == [1, 2, 3]
    assert doc["curve"][0]["value"] == pytest.approx(6)
    code, doc, _ = run(capsys, "recover", "--graph6", "Dhc")
    assert code == 0 and doc["match"] and doc["multiplicities_match"]


def test_ensemble(capsys):
    code, doc, _ = run(capsys, "ensemble", "--n", "50", "--p", "2", "--trials", "2", "--seed", "1")
    assert code == 0 and doc["seed"] == 1 and len(doc["report"]["values"]) == 2


def test_ng(capsys):
    code, doc, _ = run(capsys, "ng", "--graph6", "Dhc", "--trace")
    assert doc["sum"] == pytest.approx(4 * math.sqrt(5) + 4)
    assert doc["bound"]["equality"] and doc["bound"]["observational"]
    code, doc, _ = run(capsys, "ng", "--graph6", "Dhc", "--kyfan", "2")
    assert code == 0 and doc["measure"] == "kyfan(2)"


@pytest.mark.parametrize("argv,code", [
    (["norm", "--graph6", "C~"], 2),
    (["nonsense"], 2),
    (["norm", "--graph6", "C~~~", "--trace"], 3),
    (["norm", "--graph6", "C\x7f", "--trace"], 3),
    (["bound", "--id", "KMB_BIPARTITE", "--graph6", "C~"], 4),
    (["bound", "--id", "NOPE", "--graph6", "C~"], 2),
    (["norm", "--matrix", "/nonexistent/file", "--trace"], 2),
    (["norm", "--graph6", "C~", "--kyfan", "9"], 2),
    (["search", "--n", "4", "--objective", "energy", "--threads", "0"], 2),
])
def test_exit_codes(capsys, argv, code):
    got, _, err = run(capsys, *argv)
    assert got == code and err


def test_bad_matrix_file(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("2 2\n1 x\n0 1\n")
    code, _, err = run(capsys, "norm", "--matrix", str(f), "--trace")
    assert code == 3 and err


def test_pretty_and_threads_anywhere(capsys):
    code = main(["--pretty", "norm", "--graph6", "A_", "--trace"])
    a = capsys.readouterr().out
    code2 = main(["norm", "--graph6", "A_", "--trace", "--pretty", "--threads", "2"])
    b = capsys.readouterr().out
    assert code == code2 == 0 and "\n  " in a and "\n  " in b


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "specnorm", "norm", "--graph6", "@", "--trace"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and json.loads(p.stdout)["value"] == 0.0


def test_written_matrix_round_trip(tmp_path):
    a = np.array([[1, -1], [0, 2]])
    write_matrix(str(tmp_path / "m.txt"), a)
    assert np.array_equal(read_matrix(str(tmp_path / "m.txt")), a)
