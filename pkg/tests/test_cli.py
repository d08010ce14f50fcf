import json
import subprocess
import sys

import pytest

from exsuper.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_g3(capsys):
    code, out, _ = run(capsys, "classify", "--type", "g3", "--char", "5", "--weight", "2,0,5")
    doc = json.loads(out)
    assert code == 0
    assert doc["finite"] is True
    assert doc["method_b"]["clause"] == "ThmG3(3)(i)"
    assert doc["method_a"]["verdict"] == "FINITE"


def test_classify_infinite_reports_witness(capsys):
    code, out, _ = run(capsys, "classify", "--type", "d", "--char", "5", "--zeta", "1", "--weight", "0,1,0")
    doc = json.loads(out)
    assert code == 0 and doc["finite"] is False
    assert doc["method_a"]["witness"] == {"node": 1, "weight": [-1, 2, 1]}
    assert doc["method_b"]["clause"] is None


def test_classify_char0(capsys):
    code, out, _ = run(capsys, "classify", "--type", "f4", "--char", "0", "--weight", "0,3,0,2")
    assert code == 0 and json.loads(out)["finite"] is True


@pytest.mark.parametrize("argv", [
    ["classify", "--type", "f4", "--char", "3", "--weight", "0,0,0,0"],
    ["classify", "--type", "g3", "--char", "9", "--weight", "0,0,0"],
    ["classify", "--type", "d", "--char", "5", "--zeta", "4", "--weight", "0,0,0"],
    ["classify", "--type", "d", "--char", "5", "--zeta", "0", "--weight", "0,0,0"],
    ["classify", "--type", "g3", "--char", "5", "--zeta", "1", "--weight", "0,0,0"],
    ["classify", "--type", "g3", "--char", "5", "--weight", "0,-1,0"],
    ["classify", "--type", "g3", "--char", "5", "--weight", "0,1"],
    ["classify", "--type", "e8", "--char", "5", "--weight", "0,0,0"],
    ["classify", "--type", "d", "--char", "5", "--weight", "0,0,0"],
    ["chain", "--type", "g3", "--char", "5", "--weight", "a,b,c"],
    ["list", "--type", "g3", "--char", "5", "--box", "1,-1,1"],
    ["sweep", "--type", "g3", "--char", "5", "--box", "1,1,1"],
    ["sweep", "--type", "d", "--char", "2", "--box", "1,1,1"],
])
def test_invalid_input_exits_2_without_output(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 2
    assert out == ""


def test_chain_d(capsys):
    code, out, _ = run(capsys, "chain", "--type", "d", "--char", "5", "--zeta", "1", "--weight", "1,0,0")
    nodes = json.loads(out)["nodes"]
    assert code == 0
    assert [n["node"] for n in nodes] == [0, 1, 2, 3]
    assert [n["weight"] for n in nodes[1:]] == [[0, 1, 1]] * 3
    assert nodes[1]["branch"] == "REFLECTED" and nodes[1]["pairing"] == {"q0": "-1", "q1": "-1"}


def test_list(capsys):
    code, out, _ = run(capsys, "list", "--type", "g3", "--char", "5", "--box", "0,12,12")
    assert code == 0
    assert json.loads(out) == [[0, r, s] for r in (0, 5, 10) for s in (0, 5, 10)]


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--type", "g3", "--char", "5", "--box", "4,4,4")
    assert code == 0 and json.loads(out)["mismatches"] == []
    code, out, _ = run(capsys, "verify", "--type", "f4", "--char", "5", "--box", "0,0,3,2")
    assert code == 1 and json.loads(out)["mismatches"]
    code, out, _ = run(capsys, "verify", "--type", "f4", "--char", "5", "--box", "0,0,3,2", "--amended")
    assert code == 0


def test_verify_char0_runs_remark_check(capsys):
    code, out, _ = run(capsys, "verify", "--type", "g3", "--char", "0", "--box", "3,3,3")
    assert code == 0 and json.loads(out)["ctx"] == {"characteristic": 0, "zeta": None}


def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "--type", "d", "--char", "5", "--box", "4,4,4")
    doc = json.loads(out)
    assert code == 0 and [r["ctx"]["zeta"] for r in doc] == [1, 2, 3]


def test_chi(capsys):
    code, out, _ = run(capsys, "chi", "--type", "g3", "--weight", "3,0,0")
    doc = json.loads(out)
    assert code == 0
    assert doc["top"]["weight"] == [3, 0, 0] and doc["top"]["coefficient"] == 1
    assert all(len(pt) == 3 and isinstance(c, int) for pt, c in doc["support"])


def test_output_is_stable(capsys):
    argv = ["chain", "--type", "f4", "--char", "7", "--weight", "1,2,3,1"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_out_file(tmp_path, capsys):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "list", "--type", "f4", "--char", "5", "--box", "0,0,0,0", "--out", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text()) == [[0, 0, 0, 0]]


def test_out_file_untouched_on_error(tmp_path, capsys):
    path = tmp_path / "r.json"
    code, _, _ = run(capsys, "list", "--type", "f4", "--char", "3", "--box", "0,0,0,0", "--out", str(path))
    assert code == 2 and not path.exists()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "exsuper", "classify", "--type", "f4", "--char", "3", "--weight", "0,0,0,0"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 2 and proc.stdout == ""
