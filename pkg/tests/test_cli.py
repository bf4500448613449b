import json
import subprocess
import sys

import pytest

from springerlab.cli import SCHEMA_VERSION, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    doc = json.loads(out)
    assert doc["schema"] == SCHEMA_VERSION and doc["verb"] == argv[0]
    return code, doc


def test_classes_b2(capsys):
    code, doc = run_json(capsys, "classes", "--type", "B", "--rank", "2")
    assert code == 0 and doc["count"] == 4
    assert [c["partition"] for c in doc["classes"]] == [[5], [3, 1, 1], [2, 2, 1], [1, 1, 1, 1, 1]]
    assert [c["special"] for c in doc["classes"]] == [True, True, False, True]


def test_classes_dot(capsys):
    code, out, _ = run(capsys, "classes", "--type", "B", "--rank", "2", "--dot")
    assert code == 0 and out.startswith('digraph "classes B2" {') and out.count("->") == 3


def test_springer_pinned_witness(capsys):
    code, doc = run_json(capsys, "springer", "--type", "B", "--rank", "5", "--bipartition", "([3],[2])")
    assert code == 0
    assert doc["class"] == [7, 3, 1] and doc["usymbol"] == "B:(0 5 / 2)" and doc["special"]


def test_springer_from_partition(capsys):
    code, doc = run_json(capsys, "springer", "--type", "B", "--rank", "5", "--partition", "[7,3,1]")
    assert code == 0 and doc["bipartition"] == {"alpha": [3], "beta": [2]}


def test_usymbol(capsys):
    code, doc = run_json(capsys, "usymbol", "--type", "C", "--rank", "2", "--partition", "[2,2]")
    assert code == 0 and doc["roundtrip"] is True and doc["usymbol"]["type"] == "C"


def test_induce_and_j_induce(capsys):
    code, doc = run_json(capsys, "induce", "--type", "B", "--rank", "4", "--sub", "D4", "--e1", "([2,1],[1])")
    assert code == 0 and len(doc["components"]) == 2 and doc["index"] == 2
    code, doc = run_json(capsys, "j-induce", "--type", "B", "--rank", "4", "--sub", "C2xC2", "--e1", "([1],[1]);([1],[1])")
    assert code == 0 and doc["result"] == {"alpha": [2], "beta": [2]}


def test_check_ws(capsys):
    code, doc = run_json(capsys, "check-ws", "--type", "B", "--rank", "5", "--sub", "C4xC1", "--e1", "([2],[2]);([1],[])")
    assert code == 0 and doc["o0"] == [7, 3, 1] and doc["specially"]


def test_verify_bs_passes(capsys):
    code, doc = run_json(capsys, "verify-bs", "--type", "C", "--rank", "4")
    assert code == 0 and doc["passed"] and doc["checked"] == 46


def test_verify_indsupp_reports_failure(capsys):
    code, doc = run_json(capsys, "verify-indsupp", "--type", "B", "--rank", "3")
    assert code == 1 and not doc["passed"] and doc["counterexamples"][0]["subgroup"] == "B3 <= C1xC2"
    code, doc = run_json(capsys, "verify-indsupp", "--type", "C", "--rank", "3")
    assert code == 0 and doc["passed"]


def test_gamma(capsys):
    code, doc = run_json(capsys, "gamma", "--type", "B", "--rank", "5", "--t", "1")
    assert code == 0 and doc["usymbol"] == "B:(0 2 5 /)" and doc["class"] == [7, 3, 1]


def test_charsheaf_support(capsys):
    code, doc = run_json(capsys, "charsheaf-support", "--type", "B", "--rank", "5", "--t", "1", "--e1", "trivial")
    assert code == 0 and doc["o_A"] == [7, 3, 1] and doc["equals_osc"] is True
    assert doc["multiplicities"] == [{"usymbol": "B:(0 2 5 /)", "defect": 3, "class": [7, 3, 1], "multiplicity": 1}]


def test_osc(capsys):
    code, doc = run_json(capsys, "osc", "--type", "B", "--rank", "5", "--t", "1")
    assert code == 0 and doc["o_sc"] == [7, 3, 1]


def test_mark_order(capsys):
    base = ["mark-order", "--type", "B", "--partition", "[7,5,3,3,1]", "--markable", "[1,3,5,7]"]
    code, doc = run_json(capsys, *base, "--marking", "[1,7]", "--marking", "[3,5]")
    assert code == 0 and doc["geq"] and not doc["leq"]
    code, out, _ = run(capsys, *base, "--dot")
    assert code == 0 and out.startswith("digraph")


def test_superminimal(capsys):
    code, doc = run_json(capsys, "superminimal", "--type", "C", "--partition", "[5,3,1,1]", "--markable", "[1,3,5]")
    assert code == 0 and doc["superminimal"] == [[1], [1, 3], [3, 5]] and doc["rank"] == 3


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["springer", "--type", "B", "--rank", "2"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["classes", "--type", "E", "--rank", "2"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2


def test_domain_errors_exit_1(capsys):
    code, out, err = run(capsys, "usymbol", "--type", "B", "--rank", "2", "--partition", "[4,1]")
    assert code == 1 and out == "" and err.startswith("springerlab usymbol: error:")
    code, _, err = run(capsys, "springer", "--type", "B", "--rank", "2", "--bipartition", "([1],[x])")
    assert code == 1 and "error" in err


def test_out_file(tmp_path, capsys):
    target = tmp_path / "c.json"
    code, out, _ = run(capsys, "classes", "--type", "D", "--rank", "3", "--json", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["group"] == "D3"


def test_identical_commands_give_identical_bytes():
    cmd = [sys.executable, "-m", "springerlab", "classes", "--type", "C", "--rank", "4", "--json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["count"] > 0


def test_verify_all_small(capsys):
    code, doc = run_json(capsys, "verify-all", "--rank", "2")
    assert code == 0 and doc["passed"] and doc["seed"] == 0
