import io
import json
import subprocess
import sys

import pytest

from zeonsl2.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_moebius_csv():
    assert call("poset", "--n", "1", "--moebius") == (0, "1,-1\n0,1\n", "")


def test_identity_operator_csv():
    code, out, _ = call("group", "--n", "1", "--s", "0", "--u", "1", "--t", "0")
    assert (code, out) == (0, "1,0\n0,1\n")


def test_spectrum_table():
    code, out, _ = call("spectrum", "--n", "4", "--ell", "2", "--k", "1")
    assert out == "alpha,eigenvalue,multiplicity\n0,4,1\n1,0,3\n2,-2,2\n"
    code, out, _ = call("spectrum", "--n", "4", "--ell", "2", "--k", "1", "--format", "json")
    assert json.loads(out)[2] == {"alpha": "2", "eigenvalue": "-2", "multiplicity": "2"}


def test_rational_group_parameters():
    code, out, _ = call("group", "--n", "1", "--s", "1/2", "--u", "-1/3", "--t", "2")
    # g entries: s^{|I\J|} (u+st)^{|I∩J|} t^{|J\I|}
    assert out == "1,2\n1/2,2/3\n"


def test_labels_and_json():
    code, out, _ = call("op-matrix", "--n", "2", "--op", "T", "--labels")
    assert out.splitlines()[0] == ',"∅","1","2","1,2"'
    code, out, _ = call("op-matrix", "--n", "2", "--op", "U", "--format", "json")
    obj = json.loads(out)
    assert obj["n"] == 2 and obj["order"] == "graded-lex"
    assert [obj["rows"][i][i] for i in range(4)] == ["2", "0", "0", "-2"]


def test_layer_block_option():
    code, out, _ = call("op-matrix", "--n", "3", "--op", "Tj:1", "--ell", "1")
    assert out == "1,1,1\n1,1,1\n1,1,1\n"


def test_scheme_and_krawtchouk():
    assert call("scheme", "--kind", "hamming", "--n", "2", "--j", "2")[1] == "0,0,0,1\n0,0,1,0\n0,1,0,0\n1,0,0,0\n"
    assert call("scheme", "--kind", "johnson", "--n", "3", "--ell", "1", "--k", "1")[1] == "0,1,1\n1,0,1\n1,1,0\n"
    assert call("krawtchouk", "--n", "4", "--j", "2")[1] == "power,coefficient\n0,-2\n1,0\n2,1/2\n"
    a = call("krawtchouk", "--n", "3", "--j", "2", "--matrix")[1]
    b = call("scheme", "--kind", "hamming", "--n", "3", "--j", "2")[1]
    assert a == b


def test_hadamard_methods():
    assert call("hadamard", "--n", "1")[1] == "1,1\n1,-1\n"
    assert call("hadamard", "--n", "2", "--method", "group", "--order", "binary")[1] == call("hadamard", "--n", "2")[1]


def test_zbasis_output():
    code, out, _ = call("zbasis", "--n", "2")
    assert code == 0 and out.count("# |nNij>") == 4
    obj = json.loads(call("zbasis", "--n", "2", "--format", "json")[1])
    assert len(obj["states"]) == 4 and obj["states"][3]["terms"] == {"1,2": "1"}


def test_states_all_layers():
    code, out, _ = call("states", "--n", "2")
    assert out.count("# n=2") == 6


def test_verify_exit_zero():
    code, out, _ = call("verify", "--n", "4", "--suite", "boolean")
    assert code == 0
    assert out.splitlines()[-1].startswith("PASS total")
    assert all(line.startswith("PASS") for line in out.splitlines())


@pytest.mark.parametrize("argv", [
    ("group", "--n", "13", "--s", "1", "--u", "1", "--t", "1"),
    ("op-matrix", "--n", "3", "--op", "E:4"),
    ("group", "--n", "2", "--s", "0.5", "--u", "1", "--t", "1"),
    ("scheme", "--kind", "johnson", "--n", "4"),
    ("spectrum", "--n", "4", "--ell", "5", "--k", "1"),
    ("nonsense",),
    ("verify", "--n", "4", "--suite", "bogus"),
    ("states", "--n", "0"),
])
def test_argument_errors_exit_2(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == ""
    assert err.startswith("zeonsl2: error:") and err.count("\n") == 1


def test_output_file_and_determinism(tmp_path):
    target = tmp_path / "g.csv"
    assert call("group", "--n", "3", "--s", "1", "--u", "1", "--t", "1", "--output", str(target))[1] == ""
    text = target.read_text()
    assert text == call("group", "--n", "3", "--s", "1", "--u", "1", "--t", "1")[1]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "zeonsl2", "poset", "--n", "1"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "1,1\n0,1\n"


def test_verify_all_n6():
    code, out, _ = call("verify", "--n", "6", "--suite", "all")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) >= 30 and all(line.startswith("PASS") for line in lines)


def test_verify_failure_exit_1(monkeypatch):
    from zeonsl2 import verify
    from zeonsl2.report import CheckReport

    def broken(limit):
        rep = CheckReport("deliberately broken")
        rep.record(False, "case 1")
        return rep

    monkeypatch.setitem(verify.SUITES, "boolean", [broken])
    code, out, _ = call("verify", "--n", "3", "--suite", "boolean")
    assert code == 1
    assert out.splitlines()[0] == "FAIL deliberately broken: 0/1"
