import json
import subprocess
import sys

import pytest

from amalgam.cli import main


@pytest.fixture
def fn(tmp_path):
    def write(pieces, name="f.json"):
        path = tmp_path / name
        path.write_text(json.dumps({"pieces": pieces}))
        return str(path)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_norm(capsys, fn):
    code, out, _ = run(capsys, "norm", "--spec", "WL:L:1:L:inf", "--fn", fn([{"a": "0", "b": "2", "c": "3"}]))
    assert code == 0
    assert json.loads(out) == {"spec": "WL:L:1:L:inf", "value": {"kind": "exact", "value": "6"}}


def test_norm_infinite(capsys, fn):
    path = fn([{"a": "1", "b": "inf", "c": "1", "alpha": "-1"}])
    code, out, _ = run(capsys, "norm", "--spec", "L:1", "--fn", path)
    assert code == 0 and json.loads(out)["value"] == {"kind": "infinite"}


def test_rearrange_fixed_point(capsys, fn, tmp_path):
    path = fn([{"a": "0", "b": "1", "c": "1"}, {"a": "2", "b": "3", "c": "1"},
               {"a": "5", "b": "11/2", "c": "4"}])
    code, out, _ = run(capsys, "rearrange", "--fn", path)
    assert code == 0
    assert json.loads(out)["pieces"] == [{"a": "0", "b": "1/2", "c": "4", "alpha": "0"},
                                         {"a": "1/2", "b": "5/2", "c": "1", "alpha": "0"}]
    again = tmp_path / "star.json"
    again.write_text(out)
    code, out2, _ = run(capsys, "rearrange", "--fn", str(again))
    assert out2 == out


def test_pair(capsys, fn):
    a = fn([{"a": "0", "b": "1", "c": "2"}], "a.json")
    b = fn([{"a": "1/2", "b": "2", "c": "3"}], "b.json")
    code, out, _ = run(capsys, "pair", "--fn-a", a, "--fn-b", b, "--spec", "L:1")
    doc = json.loads(out)
    assert code == 0 and doc["raw"]["value"] == "3" and doc["holder"]["pass"]


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "hardy-littlewood", "--seed", "42", "--cases", "50")
    doc = json.loads(out)
    assert code == 0 and doc["verdict"] == "pass" and doc["cases"] == 50


def test_verify_embedding_two_specs(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "embedding", "--cases", "10",
                       "--spec", "WL:L:1:L:2", "--spec", "WL:L:2:L:2")
    doc = json.loads(out)
    assert code == 0 and doc["findings"]["predicted"] is False


def test_witness_chlp(capsys):
    code, out, _ = run(capsys, "witness", "--name", "chlp", "--p", "1/2", "--N", "100")
    doc = json.loads(out)
    assert code == 0 and doc["ratio"]["value"] == "4901/50" and doc["verified"]


@pytest.mark.parametrize("argv", [
    ["witness", "--name", "tem-local", "--pA", "2", "--pB", "3"],
    ["witness", "--name", "tem-global", "--qB", "2", "--qC", "1"],
    ["witness", "--name", "rwnbfs-p4", "--p", "2", "--q", "1", "--N", "300"],
    ["witness", "--name", "rwnbfs-p5", "--p", "1", "--q", "2", "--N", "300", "--b", "3"],
])
def test_witnesses_verify(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and json.loads(out)["verified"]


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["norm", "--spec", "X:1", "--fn", "missing.json"],
    ["norm", "--spec", "L:2", "--fn", "/nonexistent/f.json"],
    ["verify", "--suite", "nope"],
    ["verify", "--suite", "hlp", "--cases", "0"],
    ["witness", "--name", "tem-local", "--pA", "2", "--pB", "2"],
    ["witness", "--name", "rwnbfs-p4", "--p", "2", "--q", "2"],
    ["witness", "--name", "chlp", "--p", "0"],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""
    assert err.startswith("amalgam: error: ") and err.count("\n") == 1


def test_byte_stable_output(capsys):
    argv = ["verify", "--suite", "axioms", "--spec", "WL:L:1:L:1/2", "--seed", "5", "--cases", "20"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_thread_cap_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("AMALGAM_THREADS", "2")
    code, out, _ = run(capsys, "verify", "--suite", "rearrangement", "--cases", "20")
    assert code == 0
    monkeypatch.setenv("AMALGAM_THREADS", "many")
    code, _, err = run(capsys, "verify", "--suite", "rearrangement", "--cases", "20")
    assert code == 2 and "AMALGAM_THREADS" in err


def test_module_entry_point(tmp_path):
    path = tmp_path / "f.json"
    path.write_text('{"pieces": [{"a": "0", "b": "4", "c": "1"}]}')
    proc = subprocess.run([sys.executable, "-m", "amalgam", "norm", "--spec", "L:2", "--fn", str(path)],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["value"] == {"kind": "exact", "value": "2"}
