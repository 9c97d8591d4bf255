import io
import json
import subprocess
import sys

import pytest

from hopf72.cli import FAIL, PASS, USAGE, UsageError, parse_params, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_parse_params():
    a = parse_params("1/2,-1/4,-1/4")
    assert a.strings() == ["1/2", "-1/4", "-1/4"]
    assert parse_params("1,2,-3,0,0,0").n == 4
    with pytest.raises(UsageError, match="sum to zero"):
        parse_params("1,1,1")
    with pytest.raises(UsageError, match="bad rational"):
        parse_params("1,a,-1")
    with pytest.raises(UsageError):
        parse_params("1,-1")


@pytest.mark.parametrize("argv", [
    ["build", "-a", "1,2,-2"],
    ["build", "-a", "1,x,-1"],
    ["lattice", "-a", "1,2,-3"],
    ["lattice", "-a", "1,2,-3", "-g", "(14)"],
    ["lattice", "-a", "0,0,0", "-g", "e"],
    ["lattice", "-a", "1,2,-3,0,0,0", "-g", "(12)"],
    ["simples", "-a", "1,2,-3", "--variant", "K"],
    ["simples", "-a", "1,2,-3", "--dot"],
    ["frobnicate", "-a", "0,0,0"],
    ["build"],
])
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == USAGE and out == "" and err.startswith("hopf72: error:")


def test_build_json():
    code, out, _ = call("build", "-a", "1,2,-3")
    assert code == PASS
    d = json.loads(out)
    assert d["schema"] == "hopf72/structure-table/1" and len(d["basis"]) == 72


def test_build_n4_is_bounded_completion():
    code, out, _ = call("build", "-a", "1,2,-3,0,0,0", "--degree-bound", "4")
    d = json.loads(out)
    assert code == PASS and d["schema"] == "hopf72/completion/1"
    assert d["dimension_claimed"] is None and d["truncated"] and len(d["relators"]) == 17


def test_simples_zero():
    code, out, _ = call("simples", "-a", "0,0,0")
    d = json.loads(out)
    assert code == PASS and d["dims"] == [1] * 6 and d["jacobson_dim"] == 66


def test_lattice_dot_and_determinism(tmp_path):
    argv = ["lattice", "-a", "2,-1,-1", "-g", "(12)", "--dot", "--seed", "5"]
    code, out, _ = call(*argv)
    assert code == PASS
    assert out.startswith("// schema: hopf72/lattice-dot/1\ndigraph lattice {")
    assert out.count("->") == 14 and out.count("ellipse") == 2
    assert call(*argv)[1] == out
    code, _, err = call(*argv, "--out", str(tmp_path))
    assert (tmp_path / "lattice.dot").read_text() == out and "wrote" in err


def test_verify_and_quiver():
    code, out, _ = call("verify", "-a", "2,-1,-1")
    d = json.loads(out)
    assert code == PASS and d["schema"] == "hopf72/verify/1"
    assert d["associative"] and all(d["hopf_axioms"].values()) and d["crosscheck"]["passed"]
    code, out, _ = call("verify", "-a", "1,2,-3", "--variant", "K")
    assert code == PASS and json.loads(out)["m3"]["ok"]
    code, out, _ = call("quiver", "-a", "0,0,0")
    d = json.loads(out)
    assert code == PASS and d["verdict"] == "wild" and d["schema"] == "hopf72/quiver/1"


def test_failure_exit_code(monkeypatch):
    import hopf72.repcore as rc

    real = rc.classify_simples

    def broken(a):
        sl = real(a)
        sl.wedderburn_ok = False
        return sl

    monkeypatch.setattr(rc, "classify_simples", broken)
    code, out, err = call("simples", "-a", "1,2,-3")
    assert code == FAIL
    assert json.loads(out)["failures"] == ["wedderburn count"]
    assert json.loads(err)["failures"] == ["wedderburn count"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hopf72", "simples", "-a", "1,1,1"],
                          capture_output=True, text=True)
    assert proc.returncode == USAGE and "sum to zero" in proc.stderr


@pytest.mark.slow
def test_report_subgeneric():
    code, out, _ = call("report", "-a", "2,-1,-1")
    d = json.loads(out)
    assert code == PASS and d["schema"] == "hopf72/report/1" and d["regime"] == "sub-generic"
    assert d["linkage_classes"] == [["e"], ["(12)"], ["(13)", "(23)", "(123)", "(132)"]]
    assert all(c["status"] == "verified" for c in d["claims"])
    assert call("report", "-a", "2,-1,-1")[1] == out
