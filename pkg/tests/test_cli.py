"""End-to-end command line behavior via main(argv)."""
from __future__ import annotations

import json

import pytest

from flipcheck.cli import DEFAULT_MAX_AW, DEFAULT_MAX_INDEX, main, _render_reports, CliConfig
from flipcheck.transitions import Bounds
from flipcheck.verifier import CHECK_XI, Finding, VerifyReport, verify_flip_case
from flipcheck.neighborhoods import Case


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_err(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    capsys.readouterr()
    return exc.value.code


def test_invariant_text(capsys):
    code, out = run(capsys, "invariant", "--type", "cAx4", "--k", "1")
    assert code == 0 and out == "Xi=4 F=15/4\n"
    code, out = run(capsys, "invariant", "--type", "cD3")
    assert code == 0 and out == "Xi=6 F=16/3\n"
    code, out = run(capsys, "invariant", "--type", "cA", "--r", "3", "--k", "2")
    assert code == 0 and out == "Xi=6 F=16/3\n"


def test_invariant_json_csv(capsys):
    code, out = run(capsys, "invariant", "--type", "cE2", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"type": "cE2", "r": 2, "k": 3, "xi": 6, "f": "9/2"}
    code, out = run(capsys, "invariant", "--type", "cE2", "--format", "csv")
    assert out.splitlines() == ["type,r,k,xi,f", "cE2,2,3,6,9/2"]


def test_invariant_usage_errors(capsys):
    assert run_err(capsys, "invariant", "--type", "cA", "--k", "1") == 2
    assert run_err(capsys, "invariant", "--type", "cQ", "--k", "1") == 2
    assert run_err(capsys, "invariant") == 2


def test_graph(capsys):
    code, out = run(capsys, "graph", "--type", "cD2", "--k", "1")
    assert code == 0 and out == "A1+A1\n"
    code, out = run(capsys, "graph", "--type", "cAx4", "--k", "2")
    assert code == 0 and out == "D5\n"
    code, out = run(capsys, "graph", "--type", "cA", "--r", "4", "--k", "2", "--format", "json")
    assert json.loads(out)["graph"] == "A7"


def test_classify_all(capsys):
    code, out = run(capsys, "classify", "--all")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 13
    assert lines[0].startswith("2.2.1.1 ")
    assert lines[-1].startswith("2.2.5 ")
    code, out = run(capsys, "classify", "--all", "--format", "json")
    objs = json.loads(out)
    assert [o["case"] for o in objs] == [
        "2.2.1.1", "2.2.1.2", "2.2.1.3",
        "2.2.1'.1", "2.2.1'.2", "2.2.1'.3", "2.2.1'.4",
        "2.2.2", "2.2.2'", "2.2.3", "2.2.3'", "2.2.4", "2.2.5",
    ]
    assert objs[0]["kinds"] == ["isolated", "divisorial"]
    assert objs[3]["kinds"] == ["divisorial"]


def test_classify_concrete(capsys):
    code, out = run(capsys, "classify", "--case", "2.2.3", "--m", "5", "--k", "2")
    assert code == 0
    assert "mu=5" in out and "Xi=9" in out and "F=39/5" in out
    assert "source=cA(5,1)+cD2(2)" in out and "ex=A4+D4" in out and "ey=D9" in out
    code, out = run(capsys, "classify", "--case", "2.2.1p.2")
    assert code == 0 and out.startswith("2.2.1'.2 ")
    code, out = run(
        capsys, "classify", "--case", "2.2.4",
        "--r1", "2", "--k1", "1", "--r2", "4", "--k2", "1", "--format", "json",
    )
    obj = json.loads(out)
    assert obj["mu"] == 4 and obj["ex"] == "A1+A3" and obj["ey"] == "A5"


def test_classify_usage_errors(capsys):
    assert run_err(capsys, "classify") == 2
    assert run_err(capsys, "classify", "--all", "--case", "2.2.5") == 2
    assert run_err(capsys, "classify", "--all", "--m", "5") == 2
    assert run_err(capsys, "classify", "--case", "9.9") == 2
    assert run_err(capsys, "classify", "--case", "2.2.3", "--m", "5") == 2  # missing k
    assert run_err(capsys, "classify", "--case", "2.2.1.2", "--m", "5") == 2  # stray m


def test_enumerate_json(capsys):
    code, out = run(
        capsys, "enumerate", "--case", "2.2.1.1", "--m", "2", "--k", "1",
        "--format", "json",
    )
    obj = json.loads(out)
    assert code == 0
    assert obj["kind"] == "isolated"  # auto picks the flipping form
    assert obj["targets"] == [[]]
    assert obj["bounds"] == {"max_index": DEFAULT_MAX_INDEX, "max_aw": DEFAULT_MAX_AW}


def test_enumerate_text_and_kind(capsys):
    code, out = run(capsys, "enumerate", "--case", "2.2.1.2")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "case=2.2.1.2 kind=isolated targets=7"
    assert lines[1] == "(none)"
    assert len(lines) == 8
    code, out = run(
        capsys, "enumerate", "--case", "2.2.1.2", "--kind", "divisorial",
    )
    assert out.splitlines()[0] == "case=2.2.1.2 kind=divisorial targets=1"
    code, out = run(
        capsys, "enumerate", "--case", "2.2.2p", "--format", "csv",
    )
    lines = out.splitlines()
    assert lines[0] == "case,kind,params,target"
    assert len(lines) == 9  # 8 targets
    assert lines[1] == "2.2.2',divisorial,,(none)"


def test_enumerate_usage_errors(capsys):
    assert run_err(capsys, "enumerate") == 2
    assert run_err(capsys, "enumerate", "--case", "2.2.1.1", "--m", "2") == 2
    assert run_err(capsys, "enumerate", "--case", "2.2.1.1", "--m", "2",
                   "--k", "1", "--r1", "2") == 2
    assert run_err(capsys, "enumerate", "--case", "2.2.1.1", "--m", "2",
                   "--k", "1", "--kind", "both") == 2
    # a divisorial-only case cannot be forced isolated
    assert run_err(capsys, "enumerate", "--case", "2.2.5", "--kind", "isolated") == 2


def test_verify_single_case(capsys):
    code, out = run(capsys, "verify", "--case", "2.2.1.2")
    assert code == 0
    assert out == ("PASS case=2.2.1.2 kind=isolated pairs_checked=7 "
                   "violations=0 equality_cases=0\n")


def test_verify_both_kinds_json(capsys):
    code, out = run(
        capsys, "verify", "--case", "2.2.1.1", "--kind", "both",
        "--max-index", "4", "--max-aw", "4", "--format", "json",
    )
    objs = json.loads(out)
    assert code == 0
    assert [o["kind"] for o in objs] == ["isolated", "divisorial"]
    assert all(o["violations"] == [] for o in objs)
    assert objs[0]["equality_cases"] != []


def test_verify_all_text(capsys):
    code, out = run(capsys, "verify", "--all", "--max-index", "6", "--max-aw", "6")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 20
    assert all(line.startswith("PASS ") for line in lines[:19])
    assert lines[19].startswith("OVERALL PASS reports=19 ")


def test_verify_csv(capsys):
    code, out = run(
        capsys, "verify", "--case", "2.2.1.1", "--max-index", "6",
        "--max-aw", "6", "--format", "csv",
    )
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "case,kind,check,params,source,target,source_value,target_value"
    want = len(verify_flip_case(Case.C2211, Bounds(6, 6)).equality_cases)
    assert len(lines) == 1 + want


def test_verify_usage_errors(capsys):
    assert run_err(capsys, "verify") == 2
    assert run_err(capsys, "verify", "--all", "--case", "2.2.2") == 2
    assert run_err(capsys, "verify", "--case", "2.2.5", "--kind", "isolated") == 2
    assert run_err(capsys, "verify", "--all", "--max-index", "0") == 2
    assert run_err(capsys, "verify", "--all", "--jobs", "0") == 2


def test_oracle(capsys):
    code, out = run(capsys, "oracle", "--max-index", "6", "--max-aw", "6")
    assert code == 0
    assert out.startswith("PASS case=oracle kind=table pairs_checked=")


def test_out_file(tmp_path, capsys):
    path = tmp_path / "result.txt"
    code, out = run(capsys, "verify", "--case", "2.2.1.2", "--out", str(path))
    assert code == 0 and out == ""
    assert path.read_text().startswith("PASS case=2.2.1.2 ")


def test_byte_determinism(capsys):
    argv = ["verify", "--case", "2.2.1.1", "--max-index", "5", "--max-aw", "5"]
    _, first = run(capsys, *argv)
    _, second = run(capsys, *argv)
    assert first == second
    argv = ["enumerate", "--case", "2.2.3", "--m", "5", "--k", "1", "--format", "csv"]
    _, first = run(capsys, *argv)
    _, second = run(capsys, *argv)
    assert first == second


def test_config_file(tmp_path, capsys):
    cfgfile = tmp_path / "sweep.cfg"
    cfgfile.write_text("# sweep defaults\nmax_index = 4\nmax_aw = 4\nformat = json\n")
    code, out = run(
        capsys, "verify", "--case", "2.2.1.2", "--config", str(cfgfile),
    )
    obj = json.loads(out)
    assert code == 0
    assert obj["bounds"] == {"max_index": 4, "max_aw": 4}
    # explicit flags beat the file
    code, out = run(
        capsys, "verify", "--case", "2.2.1.2", "--config", str(cfgfile),
        "--max-index", "5", "--format", "text",
    )
    assert out.startswith("PASS ")
    bad = tmp_path / "bad.cfg"
    bad.write_text("max_index = 4\nworkers = 3\n")
    assert run_err(capsys, "verify", "--case", "2.2.1.2", "--config", str(bad)) == 2
    noeq = tmp_path / "noeq.cfg"
    noeq.write_text("max_index 4\n")
    assert run_err(capsys, "verify", "--case", "2.2.1.2", "--config", str(noeq)) == 2
    assert run_err(capsys, "verify", "--case", "2.2.1.2", "--config",
                   str(tmp_path / "absent.cfg")) == 2


def test_render_reports_failure_exit_code():
    f = Finding((("m", 3),), (("cA", 3, 1),), (("cA", 9, 9),), CHECK_XI, "3", "81")
    bad = VerifyReport(
        case="2.2.1.1", kind="isolated", bounds=Bounds(4, 4),
        ranges=(("m", 2, 4), ("k", 1, 4)), pairs_checked=5,
        violations=(f,), equality_cases=(), wall_time_ms=1,
    )
    cfg = CliConfig(bounds=Bounds(4, 4), format="text", out=None, jobs=1, kind="auto")
    code, text = _render_reports([bad], cfg)
    assert code == 1
    assert text.startswith("FAIL case=2.2.1.1 ")
    cfg = CliConfig(bounds=Bounds(4, 4), format="csv", out=None, jobs=1, kind="auto")
    code, text = _render_reports([bad], cfg)
    assert code == 1
    assert "xi-monotone" in text and "m=3" in text
