import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from dyadic_cone.cli import run
from dyadic_cone.report import ReportRecord


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def records(text):
    return [ReportRecord.from_json(line) for line in text.splitlines() if line]


def test_sigma_example():
    code, out, _ = call("sigma", "--l", "10", "--m", "0", "--k", "2")
    assert code == 0
    [rec] = records(out)
    assert rec.result == "200/3" and rec.status == "ok"


def test_root_example():
    code, out, _ = call("root", "--m", "2", "--bits", "20")
    assert code == 0
    res = records(out)[0].result
    assert res["residue"] == {"mod_exp": 20, "value": 5}
    assert [s["q"] for s in res["trace"][1:]] == [0] * 17


def test_multipliers_example():
    code, out, _ = call("multipliers", "--b", "1", "--dmax", "3")
    assert code == 0
    res = records(out)[0].result
    assert res["dimension"] == 3 and len(res["basis"]) == 3
    assert "1 x^1 y^1 z^1" in res["basis"]


def test_other_subcommands():
    _, out, _ = call("hval", "--l", "10", "--m", "0", "--table")
    res = records(out)[0].result
    assert res["exact"] == "520/63" and res["sigma"][2] == "200/3"
    _, out, _ = call("hmod", "--l", "10", "--m", "0", "--bits", "4")
    assert records(out)[0].result == {"mod_exp": 4, "value": 8}
    _, out, _ = call("divides", "--l", "5", "--m", "2")
    assert records(out)[0].result == {"oracle": True, "holt_ille": True, "agree": True}
    _, out, _ = call("lift", "--m", "4", "--r", "2", "--bits", "3")
    assert records(out)[0].result == {"mod_exp": 4, "value": 2}
    _, out, _ = call("solid", "--l", "5", "--m", "2")
    res = records(out)[0].result
    assert res["real_quotient"] is not None and res["imag_quotient"] is not None
    _, out, _ = call("stability", "--m", "0", "--bits", "3", "--samples", "5")
    res = records(out)[0].result
    assert res["passed"] and res["pairs_checked"] == 5


def test_scan_jsonl_is_ordered_by_m():
    code, out, _ = call("scan", "--m", "2,0", "--bits", "3", "--window", "32")
    assert code == 0
    recs = records(out)
    assert [r.result["m"] for r in recs] == [0, 2]
    assert all(r.result["claim_verified"] for r in recs)


def test_scan_csv():
    code, out, _ = call("scan", "--m", "0", "--bits", "3", "--window", "32", "--csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "l,m,N,residue,exact_value"
    assert "10,0,3,0,520/63" in lines
    assert len(lines) == 33


def test_scan_jobs_matches_serial():
    a = call("scan", "--m", "4", "--bits", "4", "--csv")[1]
    b = call("scan", "--m", "4", "--bits", "4", "--csv", "--jobs", "2")[1]
    assert a == b


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["sigma", "--l", "10", "--m", "0"],
    ["sigma", "--l", "1.5", "--m", "0", "--k", "0"],
    ["multipliers", "--b", "0.5", "--dmax", "3"],
    ["hmod", "--l", "4", "--m", "0", "--bits", "-1"],
    [],
])
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == 1
    assert out == ""
    assert "usage error" in err


def test_usage_error_names_flag():
    _, _, err = call("sigma", "--l", "x", "--m", "0", "--k", "0")
    assert "--l" in err


@pytest.mark.parametrize("argv, name", [
    (["root", "--m", "3", "--bits", "5"], "OddM"),
    (["sigma", "--l", "3", "--m", "4", "--k", "0"], "BadRange"),
    (["lift", "--m", "0", "--r", "3", "--bits", "3"], "NotARoot"),
    (["lift", "--m", "0", "--r", "2", "--bits", "2"], "BadModulus"),
    (["multipliers", "--b", "1/2", "--dmax", "3"], "BadRange"),
    (["scan", "--m", "1", "--bits", "3"], "OddM"),
])
def test_domain_errors(argv, name):
    code, out, err = call(*argv)
    assert code == 2
    [rec] = records(out)
    assert rec.status == "error" and rec.error == name
    assert name in err


def test_max_bits_cap(monkeypatch):
    monkeypatch.setenv("DYADIC_CONE_MAX_BITS", "10")
    assert call("root", "--m", "0", "--bits", "10")[0] == 0
    code, _, err = call("root", "--m", "0", "--bits", "11")
    assert code == 1 and "DYADIC_CONE_MAX_BITS" in err
    monkeypatch.delenv("DYADIC_CONE_MAX_BITS")
    assert call("root", "--m", "0", "--bits", "65")[0] == 1


def test_selftest_quick():
    code, out, _ = call("selftest", "--quick")
    assert code == 0
    recs = records(out)
    assert len(recs) > 5 and all(r.result["passed"] for r in recs)


def test_output_is_deterministic():
    argv = ["root", "--m", "6", "--bits", "8"]
    assert call(*argv)[1] == call(*argv)[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "dyadic_cone", "sigma", "--l", "2", "--m", "0",
                           "--k", "1"], capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["result"] == "-1"


json_leaf = st.one_of(st.none(), st.booleans(), st.integers(), st.text(max_size=10))
json_value = st.recursive(json_leaf, lambda inner: st.one_of(
    st.lists(inner, max_size=4), st.dictionaries(st.text(max_size=6), inner, max_size=4)),
    max_leaves=10)


@given(st.text(min_size=1, max_size=12), st.dictionaries(st.text(max_size=6), json_leaf, max_size=4),
       json_value)
def test_record_round_trips(cmd, params, result):
    rec = ReportRecord(cmd, params, result)
    assert ReportRecord.from_json(rec.to_json()) == rec


@given(st.text(max_size=10), st.text(max_size=30))
def test_error_record_round_trips(name, message):
    rec = ReportRecord("root", {"m": 3}, status="error", error=name, message=message)
    assert ReportRecord.from_json(rec.to_json()) == rec
