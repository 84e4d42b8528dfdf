import io
import json
import subprocess
import sys

import jsonschema
import pytest
from hypothesis import given, settings, strategies as st

import invhilbert.cli as cli
import invhilbert.hilbert as h
from invhilbert.cli import ENVELOPE_SCHEMA, golden_data, run
from invhilbert.counting import f_fast
from invhilbert.errors import ConsistencyError
from invhilbert.partitions import enumerate_partitions, format_partition


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def envelope(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    doc = json.loads(out)
    jsonschema.validate(doc, ENVELOPE_SCHEMA)
    return doc


def test_hilbert_tensor_rational():
    doc = envelope("hilbert", "tensor", "--dim-v", "2", "--dim-w", "2", "--terms", "7", "--method", "rational")
    assert doc["result"]["coefficients"] == ["1", "1", "4", "6", "16", "23", "52", "77"]
    assert doc["exact"] is True
    assert doc["method"] == "rational"
    assert "rational" in doc["result"]


def test_kronecker_trivial():
    doc = envelope("kronecker", "--lambda", "2", "--mu", "2", "--nu", "2")
    assert doc["result"] == {"type": "integer", "value": "1"}


def test_kronecker_decomposition_text():
    code, out, _ = call("kronecker", "--lambda", "2,1", "--mu", "2,1", "--format", "text")
    assert code == 0
    assert out.split("\n")[:3] == ["3: 1", "2,1: 1", "1,1,1: 1"]


@pytest.mark.slow
def test_verify_tensor22_full():
    code, out, _ = call("verify", "--suite", "tensor22", "--terms", "100")
    assert code == 0
    report = json.loads(out)["result"]
    assert report["passed"] and report["first_mismatch"] is None


def test_verify_mismatch_exits_1(monkeypatch):
    monkeypatch.setattr(h, "golden_data", lambda: (1, 2, 3))
    code, out, _ = call("verify", "--suite", "tensor22", "--terms", "2")
    assert code == 1
    assert json.loads(out)["result"]["first_mismatch"]["n"] == "1"


def test_internal_inconsistency_exits_1(monkeypatch):
    def broken(*args, **kwargs):
        raise ConsistencyError("bad")
    monkeypatch.setattr(cli, "kronecker", broken)
    code, _, err = call("kronecker", "--lambda", "2", "--mu", "2", "--nu", "2")
    assert code == 1 and "inconsistency" in err


@pytest.mark.parametrize("argv", [
    [],
    ["bogus"],
    ["kronecker", "--lambda", "2", "--mu", "3", "--nu", "2"],
    ["kronecker", "--lambda", "1,2", "--mu", "3", "--nu", "3"],
    ["count", "f", "--i", "0", "--j", "0", "--n", "13", "--method", "brute"],
    ["count", "g", "--i", "0", "--n", "2", "--k", "0"],
    ["hilbert", "tensor", "--dim-v", "2", "--dim-w", "3", "--terms", "3", "--method", "counting"],
    ["lr", "--shapes", "1;1;1", "--target", "2,1", "--method", "tableaux"],
    ["verify", "--suite", "nope", "--terms", "3"],
    ["--format", "xml", "partitions", "--n", "3"],
])
def test_usage_errors_exit_2(argv):
    code, _, err = call(*argv)
    assert code == 2
    assert "usage" in err


def test_brute_cap_flag_and_env(monkeypatch):
    code, _, _ = call("--brute-cap", "2", "count", "f", "--i", "0", "--j", "0", "--n", "3", "--method", "brute")
    assert code == 2
    monkeypatch.setenv("INVHILBERT_BRUTE_CAP", "2")
    assert call("count", "f", "--i", "0", "--j", "0", "--n", "3", "--method", "brute")[0] == 2
    # a flag beats the environment
    doc = envelope("count", "f", "--i", "0", "--j", "0", "--n", "3", "--method", "brute", "--brute-cap", "5")
    assert doc["result"]["value"] == str(f_fast(0, 0, 3))


def test_format_env(monkeypatch):
    monkeypatch.setenv("INVHILBERT_FORMAT", "csv")
    code, out, _ = call("partitions", "--n", "3")
    assert out.splitlines() == ["index,partition", "0,3", "1,\"2,1\"", "2,\"1,1,1\""]
    code, out, _ = call("partitions", "--n", "3", "--format", "text")
    assert out.splitlines() == ["3", "2,1", "1,1,1"]
    monkeypatch.setenv("INVHILBERT_FORMAT", "yaml")
    assert call("partitions", "--n", "3")[0] == 2


def test_threads_env(monkeypatch):
    monkeypatch.setenv("INVHILBERT_THREADS", "zero")
    assert call("hilbert", "tuples", "--d", "2", "--k", "1", "--terms", "3")[0] == 2
    monkeypatch.setenv("INVHILBERT_THREADS", "2")
    doc = envelope("hilbert", "tuples", "--d", "2", "--k", "1", "--terms", "5")
    assert doc["result"]["coefficients"] == ["1", "1", "2", "2", "3", "3"]


def test_other_commands():
    assert envelope("character", "--lambda", "2,1", "--rho", "3")["result"]["value"] == "-1"
    assert envelope("lr", "--shapes", "1;1;1", "--target", "2,1")["result"]["value"] == "2"
    assert envelope("lr", "--shapes", "2,1;2,1", "--target", "3,2,1", "--method", "tableaux")["result"]["value"] == "2"
    z = envelope("zel", "star", "--left", "2,1", "--right", "2,1")["result"]
    assert z["text"] == "x2*x1 + x1^3"
    assert envelope("count", "g", "--i", "0", "--n", "1", "--k", "1")["result"]["value"] == "2"
    cf = envelope("hilbert", "tuples", "--d", "2", "--k", "3", "--terms", "4", "--method", "closed-form")
    assert cf["result"]["rational"]["numerator"] == ["1", "-1", "1"]
    gold = envelope("golden")["result"]["coefficients"]
    assert [int(v) for v in gold] == list(golden_data())


def test_csv_series_and_report():
    code, out, _ = call("--format", "csv", "hilbert", "tensor", "--dim-v", "2", "--dim-w", "2",
                        "--terms", "3", "--method", "counting")
    assert out.splitlines() == ["degree,coefficient", "0,1", "1,1", "2,4", "3,6"]
    code, out, _ = call("--format", "csv", "verify", "--suite", "tuples", "--terms", "4")
    assert code == 0
    assert out.splitlines()[0] == "check,passed,skipped,detail,method,n,expected,got"


def _same_weight_args(n):
    return st.sampled_from([format_partition(p) for p in enumerate_partitions(n)])


invocations = st.one_of(
    st.integers(0, 8).map(lambda n: ["partitions", "--n", str(n)]),
    st.integers(1, 6).flatmap(lambda n: st.tuples(_same_weight_args(n), _same_weight_args(n))).map(
        lambda p: ["character", "--lambda", p[0], "--rho", p[1]]),
    st.integers(1, 6).flatmap(lambda n: st.tuples(_same_weight_args(n), _same_weight_args(n))).map(
        lambda p: ["kronecker", "--lambda", p[0], "--mu", p[1]]),
    st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(0, 6)).map(
        lambda t: ["count", "f", "--i", str(t[0]), "--j", str(t[1]), "--n", str(t[2])]),
    st.tuples(st.integers(-4, 4), st.integers(0, 6), st.integers(1, 3)).map(
        lambda t: ["count", "g", "--i", str(t[0]), "--n", str(t[1]), "--k", str(t[2])]),
    st.tuples(st.integers(1, 3), st.integers(1, 3), st.integers(0, 6)).map(
        lambda t: ["hilbert", "tensor", "--dim-v", str(t[0]), "--dim-w", str(t[1]), "--terms", str(t[2])]),
    st.tuples(st.integers(1, 4), st.integers(0, 10), st.sampled_from(["lr", "counting", "closed-form"])).map(
        lambda t: ["hilbert", "tuples", "--d", "2", "--k", str(t[0]), "--terms", str(t[1]), "--method", t[2]]),
    st.tuples(st.lists(st.integers(1, 3), max_size=3), st.lists(st.integers(1, 3), max_size=3)).filter(
        lambda t: sum(t[0]) == sum(t[1])).map(
        lambda t: ["zel", "star", "--left", ",".join(map(str, t[0])), "--right", ",".join(map(str, t[1]))]),
)


@settings(max_examples=80)
@given(invocations)
def test_json_output_follows_schema(argv):
    code, out, err = call(*argv)
    assert code == 0, err
    doc = json.loads(out)
    jsonschema.validate(doc, ENVELOPE_SCHEMA)
    assert json.loads(json.dumps(doc)) == doc
    # deterministic for fixed inputs
    assert call(*argv)[1] == out


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "invhilbert.cli", "kronecker", "--lambda", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
    proc = subprocess.run([sys.executable, "-m", "invhilbert.cli", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0 and "semicolon" in proc.stdout
