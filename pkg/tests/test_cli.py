import csv
import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from unramified.cli import element_document, parse_element, run
from unramified.oracle import NaiveRing

R1 = NaiveRing(5, 2, 2, (1, 1, 1))


def doc(value, p=5, n=2, N=2, phi=(1, 1, 1)):
    return {"p": str(p), "n": n, "N": N, "phi": [str(c) for c in phi], "value": [str(v) for v in value]}


def call(argv, payload=None, text=None):
    out, err = io.StringIO(), io.StringIO()
    stdin = io.StringIO(text if text is not None else json.dumps(payload))
    code = run(argv, stdin=stdin, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def value_of(out):
    return tuple(int(v) for v in json.loads(out)["value"])


def padded(v):
    v = tuple(v)
    return v + (0,) * (2 - len(v))


elements = st.tuples(st.integers(0, 24), st.integers(0, 24))


@settings(max_examples=50)
@given(elements, elements)
def test_mul_and_add_match_oracle(a, b):
    code, out, _ = call(["mul"], [doc(a), doc(b)])
    assert code == 0 and padded(value_of(out)) == R1.naive_mul(a, b)
    code, out, _ = call(["add"], [doc(a), doc(b)])
    assert code == 0 and padded(value_of(out)) == R1.add(a, b)


@settings(max_examples=50)
@given(elements, st.integers(-3, 5))
def test_frob_matches_oracle(a, k):
    code, out, _ = call(["frob", "--k", str(k)], doc(a))
    assert code == 0 and padded(value_of(out)) == R1.naive_frob(a, k % 2)


@settings(max_examples=50)
@given(elements)
def test_scalar_outputs_match_oracle(a):
    for cmd, want in (("trace", R1.naive_trace(a)), ("norm", R1.naive_norm(a)), ("norm-res", R1.naive_norm(a))):
        code, out, _ = call([cmd], doc(a))
        assert code == 0 and int(out) == want
    code, out, _ = call(["minpoly"], doc(a))
    got = json.loads(out)
    assert got["p"] == "5" and got["N"] == 2
    assert [int(c) for c in got["coeffs"]] == R1.naive_minpoly(a)


@settings(max_examples=50)
@given(elements)
def test_document_round_trip(a):
    code, out, _ = call(["ctx-check"], doc(a))
    (echo,) = json.loads(out)
    assert code == 0 and padded(int(v) for v in echo["value"]) == a
    assert element_document(parse_element(echo)) == echo


def test_inverse_and_teichmuller():
    code, out, _ = call(["inv"], doc([3, 7]))
    assert code == 0 and R1.naive_mul((3, 7), padded(value_of(out))) == (1, 0)
    code, out, _ = call(["teich"], doc([3, 7]))
    assert code == 0 and padded(value_of(out)) == R1.naive_teich((3, 7))


def test_solve_as():
    alpha, beta, gamma = doc([1]), doc([5]), doc([1, 21])
    code, out, _ = call(["solve-as"], [alpha, beta, gamma])
    assert code == 0 and padded(value_of(out)) == (0, 1)


def test_newton_lift_both_input_forms():
    code, out, _ = call(["newton-lift", "--poly", "1,1,1"], doc([4, 4]))
    assert code == 0 and padded(value_of(out)) == (24, 24)
    coeffs = [doc([1]), doc([1]), doc([1])]
    code, out, _ = call(["newton-lift"], coeffs + [doc([4, 4])])
    assert code == 0 and padded(value_of(out)) == (24, 24)


def test_teichmod():
    code, out, _ = call(["teichmod"], doc([0, 1]))
    assert code == 0 and json.loads(out) == {"p": "5", "N": 2, "coeffs": ["1", "1", "1"]}
    code, out, _ = call(["teichmod"], doc([0], n=1, phi=(23, 1)))
    assert json.loads(out)["coeffs"] == ["18", "1"]


def test_file_inputs(tmp_path):
    fa, fb = tmp_path / "a.json", tmp_path / "b.json"
    fa.write_text(json.dumps(doc([0, 1])))
    fb.write_text(json.dumps(doc([0, 1])))
    code, out, _ = call(["mul", str(fa), str(fb)], text="")
    assert code == 0 and value_of(out) == (24, 24)
    code, _, err = call(["mul", str(fa), str(tmp_path / "missing.json")], text="")
    assert code == 1 and json.loads(err)["code"] == "UsageError"


@pytest.mark.parametrize(
    "argv,payload,code,name",
    [
        (["inv"], doc([0, 5]), 2, "NonUnit"),
        (["mul"], [doc([1]), doc([1], N=3)], 1, "ContextMismatch"),
        (["mul"], [doc([1])], 1, "UsageError"),
        (["frob"], doc([1], phi=(1, 0, 1)), 2, "NotIrreducible"),
        (["frob"], doc([1], p=6, phi=(1, 1, 1)), 2, "NotPrime"),
        (["trace"], {**doc([1]), "value": [1]}, 3, "ParseError"),
        (["trace"], {**doc([1]), "value": ["-1"]}, 3, "ParseError"),
        (["trace"], {**doc([1]), "phi": ["1", "1", "2"]}, 3, "ParseError"),
        (["trace"], {**doc([1]), "value": ["1", "2", "3"]}, 3, "ParseError"),
        (["trace"], {"p": "5"}, 3, "ParseError"),
        (["no-such-command"], doc([1]), 1, "UsageError"),
        (["frob", "--k", "x"], doc([1]), 1, "UsageError"),
        (["newton-lift"], doc([4, 4]), 1, "UsageError"),
        (["newton-lift", "--poly", "1,0,1"], doc([1]), 2, "PreconditionFailed"),
    ],
)
def test_exit_codes(argv, payload, code, name):
    got, out, err = call(argv, payload)
    assert got == code and out == ""
    assert json.loads(err)["code"] == name


def test_invalid_json_is_a_parse_error():
    code, _, err = call(["trace"], text="{not json")
    assert code == 3 and json.loads(err)["code"] == "ParseError"


def test_bench_csv_is_well_formed():
    code, out, _ = call(["bench", "--p-list", "5", "--n-list", "2,4", "--N-list", "2", "--reps", "2", "--ops", "mul,frob"], text="")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["op", "p", "n", "N", "reps", "median_ns", "seed"]
    assert {(r["op"], r["n"]) for r in rows} == {("mul", "2"), ("mul", "4"), ("frob", "2"), ("frob", "4")}
    assert all(int(r["median_ns"]) > 0 and r["reps"] == "2" for r in rows)


def test_bench_rejects_unknown_op():
    code, _, err = call(["bench", "--p-list", "5", "--n-list", "2", "--N-list", "2", "--ops", "sqrt"], text="")
    assert code == 1


def test_selftest_small_grid():
    code, out, _ = call(["selftest", "--p-list", "2,3", "--n-list", "1,2", "--N-list", "1,2", "--count", "2"], text="")
    assert code == 0 and out.strip().endswith("selftest passed")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "unramified", "trace"],
        input=json.dumps(doc([0, 1])),
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "24"
