"""Smoke test for the `dequant` extension module.

Build and install first:

    maturin build --release -m crates/py/Cargo.toml -o dist
    pip install dist/dequant-*.whl
    python python/smoke_test.py
"""

import csv
import io
import json

import dequant
from dequant import GaussRat, Oracle, Rat, Surd2

ORACLES = ["00", "01", "10", "11"]
CONSTANT = {"00", "11"}


def kind(table):
    return "Constant" if table in CONSTANT else "Balanced"


def test_exact_numbers():
    assert str(Rat(1, 2) + Rat(1, 2)) == "1"
    assert str(Rat(6, -8)) == "-3/4"
    assert GaussRat.parse("-1+i") * GaussRat.parse("1+i") == GaussRat.parse("-2")
    assert str(GaussRat.parse("1+i").conj()) == "1-i"
    assert Surd2(-1, 1) * Surd2(1, 1) == Surd2(1, 0)
    assert str(Surd2(-1, 1) * Surd2(1, -1)) == "-3+2√2"
    try:
        Rat(1, 0)
    except ValueError:
        pass
    else:
        raise AssertionError("zero denominator accepted")


def test_baseline_and_counter():
    for t in ORACLES:
        h = Oracle(t)
        assert h.query_count == 0
        assert dequant.classify_baseline(h) == kind(t)
        assert h.query_count == 2
        assert h.reveal() == t


def test_quantum():
    for t in ORACLES:
        h = Oracle(t)
        probs, verdict = dequant.run_deutsch(h)
        want = ["0", "1", "0", "0"] if t in CONSTANT else ["0", "0", "0", "1"]
        assert [str(p) for p in probs] == want, (t, probs)
        assert verdict == kind(t)
        assert h.query_count == 1
    H = dequant.hadamard4()
    assert H.is_unitary()
    assert H @ H == dequant.oracle_matrix("00")
    assert not H.with_entry(0, 0, GaussRat.parse("1")).is_unitary()
    for t in ORACLES:
        assert dequant.oracle_matrix(t).is_unitary()


def test_kickback_matches_circuit():
    v = [GaussRat.parse(x) for x in ("0", "1", "0", "0")]
    hv = dequant.hadamard4().apply(v)
    for t in ORACLES:
        h1, h2 = Oracle(t), Oracle(t)
        assert dequant.kickback_state(h1) == dequant.apply_oracle(h2, hv)
        assert h1.query_count == h2.query_count == 1


def test_dequantised_solvers():
    gauss = {"00": "2i", "01": "-2", "10": "2", "11": "-2i"}
    surd = {"00": "-3+2√2", "01": "1", "10": "-1", "11": "3-2√2"}
    for t in ORACLES:
        h = Oracle(t)
        verdict, product = dequant.solve_gauss(h)
        assert (verdict, str(product), h.query_count) == (kind(t), gauss[t], 1)
        h = Oracle(t)
        verdict, product = dequant.solve_surd(h)
        assert (verdict, str(product), h.query_count) == (kind(t), surd[t], 1)
        for sign in ("minus", "plus"):
            h = Oracle(t)
            verdict, _ = dequant.solve_gauss_family(h, Rat(-3, 7), sign)
            assert verdict == kind(t) and h.query_count == 1
    h = Oracle("01")
    try:
        dequant.solve_gauss_family(h, Rat(0), "minus")
    except ValueError:
        assert h.query_count == 0
    else:
        raise AssertionError("a = 0 accepted")
    h = Oracle("10")
    assert str(dequant.cf_eval(h, GaussRat.parse("2+3i"))) == "-2-3i"
    assert str(dequant.cf_eval_surd(h, Surd2(1, 1))) == "-1-√2"
    assert h.query_count == 2


def test_reports():
    rows = list(csv.DictReader(io.StringIO(dequant.table("csv"))))
    assert len(rows) == 20
    for row in rows:
        assert row["classification"] == kind(row["oracle"])
        assert int(row["queries"]) == (2 if row["method"] == "baseline" else 1)
    one = json.loads(dequant.run("01", "gauss", format="json"))
    assert one == [
        {"oracle": "01", "method": "gauss", "classification": "Balanced", "queries": 1, "witness": "-2"}
    ]
    ok, summary = dequant.selftest()
    assert ok, summary


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        t()
        print(f"ok  {t.__name__}")
    print(f"{len(tests)} smoke tests passed")
