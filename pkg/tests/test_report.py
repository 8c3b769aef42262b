import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quasispin.report import (ANOMALY, FAIL, PASS, Check, VerificationReport,
                              classification_table, genmap_to_json,
                              parse_report, parse_table, serialize_value,
                              table_to_csv, write_output)
from quasispin.scalars import QuadScalar
from quasispin.tableaux import ClassifiedState


def test_failed_check_requires_witness():
    with pytest.raises(ValueError):
        Check("x", FAIL)
    Check("x", FAIL, {"why": "because"})


def test_report_roundtrip():
    rep = VerificationReport("demo")
    rep.add("a/one", True, wall_time=0.25)
    rep.add("a/two", False, {"difference": "3F[0,-1]"})
    rep.add_anomaly("a/three", {"note": "convention shift"})
    payload = rep.to_json()
    back = parse_report(json.dumps(payload))
    assert back.to_json() == payload
    assert back.exit_code() == 1
    assert [c.status for c in sorted(back.checks, key=lambda c: c.id)] == \
        [PASS, ANOMALY, FAIL]


def test_exit_code_contract():
    rep = VerificationReport("demo")
    rep.add("ok", True)
    assert rep.exit_code() == 0
    rep.add_anomaly("odd", {"n": 1})
    assert rep.exit_code() == 0  # anomalies do not fail the build
    rep.add("bad", False, {"w": 1})
    assert rep.exit_code() == 1


def test_rational_serialization():
    assert serialize_value(Fraction(-1, 2)) == "-1/2"
    assert serialize_value(QuadScalar(Fraction(1, 3), Fraction(-2, 5))) == \
        {"a": "1/3", "b": "-2/5"}


def test_table_serialization_and_roundtrip():
    states = [ClassifiedState(Fraction(0), Fraction(0), Fraction(0), 0, 1,
                              "A", 0)]
    table = classification_table((Fraction(0), Fraction(0)), states)
    assert table["weight"] == ["0", "0"]
    assert table["states"][0] == {"T": "0", "tau0": "0", "N": "0", "k": 0,
                                  "slice_dim": 1, "case": "A", "sigma": 0}
    assert parse_table(json.dumps(table)) == table
    csv_text = table_to_csv(table)
    lines = csv_text.strip().splitlines()
    assert lines[0] == "T,tau0,N,k,slice_dim,case,sigma"
    assert lines[1] == "0,0,0,0,1,A,0"


@given(st.lists(st.tuples(st.integers(-3, 0), st.integers(0, 4)), max_size=6))
def test_table_roundtrip_property(rows):
    states = [ClassifiedState(Fraction(t), Fraction(t), Fraction(0), k,
                              1, "B", 0) for t, k in rows]
    table = classification_table((Fraction(0), Fraction(-1)), states)
    assert parse_table(json.dumps(table)) == table


def test_write_output_json_and_csv(tmp_path):
    states = [ClassifiedState(Fraction(-1), Fraction(0), Fraction(0), 2, 1,
                              "D", 1)]
    table = classification_table((Fraction(-1), Fraction(-2)), states)
    p = tmp_path / "t.json"
    write_output(str(p), table, "json")
    assert json.loads(p.read_text())["weight"] == ["-1", "-2"]
    c = tmp_path / "t.csv"
    write_output(str(c), table, "csv")
    assert c.read_text().startswith("T,tau0,N,k")
    with pytest.raises(ValueError):
        write_output(str(p), table, "xml")


def test_genmap_export():
    from quasispin.fock import build_o5_on_fock
    _, _, genmap = build_o5_on_fock(Fraction(1, 2))
    payload = genmap_to_json(genmap)
    assert len(payload) == 10
    entry = payload["F[-2,-2]"]
    assert entry["rows"] == entry["cols"] == 16
    assert entry["entries"][0][0] == {"a": "1", "b": "0"}  # -N on vacuum
