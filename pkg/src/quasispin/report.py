"""Verification reports, classification tables, and their wire formats.

JSON schema: reports are {"schema_version": 1, "suite": ..., "checks":
[{"id", "status", "witness"?, "wall_time"?}]} with status one of
pass|fail|anomaly, and every failed check carrying a nonempty witness.
Classification tables are {"weight": [lam1, lam2], "states": [{T, tau0,
N, k, case, sigma, slice_dim}]}.  Rationals travel as "p/q" strings,
Q(sqrt2) scalars as {"a": "p/q", "b": "r/s"}; CSV is the flattened
table with the same headers.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .linalg import ExactMatrix
from .scalars import (QuadScalar, format_quad, format_rational,
                      parse_rational)

SCHEMA_VERSION = 1

PASS = "pass"
FAIL = "fail"
ANOMALY = "anomaly"


class Check:
    __slots__ = ("id", "status", "witness", "wall_time")

    def __init__(self, check_id: str, status: str, witness=None, wall_time=None):
        assert status in (PASS, FAIL, ANOMALY)
        if status == FAIL and not witness:
            raise ValueError(f"failed check {check_id} needs a witness")
        self.id = check_id
        self.status = status
        self.witness = witness
        self.wall_time = wall_time

    def to_json(self):
        out = {"id": self.id, "status": self.status}
        if self.witness is not None:
            out["witness"] = serialize_value(self.witness)
        if self.wall_time is not None:
            out["wall_time"] = self.wall_time
        return out


class VerificationReport:
    def __init__(self, suite: str):
        self.suite = suite
        self.checks = []

    def add(self, check_id: str, ok, witness=None, wall_time=None,
            anomaly: bool = False):
        if ok:
            status = PASS
        elif anomaly:
            status = ANOMALY
        else:
            status = FAIL
        self.checks.append(Check(check_id, status, witness, wall_time))

    def add_anomaly(self, check_id: str, witness, wall_time=None):
        self.checks.append(Check(check_id, ANOMALY, witness, wall_time))

    def failed(self):
        return [c for c in self.checks if c.status == FAIL]

    def anomalies(self):
        return [c for c in self.checks if c.status == ANOMALY]

    def exit_code(self) -> int:
        return 1 if self.failed() else 0

    def to_json(self):
        return {"schema_version": SCHEMA_VERSION, "suite": self.suite,
                "checks": [c.to_json() for c in sorted(self.checks,
                                                       key=lambda c: c.id)]}

    def summary_lines(self):
        lines = []
        for c in sorted(self.checks, key=lambda c: c.id):
            bits = f"{c.status.upper():7s} {c.id}"
            if c.status != PASS and c.witness is not None:
                bits += f"  [{_short(serialize_value(c.witness))}]"
            lines.append(bits)
        npass = sum(1 for c in self.checks if c.status == PASS)
        lines.append(f"-- {self.suite}: {npass} pass, "
                     f"{len(self.failed())} fail, "
                     f"{len(self.anomalies())} anomaly")
        return lines


def _short(x, limit=200):
    s = json.dumps(x) if not isinstance(x, str) else x
    return s if len(s) <= limit else s[:limit] + "..."


def serialize_value(x):
    """Recursively map values into the wire format."""
    if isinstance(x, QuadScalar):
        return format_quad(x)
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, ExactMatrix):
        return {"rows": x.rows, "cols": x.cols,
                "entries": [[format_quad(v) for v in row] for row in x.data]}
    if isinstance(x, dict):
        return {str(k): serialize_value(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [serialize_value(v) for v in x]
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return repr(x)


def parse_report(payload) -> VerificationReport:
    if isinstance(payload, (str, bytes)):
        payload = json.loads(payload)
    if payload.get("schema_version") != SCHEMA_VERSION:
        raise ValueError("unsupported report schema version")
    rep = VerificationReport(payload["suite"])
    for c in payload["checks"]:
        rep.checks.append(Check(c["id"], c["status"], c.get("witness"),
                                c.get("wall_time")))
    return rep


# -- classification tables ----------------------------------------------

TABLE_HEADERS = ["T", "tau0", "N", "k", "slice_dim", "case", "sigma"]


def classification_table(weight, states) -> dict:
    return {
        "weight": [format_rational(Fraction(w)) for w in weight],
        "states": [{
            "T": format_rational(s.T),
            "tau0": format_rational(s.tau0),
            "N": format_rational(s.N),
            "k": s.k,
            "slice_dim": s.slice_dim,
            "case": s.case,
            "sigma": s.sigma,
        } for s in states],
    }


def table_to_csv(table: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(TABLE_HEADERS)
    for s in table["states"]:
        writer.writerow([s[h] for h in TABLE_HEADERS])
    return buf.getvalue()


def parse_table(payload) -> dict:
    if isinstance(payload, (str, bytes)):
        payload = json.loads(payload)
    for s in payload["states"]:
        parse_rational(s["T"]), parse_rational(s["tau0"]), parse_rational(s["N"])
    return payload


def genmap_to_json(genmap: dict) -> dict:
    """Generator map as the artifact's JSON matrix format."""
    out = {}
    for g, op in genmap.items():
        m = op.to_matrix() if hasattr(op, "to_matrix") else op
        out[f"F[{g.i},{g.j}]"] = serialize_value(m)
    return out


def write_output(path, payload, fmt: str):
    if fmt == "json":
        text = json.dumps(payload, indent=2, sort_keys=True)
    elif fmt == "csv":
        if not (isinstance(payload, dict) and "states" in payload):
            raise ValueError("csv output only supports classification tables")
        text = table_to_csv(payload)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    with open(path, "w") as fh:
        fh.write(text)
    return text
