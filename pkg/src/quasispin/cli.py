"""Command-line driver and verification orchestration.

Subcommands:
  verify identities --n {1,2,3} [--slow] [--seed S]
  fock build --j {1/2,3/2,5/2}
  repr analyze --source {fock,defining-power} [--j J] [--power P]
  classify --weight L1,L2
  probe conventions

Exit codes: 0 all checks pass (anomalies allowed), 1 some check failed,
2 usage error.  --out writes the report or table, --format json|csv.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction
from itertools import combinations

from . import fock, replab, tableaux
from .liealg import (canonical_generators, defining_matrices, index_range,
                     o3_subalgebra_generators, weyl_dimension, Weight)
from .report import (VerificationReport, classification_table,
                     genmap_to_json, serialize_value, write_output)
from .scalars import quad
from .uea import (CheckResult, IndexSet, UEAElement, capelli,
                  check_corollary_split, check_lemma_l2, check_minorn,
                  check_split_formula, evaluate_in_representation, hat_set,
                  normal_order_rightmost, pf_hat_star_expression, pfaffian,
                  weight_shift_of)

DEFAULT_SEED = 20120521


def _timed(report, check_id, fn, anomaly=False):
    t0 = time.perf_counter()
    ok, witness = fn()
    report.add(check_id, ok, witness, round(time.perf_counter() - t0, 6),
               anomaly=anomaly)
    return ok


def _sym_check(report, result: CheckResult, oracle=None):
    """Record a symbolic identity check plus its matrix-oracle shadow."""
    t0 = time.perf_counter()
    wit = None if result.equal else {"difference": repr(result.witness)}
    report.add(f"sym/{result.name}", result.equal, wit,
               round(time.perf_counter() - t0, 6))
    if oracle is not None:
        genmap, dim = oracle
        ok = result.matrix_oracle(genmap, dim)
        report.add(f"oracle/{result.name}", ok,
                   None if ok else {"matrix_mismatch": result.name})


# -- verify identities ----------------------------------------------------


def suite_identities(n: int, slow: bool = False, seed: int = DEFAULT_SEED):
    report = VerificationReport(f"identities(o_{2 * n + 1})")
    rng = random.Random(seed)
    gens = canonical_generators(n)
    oracle = (defining_matrices(n), 2 * n + 1)
    idx = index_range(n)

    # commutator lemma, exhaustive over small even index sets
    sizes = [2, 4] if n >= 2 else [2]
    if slow and n >= 3:
        sizes.append(6)
    for size in sizes:
        ok_all, first_bad = True, None
        t0 = time.perf_counter()
        count = 0
        for combo in combinations(idx, size):
            I = IndexSet(combo, n)
            for j1 in idx:
                for j2 in idx:
                    if j1 == j2:
                        continue
                    r = check_lemma_l2(I, j1, j2)
                    count += 1
                    if not r:
                        ok_all = False
                        first_bad = first_bad or repr(r.witness)
                    if not r.matrix_oracle(*oracle):
                        ok_all = False
                        first_bad = first_bad or f"oracle {r.name}"
        report.add(f"lemma-l2/size-{size}", ok_all,
                   None if ok_all else {"witness": first_bad, "cases": count},
                   round(time.perf_counter() - t0, 3))

    # splitting formulas
    if n >= 2:
        for combo in combinations(idx, 4):
            I = IndexSet(combo, n)
            for (p, q) in ((2, 2), (4, 0), (0, 4)):
                _sym_check(report, check_split_formula(I, p, q), oracle)
            _sym_check(report, check_corollary_split(I), oracle)
        for size in (2, 4):
            for combo in combinations(idx, size):
                if -n not in combo:
                    continue
                _sym_check(report, check_minorn(IndexSet(combo, n)), oracle)
    if slow and n >= 3:
        big = IndexSet([-3, -2, -1, 0, 1, 2], n)
        for (p, q) in ((2, 4), (4, 2), (6, 0)):
            _sym_check(report, check_split_formula(big, p, q), oracle)
        _sym_check(report, check_minorn(big), oracle)

    # Capelli centrality
    ks = [2] if n == 1 else [2, 4]
    for k in ks:
        t0 = time.perf_counter()
        c = capelli(k, n)
        bad = []
        for g in gens:
            d = c.commutator(UEAElement.gen(g)).normal_order()
            if not d.is_zero():
                bad.append(repr(g))
            m = evaluate_in_representation(
                c.commutator(UEAElement.gen(g)), *oracle)
            if not m.is_zero():
                bad.append(f"oracle:{g!r}")
        report.add(f"capelli/C{k}-central", not bad,
                   None if not bad else {"noncommuting": bad},
                   round(time.perf_counter() - t0, 3))

    # weight shifts of Pfaffians
    t0 = time.perf_counter()
    bad = []
    for size in range(2, 2 * n + 2, 2):
        for combo in combinations(idx, size):
            I = IndexSet(combo, n)
            shift = weight_shift_of(pfaffian(I))
            want = Weight.zero(n)
            for i in combo:
                want = want - Weight.e(i, n)
            if pfaffian(I).is_zero():
                continue
            if shift != want:
                bad.append(str(combo))
    for sign, label in ((1, "nhat"), (-1, "-nhat")):
        shift = weight_shift_of(pfaffian(hat_set(n, sign)))
        want = Weight.e(n, n) if sign > 0 else -Weight.e(n, n)
        if shift != want:
            bad.append(label)
    report.add("pfaffian/weight-shifts", not bad,
               None if not bad else {"mixed_or_wrong": bad},
               round(time.perf_counter() - t0, 3))

    # o3 commutation of the hat Pfaffians
    sub = o3_subalgebra_generators(n)
    for sign, label in ((1, "nhat"), (-1, "-nhat")):
        pf = pfaffian(hat_set(n, sign))
        bad = [repr(g) for g in sub
               if not pf.commutator(UEAElement.gen(g)).normal_order().is_zero()]
        report.add(f"pfaffian/{label}-commutes-with-o{2 * n - 1}", not bad,
                   None if not bad else {"noncommuting": bad})

    # star-product dictionary expressions (o5 only)
    if n == 2:
        for sign, label in ((1, "2hat"), (-1, "-2hat")):
            expr = pf_hat_star_expression(n, sign)
            r = CheckResult(f"star-{label}", pfaffian(hat_set(n, sign)), expr)
            _sym_check(report, r, oracle)

    # PBW confluence evidence on random words
    t0 = time.perf_counter()
    bad = []
    for trial in range(40):
        length = rng.randint(2, 4)
        word = tuple(rng.choice(gens) for _ in range(length))
        x = UEAElement(n, {word: Fraction(1)})
        a = x.normal_order()
        b = normal_order_rightmost(x)
        if not (a - b).is_zero() or not (a.normal_order() - a).is_zero():
            bad.append(repr(word))
        if not (evaluate_in_representation(x, *oracle)
                == evaluate_in_representation(a, *oracle)):
            bad.append(f"oracle:{word!r}")
    report.add("pbw/confluence-random", not bad,
               None if not bad else {"words": bad},
               round(time.perf_counter() - t0, 3))

    # bilinearity spot checks of the concatenation product
    bad = []
    for trial in range(10):
        xs = [UEAElement.gen(rng.choice(gens)) for _ in range(3)]
        lhs = (xs[0] + xs[1]) * xs[2]
        rhs = xs[0] * xs[2] + xs[1] * xs[2]
        if not (lhs - rhs).normal_order().is_zero():
            bad.append(trial)
    report.add("uea/bilinearity", not bad, None if not bad else {"trials": bad})
    return report


# -- fock ----------------------------------------------------------------


def suite_fock(j) -> VerificationReport:
    report = VerificationReport(f"fock(j={j})")
    t0 = time.perf_counter()
    space = fock.FockSpace(j)
    report.add("fock/car-relations", not space.car_violations(),
               {"violations": [str(v) for v in space.car_violations()]}
               if space.car_violations() else None,
               round(time.perf_counter() - t0, 3))
    ops = fock.quasispin_operators(space)
    vac = space.vacuum()
    nvac = ops["N"].apply(vac)
    want = {0: quad(-Fraction(2 * Fraction(j) + 1, 2))}
    report.add("fock/number-on-vacuum", nvac == want,
               None if nvac == want else {"got": serialize_value(nvac)})
    genmap = fock.dictionary_to_o5(ops)
    t0 = time.perf_counter()
    viol = fock.verify_representation(genmap)
    report.add("fock/bracket-table-45-pairs", not viol,
               None if not viol else {"pairs": [f"{a!r},{b!r}" for a, b in viol]},
               round(time.perf_counter() - t0, 3))
    report.add_anomaly("fock/corrected-formulas",
                       {"note": "conventional tau0/A(0)/B(0)/B(1) and the "
                                "dictionary signs of A(1)/B(1) corrected; "
                                "B(X) realized as the adjoint of A(X)",
                        "formulas": fock.CORRECTED_FORMULAS,
                        "dictionary": {f"F[{i},{k}]": (name, str(c))
                                       for (i, k), (name, c)
                                       in fock.DICTIONARY.items()}})
    # represented Pfaffians match the star-product expressions
    for sign, label in ((1, "2hat"), (-1, "-2hat")):
        t0 = time.perf_counter()
        lhs = _rep_of(pfaffian(hat_set(2, sign)), genmap, space.dim)
        rhs = _rep_of(pf_hat_star_expression(2, sign), genmap, space.dim)
        report.add(f"fock/star-expression-{label}", lhs == rhs,
                   None if lhs == rhs else {"mismatch": label},
                   round(time.perf_counter() - t0, 3))
    # matrix-level o3 commutation of the hat Pfaffians
    sub = o3_subalgebra_generators(2)
    for sign, label in ((1, "2hat"), (-1, "-2hat")):
        pf_op = _rep_of(pfaffian(hat_set(2, sign)), genmap, space.dim)
        bad = [repr(g) for g in sub
               if not pf_op.commutator(genmap[g]).is_zero()]
        report.add(f"fock/pf-{label}-commutes-with-o3", not bad,
                   None if not bad else {"noncommuting": bad})
    return report, genmap


def _rep_of(x: UEAElement, genmap: dict, dim: int):
    from .linalg import LinOp
    out = LinOp(dim)
    ident = LinOp.identity(dim)
    for w, c in x.terms.items():
        m = ident
        for g in w:
            m = m @ genmap[g]
        out = out + m.scale(Fraction(c))
    return out


# -- repr analyze ---------------------------------------------------------


def build_source(source: str, j=None, power=None) -> replab.Representation:
    if source == "fock":
        return replab.fock_representation(Fraction(j))
    if source == "defining-power":
        return replab.tensor_power_representation(int(power))
    raise ValueError(f"unknown source {source!r}")


def suite_repr(rep: replab.Representation) -> VerificationReport:
    report = VerificationReport(f"repr({rep.label})")
    t0 = time.perf_counter()
    irreps = replab.extract_irreps(rep)
    total = sum(i.dim for i in irreps)
    report.add("repr/dimension-accounting", total == rep.dim,
               None if total == rep.dim else
               {"sum": total, "ambient": rep.dim},
               round(time.perf_counter() - t0, 3))
    bad = [str(i.highest_weight) for i in irreps
           if i.dim != weyl_dimension(*i.highest_weight)]
    report.add("repr/weyl-dimensions", not bad,
               None if not bad else {"irreps": bad})
    for irr in irreps:
        key = f"{irr.highest_weight[0]},{irr.highest_weight[1]}"
        slices = replab.multiplicity_slices(irr)
        counts_ok = True
        for (T, N), s in slices.items():
            rect = tableaux.Rectangle(irr.highest_weight[0],
                                      irr.highest_weight[1], T)
            info = rect.slice_points(N)
            model_dim = len(info[2]) if info else 0
            if model_dim != s.dim:
                counts_ok = False
        report.add(f"repr/{key}/slice-tableau-counts", counts_ok,
                   None if counts_ok else {"irrep": key})
        t0 = time.perf_counter()
        pr = replab.extremal_projector_o3(irr)
        P = pr.matrix
        e = irr.genmats[replab.O3_RAISING]
        f = irr.genmats[replab.O3_LOWERING]
        ok = (P @ P) == P and (e @ P).is_zero() and (P @ f).is_zero()
        report.add(f"repr/{key}/extremal-projector", ok,
                   None if ok else {"irrep": key},
                   round(time.perf_counter() - t0, 3))
        if pr.singular_weights:
            report.add_anomaly(
                f"repr/{key}/projector-series-singular",
                {"weights": [str(tuple(map(str, w.comps)))
                             for w in pr.singular_weights],
                 "note": "series denominators vanish there; the algebraic "
                         "projector is used and cross-checked on the "
                         "nonsingular blocks"})
        t0 = time.perf_counter()
        om = replab.omega_operator(irr)
        conj = (om @ irr.pf_matrix(-1)) == (irr.pf_matrix(+1) @ om).scale(-1)
        report.add(f"repr/{key}/omega-conjugates-pfaffians", conj,
                   None if conj else {"irrep": key},
                   round(time.perf_counter() - t0, 3))
        om2 = om @ om
        central = all((om2 @ irr.genmats[g]) == (irr.genmats[g] @ om2)
                      for g in irr.genmats)
        report.add(f"repr/{key}/omega-squared-central", central,
                   None if central else {"irrep": key})
        # machine-readable slice data: dimensions and Pfaffian map ranks
        slice_data = {}
        for T in sorted({t for (t, _) in slices}):
            ups, downs = replab.pf_slice_maps(irr, T)
            for N in sorted(ups):
                slice_data[f"T={T},N={N}"] = {
                    "dim": slices[(T, N)].dim,
                    "up_rank": ups[N].rank,
                    "down_rank": downs[N].rank,
                }
        report.add(f"repr/{key}/slice-data", True, slice_data)
    return report, irreps


# -- classify -------------------------------------------------------------

STANDARD_SOURCES = (
    ("fock", Fraction(1, 2), None),
    ("fock", Fraction(3, 2), None),
    ("defining-power", None, 1),
    ("defining-power", None, 2),
    ("defining-power", None, 3),
    ("defining-power", None, 0),
)


def find_irrep(lam1, lam2):
    """Locate an irrep with the given highest weight in the standard sources."""
    for source, j, power in STANDARD_SOURCES:
        rep = build_source(source, j=j, power=power)
        for irr in replab.extract_irreps(rep):
            if irr.highest_weight == (Fraction(lam1), Fraction(lam2)):
                return irr
    return None


def suite_classify(lam1, lam2):
    report = VerificationReport(f"classify({lam1},{lam2})")
    t0 = time.perf_counter()
    ntab = len(tableaux.enumerate_tableaux(lam1, lam2))
    wd = weyl_dimension(lam1, lam2)
    report.add("classify/tableau-count", ntab == wd,
               None if ntab == wd else {"tableaux": ntab, "weyl": wd},
               round(time.perf_counter() - t0, 3))
    irr = find_irrep(lam1, lam2)
    if irr is None:
        report.add("classify/realization", False,
                   {"error": f"no standard source realizes ({lam1},{lam2})"})
        return report, None
    t0 = time.perf_counter()
    try:
        result = tableaux.validate_against_representation(irr)
    except tableaux.ClassificationError as ex:
        report.add("classify/assign-k", False, {"error": str(ex)})
        return report, None
    states = result["states"]
    report.add("classify/assign-k", True, None,
               round(time.perf_counter() - t0, 3))
    labels = [s.label() for s in states]
    ok = len(labels) == len(set(labels)) == irr.dim
    report.add("classify/labels-distinct-complete", ok,
               None if ok else {"labels": len(labels), "dim": irr.dim})
    report.add("classify/case-pattern", not result["case_mismatches"],
               None if not result["case_mismatches"]
               else {"mismatches": serialize_value(result["case_mismatches"])})
    for anom in result["anomalies"]:
        report.add_anomaly(f"classify/{anom['kind']}", serialize_value(anom))
    report.add("classify/gamma-single-winner",
               result["gamma_winner"] in ("proof-text", "definition", "tie"),
               None if result["gamma_winner"] != "none"
               else {"winner": result["gamma_winner"]})
    table = classification_table(irr.highest_weight, states)
    table["gamma_winner"] = result["gamma_winner"]
    return report, table


# -- probes ---------------------------------------------------------------


def suite_probe():
    report = VerificationReport("probe(conventions)")
    winners = {}
    seen = set()
    for source, j, power in STANDARD_SOURCES:
        rep = build_source(source, j=j, power=power)
        for irr in replab.extract_irreps(rep):
            if irr.highest_weight in seen:
                continue
            seen.add(irr.highest_weight)
            key = f"{irr.highest_weight[0]},{irr.highest_weight[1]}"
            probe = replab.tps_scalar_probe(irr)
            sym_rows = probe["pf_sym_scalar"]
            all_match_f11 = all(r["matches_F11_eigenvalue"] for r in sym_rows)
            any_match_d1 = any(r["matches_D1"] for r in sym_rows)
            report.add(f"probe/{key}/pf-sym-acts-as-F11", all_match_f11,
                       None if all_match_f11 else serialize_value(sym_rows))
            if sym_rows and not any_match_d1:
                report.add_anomaly(
                    f"probe/{key}/D1-convention-shift",
                    {"note": "PfF_{-1,1} acts as F_11, not as "
                             "D_1(F_11) = F_11 + 1/2",
                     "rows": serialize_value(sym_rows)})
            if probe["c_constant"]:
                report.add_anomaly(
                    f"probe/{key}/c-constant-measured",
                    {"note": "scalar c(T) with p.PfF_2hat = c(T) p.F_20 "
                             "on o3-highest vectors; measured, since the "
                             "received closed forms are ambiguous",
                     "fits_c(T)=1-T": probe["c_fits_one_minus_T"],
                     "rows": serialize_value(probe["c_constant"])})
            val = tableaux.validate_against_representation(irr)
            winners.setdefault(val["gamma_winner"], []).append(key)
            report.add_anomaly(
                f"probe/{key}/roundtrip-charpolys",
                {f"T={t},N={nn}": [serialize_value(c) for c in cp]
                 for (t, nn), cp in val["roundtrip_charpolys"].items()})
    decisive = [w for w in winners if w not in ("tie",)]
    report.add("probe/gamma-winner-unique",
               len(decisive) == 1 and decisive[0] != "none",
               None if len(decisive) == 1 else {"winners": winners})
    if len(decisive) == 1:
        report.add_anomaly("probe/gamma-winner",
                           {"convention": decisive[0],
                            "support": winners.get(decisive[0], []),
                            "undecided": winners.get("tie", [])})
    return report


# -- argument plumbing ----------------------------------------------------


def _parse_weight(s: str):
    try:
        a, b = s.split(",")
        return Fraction(a), Fraction(b)
    except Exception:
        raise argparse.ArgumentTypeError(
            f"weight must look like '0,-1' or '-1/2,-3/2', got {s!r}")


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the report/table to this path")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = argparse.ArgumentParser(prog="quasispin")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="symbolic identity suites",
                       parents=[common])
    v.add_argument("what", choices=("identities",))
    v.add_argument("--n", type=int, choices=(1, 2, 3), default=2)
    v.add_argument("--slow", action="store_true")

    f = sub.add_parser("fock", help="Fock-space ground truth",
                       parents=[common])
    f.add_argument("what", choices=("build",))
    f.add_argument("--j", type=Fraction, required=True)

    r = sub.add_parser("repr", help="representation analysis",
                       parents=[common])
    r.add_argument("what", choices=("analyze",))
    r.add_argument("--source", choices=("fock", "defining-power"),
                   required=True)
    r.add_argument("--j", type=Fraction)
    r.add_argument("--power", type=int)

    c = sub.add_parser("classify", help="fourth-quantum-number table",
                       parents=[common])
    c.add_argument("--weight", type=_parse_weight, required=True)

    pr = sub.add_parser("probe", help="convention probes", parents=[common])
    pr.add_argument("what", choices=("conventions",))
    return p


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    payload = None
    try:
        if args.command == "verify":
            report = suite_identities(args.n, slow=args.slow, seed=args.seed)
        elif args.command == "fock":
            report, genmap = suite_fock(args.j)
            payload = genmap_to_json(genmap) if args.out else None
        elif args.command == "repr":
            if args.source == "fock" and args.j is None:
                parser.error("--source fock needs --j")
            if args.source == "defining-power" and args.power is None:
                parser.error("--source defining-power needs --power")
            report, _ = suite_repr(build_source(args.source, j=args.j,
                                                power=args.power))
        elif args.command == "classify":
            report, table = suite_classify(*args.weight)
            payload = table
        elif args.command == "probe":
            report = suite_probe()
        else:  # pragma: no cover
            parser.error(f"unknown command {args.command}")
    except ValueError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2
    for line in report.summary_lines():
        print(line)
    if args.out:
        write_output(args.out, payload if payload is not None
                     else report.to_json(), args.format)
        print(f"wrote {args.out}")
    return report.exit_code()


if __name__ == "__main__":
    sys.exit(main())
