"""Acceptance gate: one test per criterion, each printing a single PASS/FAIL line.

The lines are also collected in ``RESULTS`` and repeated in the pytest terminal
summary (see conftest.py).  Run directly with ``python tests/test_acceptance.py``.
"""

import io
import time
from math import gcd

import numpy as np

from nsring import classify, construct
from nsring import zideal as zi
from nsring.checks import load_manifest, run_cases
from nsring.cli import main
from nsring.enumeration import colength_ideals, scan_family, semigroups_by_genus
from nsring.filtration import maxlen, mu_of_power, ord_conductor
from oracles import compare_ideal_ops, minimal_sets_in_range, random_generator_draws

RESULTS = {}


def _report(n, ok, detail):
    line = f"acceptance criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


# -- 1. golden paper-check suite ------------------------------------------------------

REQUIRED_FACTS = {
    "Ex2.3": ["e", "embdim", "e_minus_embdim", "ord_conductor", "is_almost_gorenstein",
              "is_nearly_gorenstein", "trace_canonical_eq_conductor"],
    "Ex2.4": ["e", "embdim", "ord_conductor", "is_almost_gorenstein"],
    **{f"Ex2.7-R1-e{e}": ["conductor_power", "ord_conductor"] for e in range(3, 11)},
    "Ex2.7-R2": ["ord_conductor"],
    "Prop3.3-e2": ["ord_conductor"],
    "Prop3.3-e3-34": ["ord_conductor", "maxlen(8)"],
    "Prop3.3-e3-35": ["ord_conductor", "maxlen(7)"],
    "Sec4-567": ["conductor_power", "type_", "ord_conductor", "q41_value"],
    "Ex4.2": ["type_", "conductor_eq_m", "colength_canonical", "canonical_reflexive",
              "colength1_all_reflexive"],
    "Ex4.4": ["colength_conductor", "colon_m_m", "dual_conductor", "bidual_conductor_eq_conductor",
              "has_minimal_multiplicity", "is_almost_gorenstein", "is_nearly_gorenstein",
              "is_farflung_gorenstein", "trace_ideals_colength_le2"],
    "Prop4.5-345": ["prop45_bidual_class_eq_m", "prop45_sequence_exact"],
}


def test_criterion_1_golden_suite():
    manifest = {c["id"]: c for c in load_manifest()}
    missing = [(cid, f) for cid, fields in REQUIRED_FACTS.items() for f in fields
               if cid not in manifest or f not in {x["field"] for x in manifest[cid]["facts"]}]
    results = {r.id: r for r in run_cases()}
    hard_fail = [(r.id, f.field) for r in results.values() for f in r.facts
                 if not f.ok and not f.informational]
    ex23 = results["Ex2.3"]
    flagged = ex23.status == "informational-discrepancy" and any(
        f.field == "trace_canonical_eq_conductor" and not f.ok for f in ex23.facts)
    # the headline numbers, recomputed outside the manifest
    direct = [
        classify(construct([4, 5, 7])).ord_conductor == 1,
        classify(construct([6, 8, 11, 13, 15])).is_almost_gorenstein is False,
        all(ord_conductor(construct(range(e, 2 * e - 1))) == 2 for e in range(3, 11)),
        ord_conductor(construct([4, 5, 11])) == 1,
        [ord_conductor(construct(g)) for g in ([2, 3], [3, 4], [3, 5])] == [1, 2, 2],
        classify(construct([5, 6, 7])).type_ == 2,
    ]
    counts = {s: sum(r.status == s for r in results.values())
              for s in ("pass", "fail", "informational-discrepancy")}
    ok = not missing and not hard_fail and flagged and all(direct)
    _report(1, ok, f"{len(results)} cases {counts}; missing={missing} mismatches={hard_fail} "
                   f"Ex2.3 flagged={flagged}")


# -- 2. oracle equivalence ---------------------------------------------------------------


def test_criterion_2_oracle_equivalence():
    rng = np.random.default_rng(20240)
    draws = random_generator_draws(rng, 500)
    semigroups = {construct(g) for g in draws}
    checks, bad = 0, []
    for gens in draws:
        n, b = compare_ideal_ops(gens, rng, 20)
        checks += n
        bad += b
    exist = len(minimal_sets_in_range(2, 12))
    ok = len(draws) >= 500 and len(semigroups) == exist and not bad
    _report(2, ok, f"{len(draws)} generator draws from [2,12] covering {len(semigroups)} of the "
                   f"{exist} semigroups with minimal generators there, 20 random ideals each, "
                   f"{checks} comparisons, {len(bad)} mismatches {bad[:3]}")


# -- 3. property suites over genus <= 10 ------------------------------------------------------


def _ideals_for(H, rng):
    out = [zi.whole_ring(H), zi.maximal_ideal(H), zi.conductor_ideal(H), zi.canonical_ideal(H)]
    out += colength_ideals(H, 1) + colength_ideals(H, 2)
    C = H.conductor_number + 2 * H.multiplicity
    for _ in range(3):
        k = int(rng.integers(1, 4))
        out.append(zi.from_generators(H, {int(x) - C // 2 for x in rng.integers(0, C + 1, size=k)}))
    return out


def test_criterion_3_property_suites():
    rng = np.random.default_rng(10)
    failures = []
    stream = list(semigroups_by_genus(10))
    for H in stream:
        r = classify(H)
        if not (r.is_gorenstein == (r.type_ == 1) == (2 * r.genus == r.frobenius + 1)):
            failures.append(("gorenstein", H))
        if r.is_almost_gorenstein != (2 * r.genus == r.frobenius + r.type_):
            failures.append(("almost", H))
        for E in _ideals_for(H, rng):
            D = zi.dual(E)
            if not E.issubset(zi.bidual(E)) or zi.dual(zi.bidual(E)) != D:
                failures.append(("galois", H, E))
            T = zi.trace(E)
            z = int(rng.integers(-15, 16))
            if zi.trace(E.shift(z)) != T:
                failures.append(("trace-shift", H, E))
            if zi.trace(T) != T:
                failures.append(("trace-idempotent", H, E))
        c = H.conductor_number
        if c and ord_conductor(H) != min(maxlen(H, s) for s in range(c, 4 * c + 1)):
            failures.append(("ord-window", H))
    # hypersurface probe: report, do not assert
    hyper = [(a, b) for a in range(2, 41) for b in range(a + 1, 41) if gcd(a, b) == 1]
    q31_violations = [(a, b) for a, b in hyper if ord_conductor(construct([a, b])) != a - 1]
    # Matlis staircase
    for a in range(2, 9):
        for b in range(a + 1, 41):
            if gcd(a, b) == 1:
                H = construct([a, b])
                for i in range(1, 2 * a + 1):
                    if mu_of_power(H, i) != min(i + 1, a):
                        failures.append(("matlis", a, b, i))
    ok = not failures
    _report(3, ok, f"{len(stream)} semigroups of genus <= 10, {len(hyper)} plane curves <a,b> (b <= 40); "
                   f"failures={failures[:3]}; hypersurface ord != e-1 instances: {q31_violations}")


# -- 4. the <4,5,a> problem-set scan -----------------------------------------------------------


def _scan(*extra):
    out, err = io.StringIO(), io.StringIO()
    code = main(["scan", "--family", "4,5,a", "--range", "7..200", "--format", "json", *extra], out, err)
    return code, out.getvalue()


def test_criterion_4_problem_set_scan():
    t0 = time.perf_counter()
    code, first = _scan()
    elapsed = time.perf_counter() - t0
    deterministic = _scan()[1] == first and _scan("--jobs", "2")[1] == first
    recs = {r.params["a"]: r for r in scan_family("4,5,a", range(7, 201))}
    H45 = construct([4, 5])
    ords_ok = recs[7].report.ord_conductor == 1 and recs[11].report.ord_conductor == 1
    skips_ok = all((recs[a].status == "skipped-redundant") == (a in H45) for a in recs)
    members = sorted(a for a, r in recs.items() if r.report is not None and r.report.ord_conductor == 1)
    ok = code == 0 and elapsed < 10 and deterministic and ords_ok and skips_ok
    _report(4, ok, f"{elapsed:.2f}s, deterministic={deterministic}, a=7,11 ord 1: {ords_ok}, "
                   f"skip-marks exact: {skips_ok}; {{a in [7,200] : ord = 1}} = {members}")


# -- 5. out-of-scope material carries no criterion -------------------------------------------


def test_criterion_5_out_of_scope():
    ids = [c["id"] for c in load_manifest()]
    banned = ("Sec5", "Prop4.6", "Cor4.7", "Prop3.4")
    leaked = [i for i in ids if i.startswith(banned)]
    _report(5, not leaked, f"{len(ids)} golden cases, none drawn from out-of-scope material; leaked={leaked}")


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
