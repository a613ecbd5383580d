"""Acceptance suite: one test per acceptance criterion, printed pass/fail lines.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.  Four sub-claims are implemented exactly as stated and marked
xfail(strict=True) because the printed diagrams genuinely violate them;
each carries its counterexamples in the reason string, and the analysis
lives in the repository notes.  Everything else must pass green.
"""

import json
import math
import random
import subprocess
import sys
import time
from fractions import Fraction as Fr
from itertools import product

import pytest

from stratreg.arcs import (ArcPair, BehaviorClass, MonomialArc, QuantityId,
                           limit_along_arc)
from stratreg.classifier import all_leaves, c1_smooth, classify, profile
from stratreg.harness import boundary_flagged, gap_scan
from stratreg.model import Condition, Field, SurfaceParams, Verdict
from stratreg.puiseux import OrderStatus, PuiseuxSeries, order_of, rpow
from stratreg.algebraic import RootField
from stratreg.search import (FaultWitness, GridSpec, NoneFound, SearchBudget,
                             find_fault, float_loglog_slope, sample_grid)

from test_classifier import LEAF_WITNESSES

R, C = Field.REAL, Field.COMPLEX
A, B, W, L = (Condition.WHITNEY_A, Condition.WHITNEY_B,
              Condition.KUO_VERDIER_W, Condition.MOSTOWSKI_L)
H, F, U = Verdict.HOLDS, Verdict.FAILS, Verdict.UNDECIDED

# (a)-Fails tuples in [1,5]^4 whose faults cannot be certified inside the
# rational monomial-arc grammar; see notes/decisions.md for the analysis:
#   (4,2,1,2): the printed Fails leaf is wrong; A <= 2|z| on the real surface
#   (5,2,1,2): true fault only along x = -z^2/2 (coefficient sqrt(2) needed)
#   (5,3,1,3): true fault only along z^3 = -3x^2 (coefficient 3^(1/3) needed)
A_WITNESS_GAPS = {(4, 2, 1, 2), (5, 2, 1, 2), (5, 3, 1, 3)}


def report(criterion: str, passed: bool, note: str = ""):
    status = "PASS" if passed else "FAIL"
    line = f"ACCEPTANCE {criterion}: {status}"
    if note:
        line += f" - {note}"
    print(line, flush=True)
    assert passed, line


def report_known_defect(criterion: str, note: str):
    print(f"ACCEPTANCE {criterion}: FAIL (expected - documented printed-diagram "
          f"defect) - {note}", flush=True)


# --- criterion 1: historical examples ---------------------------------------------


def test_criterion_1_historical_examples():
    t0 = time.perf_counter()
    ok = True
    for tup in [(3, 2, 3, 5), (4, 2, 5, 7), (4, 4, 1, 3)]:
        p = SurfaceParams(*tup)
        ok &= classify(p, R, B)[0] is H
        ok &= classify(p, R, W)[0] is F
    elapsed = time.perf_counter() - t0
    report("criterion-1", ok and elapsed < 0.001 * 6 * 50,
           f"(b) holds, (w) fails for the three historic tuples "
           f"({elapsed * 1000:.2f} ms)")


# --- criterion 2: diagram leaf coverage ---------------------------------------------


def test_criterion_2_leaf_coverage():
    leaves = all_leaves()
    # the printed trees carry 62 leaves in total (the criterion text counts
    # 39; the discrepancy is recorded in the notes), three of them "?"
    covered = 0
    for key, leaf_id, printed in leaves:
        field, cond = key
        entry = LEAF_WITNESSES[(field.value, cond.value, leaf_id.split(":", 1)[1])]
        tup, want = entry
        verdict, trace = classify(SurfaceParams(*tup), field, cond)
        assert verdict.value == want == printed.value
        assert trace.leaf_id == leaf_id
        covered += 1
    assert covered == 62
    assert sum(1 for _, _, v in leaves if v is U) == 3
    assert classify(SurfaceParams(3, 2, 5, 7), R, L)[0] is U
    assert classify(SurfaceParams(2, 2, 2, 6), R, L)[0] is F
    assert classify(SurfaceParams(2, 2, 2, 6), R, W)[0] is H
    report("criterion-2", True,
           f"{covered} printed leaves each reached with the printed verdict")


# --- criterion 3: implication sweep over [1,8]^4 -------------------------------------


def _box8():
    for t in product(range(1, 9), repeat=4):
        yield SurfaceParams(*t)


def test_criterion_3_implications_sweep():
    t0 = time.perf_counter()
    eq_set, off_eq, c1_violations = [], [], []
    for p in _box8():
        va = classify(p, R, A)[0]
        vb = classify(p, R, B)[0]
        vw = classify(p, R, W)[0]
        vl = classify(p, R, L)[0]
        ca = classify(p, C, A)[0]
        cb = classify(p, C, B)[0]
        cw = classify(p, C, W)[0]
        cl = classify(p, C, L)[0]
        assert not (vl is H and vw is not H), f"L=>w at {p}"
        assert not (vb is H and va is not H), f"b=>a at {p}"
        assert cb is cw is cl, f"complex triple at {p}"
        for cpx, real in ((ca, va), (cb, vb), (cw, vw), (cl, vl)):
            assert not (cpx is H and real is not H), f"complex=>real at {p}"
        if p.b == 1:
            assert va is vb, f"b=1 a<=>b at {p}"
        if vw is H and vb is F:
            a, b, c, d = p.as_tuple()
            (eq_set if a * (d - c) == b * abs(d - a) else off_eq).append(p)
            assert boundary_flagged(p), f"unreported w=>b violation at {p}"
        if c1_smooth(p) and (va is not H or vb is not H):
            c1_violations.append(p)
    elapsed = time.perf_counter() - t0
    assert elapsed < 10.0, f"sweep took {elapsed:.1f}s"
    report("criterion-3 (L=>w, b=>a, complex collapse, complex=>real, b=1)",
           True, f"zero violations over 4096 tuples in {elapsed:.1f}s")
    report("criterion-3 (w=>b violations all reported)", True,
           f"{len(eq_set) + len(off_eq)} violations, every one boundary-flagged")
    if off_eq:
        report_known_defect(
            "criterion-3 (w=>b only on the equality set)",
            f"{len(off_eq)} violations off the equality set, e.g. "
            f"{off_eq[0]}, {off_eq[1]}")
    if c1_violations:
        report_known_defect(
            "criterion-3 (C1 => (a) and (b))",
            f"{len(c1_violations)} violations, e.g. {c1_violations[0]}")


@pytest.mark.xfail(strict=True, reason=(
    "spec claim falsified by the printed diagrams: 75 of the 85 w=>b "
    "violations on [1,8]^4 lie OFF the equality set a(d-c) = b|d-a| "
    "(e.g. (2,6,1,3): 4 < 6, (2,4,1,5): 8 < 12); Diagram 6 was only "
    "established inside the (b)-regular region"))
def test_criterion_3_weak_to_strong_only_on_equality_set():
    for p in _box8():
        if classify(p, R, W)[0] is H and classify(p, R, B)[0] is F:
            a, b, c, d = p.as_tuple()
            assert a * (d - c) == b * abs(d - a), p


@pytest.mark.xfail(strict=True, reason=(
    "spec claim falsified by the printed diagrams: Diagram 4's leaf "
    "'a<=c, d<b+c -> fails' contradicts C1 => (b); 58 violations on "
    "[1,8]^4, e.g. (2,4,3,5) and (5,4,5,7) are C1 graphs"))
def test_criterion_3_c1_implies_whitney_conditions():
    for p in _box8():
        if c1_smooth(p):
            assert classify(p, R, A)[0] is H, p
            assert classify(p, R, B)[0] is H, p


# --- criterion 4: witness completeness at desk scale -----------------------------------


def _box5():
    for t in product(range(1, 6), repeat=4):
        yield SurfaceParams(*t)


def test_criterion_4_w_witness_completeness():
    budget = SearchBudget(max_height=64, per_tuple_seconds=1.0)
    count = 0
    worst = 0.0
    for p in _box5():
        if classify(p, R, W)[0] is not F:
            continue
        count += 1
        t0 = time.perf_counter()
        r = find_fault(p, R, W, budget)
        worst = max(worst, time.perf_counter() - t0)
        assert isinstance(r, FaultWitness), f"no w-witness for {p}"
        assert r.behavior.klass is BehaviorClass.UNBOUNDED, p
        assert r.arc.p + r.arc.q <= 64
    report("criterion-4 (w)", True,
           f"unbounded witnesses for all {count} (w)-Fails tuples "
           f"(worst per-tuple {worst:.2f}s)")


def test_criterion_4_a_witness_completeness_achievable_part():
    budget = SearchBudget(max_height=64, per_tuple_seconds=1.0)
    count = 0
    gaps = []
    for p in _box5():
        if classify(p, R, A)[0] is not F:
            continue
        r = find_fault(p, R, A, budget)
        if p.as_tuple() in A_WITNESS_GAPS:
            assert isinstance(r, NoneFound), f"unexpected witness for {p}"
            gaps.append(p)
            continue
        count += 1
        assert isinstance(r, FaultWitness), f"no a-witness for {p}"
        assert r.behavior.order is not None and r.behavior.order <= 0, p
    assert len(gaps) == len(A_WITNESS_GAPS)
    report("criterion-4 (a, achievable part)", True,
           f"witnesses with order <= 0 for {count} of {count + len(gaps)} "
           f"(a)-Fails tuples; the {len(gaps)} gaps are the documented "
           f"irrational-modulus/defective-leaf cases")
    # the searcher itself explains two of the gaps
    for tup in [(5, 2, 1, 2), (5, 3, 1, 3)]:
        r = find_fault(SurfaceParams(*tup), R, A, SearchBudget(max_height=12))
        assert isinstance(r, NoneFound)
        assert any("irrational cancellation modulus" in n for n in r.notes), tup


@pytest.mark.xfail(strict=True, reason=(
    "three (a)-Fails tuples in [1,5]^4 admit no witness in the spec's "
    "rational monomial-arc grammar: (4,2,1,2) is actually (a)-regular "
    "(A <= 2|z| on the real surface; the printed leaf is wrong), while "
    "(5,2,1,2) and (5,3,1,3) only fault along curves with irrational "
    "modulus (d/c)^(1/b), which no rational lambda can express"))
def test_criterion_4_a_witness_completeness_as_stated():
    budget = SearchBudget(max_height=64, per_tuple_seconds=1.0)
    for p in _box5():
        if classify(p, R, A)[0] is not F:
            continue
        r = find_fault(p, R, A, budget)
        assert isinstance(r, FaultWitness), f"no a-witness for {p}"


# --- criterion 5: witness soundness -----------------------------------------------------


def test_criterion_5_no_witness_on_unflagged_holds():
    budgets = {
        A: SearchBudget(max_height=8, per_tuple_seconds=0.3),
        B: SearchBudget(max_height=8, per_tuple_seconds=0.3),
        W: SearchBudget(max_height=8, per_tuple_seconds=0.3),
        L: SearchBudget(max_height=6, per_tuple_seconds=0.6),
    }
    scanned = 0
    for p in _box5():
        if boundary_flagged(p):
            continue
        for cond, budget in budgets.items():
            if classify(p, R, cond)[0] is not H:
                continue
            scanned += 1
            r = find_fault(p, R, cond, budget)
            assert isinstance(r, NoneFound), \
                f"witness on Holds tuple {p} for ({cond.value}): {r.to_json()}"
    report("criterion-5", True,
           f"zero certified witnesses across {scanned} unflagged Holds "
           f"tuple-conditions (budget-bounded search)")


def test_criterion_5_flagged_tuples_are_exactly_the_w_over_b_conflicts():
    flagged = [p for p in _box5() if boundary_flagged(p)]
    assert {p.as_tuple() for p in flagged} == {
        (2, 4, 1, 3), (2, 4, 1, 5), (2, 4, 2, 4), (2, 4, 3, 5), (3, 4, 3, 5)}
    report("criterion-5 (flag scope)", True,
           f"{len(flagged)} flagged boundary tuples in [1,5]^4")


# --- criterion 6: boundary adjudication ---------------------------------------------------


def _run_cli(*args):
    return subprocess.run([sys.executable, "-m", "stratreg"] + list(args),
                          capture_output=True, text=True, timeout=300)


def test_criterion_6_discrepancy_tuple():
    r = _run_cli("verify", "--a", "2", "--b", "4", "--c", "1", "--d", "3",
                 "--field", "real", "--condition", "w", "--json")
    assert r.returncode == 3
    res = json.loads(r.stdout)["results"]
    assert res["status"] == "DISCREPANCY"
    assert res["verifier"]["arc"]["p"] == 3 and res["verifier"]["arc"]["q"] == 1
    assert res["verifier"]["order"] == "-1/2"
    # independent confirmation: float log-log slope along the witness arc
    slope = float_loglog_slope(SurfaceParams(2, 4, 1, 3), QuantityId.W,
                               MonomialArc(3, 1, 1, Fr(1)))
    assert abs(slope - (-0.5)) < 0.05
    # the sampling oracle confirms blow-up as well (its shell suprema grow
    # strictly faster, ~u^-1 near x = u^4; see notes on the spec's -0.5 figure)
    rep = sample_grid(SurfaceParams(2, 4, 1, 3), QuantityId.W)
    assert rep.fitted_exponent < -0.45
    report("criterion-6 (2,4,1,3)", True,
           f"exit 3, witness x=u^3 z=u of order -1/2, arc slope "
           f"{slope:.3f}, grid exponent {rep.fitted_exponent:.2f}")


@pytest.mark.xfail(strict=True, reason=(
    "the spec's parenthetical expects the sampling oracle's fitted exponent "
    "to be -0.5 +- 0.05 at (2,4,1,3); the true shell suprema grow like u^-1 "
    "(attained near x = u^4 where both sup arguments tie), so only the "
    "witness-arc rate is -1/2"))
def test_criterion_6_grid_exponent_as_stated():
    rep = sample_grid(SurfaceParams(2, 4, 1, 3), QuantityId.W)
    assert abs(rep.fitted_exponent - (-0.5)) <= 0.05


def test_criterion_6_equality_tuples_hold_at_budget():
    for tup in [(6, 4, 1, 3), (2, 2, 2, 6)]:
        args = ["verify", "--a", str(tup[0]), "--b", str(tup[1]),
                "--c", str(tup[2]), "--d", str(tup[3]),
                "--field", "real", "--condition", "w", "--json"]
        r = _run_cli(*args)
        assert r.returncode == 0, (tup, r.stdout)
        res = json.loads(r.stdout)["results"]
        assert res["status"] == "CONSISTENT"
        assert res["verifier"]["witness"] is None
    report("criterion-6 (equality Holds evidence)", True,
           "no witness at budget for (6,4,1,3) and (2,2,2,6)")


# --- criterion 7: kernel properties ----------------------------------------------------


def test_criterion_7_kernel_properties():
    rng = random.Random(1789)
    QQ = RootField.rationals()

    def rand_series(max_terms=5):
        terms = [(Fr(rng.randint(0, 12), rng.choice([1, 2, 3, 4])),
                  Fr(rng.randint(-9, 9), rng.randint(1, 9)))
                 for _ in range(rng.randint(0, max_terms))]
        return PuiseuxSeries.from_terms(QQ, terms)

    for _ in range(1000):
        s, t, u = rand_series(), rand_series(), rand_series()
        assert (s + t).terms == (t + s).terms
        assert (s * t).terms == (t * s).terms
        assert ((s + t) + u).terms == (s + (t + u)).terms
        assert ((s * t) * u).terms == (s * (t * u)).terms
        assert (s * (t + u)).terms == (s * t + s * u).terms
        assert (s + (-s)).is_certified_zero()

        if not s.is_empty():
            shifted = PuiseuxSeries.monomial(abs(rng.randint(1, 9)), 0) + \
                s.shifted(Fr(1, 2))
            r = rpow(rpow(shifted, Fr(1, 2)), 2)
            assert (r - shifted).is_empty()

        if not s.is_empty() and not t.is_empty():
            cs, ct = order_of(s), order_of(t)
            cp = order_of(s * t)
            assert cp.status is OrderStatus.EXACT
            assert cp.order == cs.order + ct.order
    report("criterion-7", True,
           "1000 randomized ring-axiom cases exact; rpow round-trip and "
           "order homomorphism certified")


# --- criterion 8: oracle agreement ------------------------------------------------------


def test_criterion_8_order_vs_loglog_slope():
    rng = random.Random(40351)
    checked = 0
    indeterminate = 0
    evaluated = 0
    while checked < 100:
        tup = tuple(rng.randint(1, 6) for _ in range(4))
        pq = (rng.randint(1, 6), rng.randint(1, 6))
        g = math.gcd(*pq)
        pq = (pq[0] // g, pq[1] // g)
        lam = rng.choice([Fr(1), Fr(-1), Fr(2), Fr(-2), Fr(1, 2), Fr(-1, 2)])
        sigma = rng.choice([1, -1])
        qid = rng.choice([QuantityId.A, QuantityId.BPI, QuantityId.W, QuantityId.Z])
        params = SurfaceParams(*tup)
        arc = MonomialArc(pq[0], pq[1], sigma, lam)
        try:
            b = limit_along_arc(params, qid, arc)
        except Exception:
            continue
        evaluated += 1
        if b.klass is BehaviorClass.INDETERMINATE:
            indeterminate += 1
            continue
        if b.identically_zero or b.order is None:
            continue
        slope = float_loglog_slope(params, qid, arc)
        if slope is None:
            continue
        checked += 1
        assert abs(slope - float(b.order)) < 0.05, (tup, qid, arc)
    assert indeterminate / evaluated < 0.05
    report("criterion-8", True,
           f"100 random arc orders match float slopes within 0.05 "
           f"({indeterminate} indeterminate of {evaluated} evaluations)")


# --- criterion 9: geometry identities -----------------------------------------------------


def test_criterion_9_geometry_identities():
    import numpy as np
    from stratreg.geometry import (eval_f, gradient, tangent_projection,
                                   y_branches)
    rng = random.Random(65537)
    # exact on-surface numerator identity (modulo the surface equation)
    for _ in range(1000):
        p = SurfaceParams(rng.randint(1, 6), rng.randint(1, 6),
                          rng.randint(1, 6), rng.randint(1, 6))
        x = Fr(rng.randint(1, 9), rng.randint(1, 9)) * rng.choice([1, -1])
        y = Fr(rng.randint(0, 9), rng.randint(1, 9)) * rng.choice([1, -1])
        z = Fr(rng.randint(0, 9), rng.randint(1, 9)) * rng.choice([1, -1])
        a, b, c, d = p.as_tuple()
        fx, fy, _ = gradient(p, x, y, z)
        assert (x * fx + y * fy
                - (a - c) * z ** b * x ** c - (a - d) * x ** d
                ) == a * eval_f(p, x, y, z)
    # projection algebra at 1e-10 and gradient vs finite differences at 1e-6
    h = 1e-6
    for _ in range(60):
        p = SurfaceParams(rng.randint(1, 5), rng.randint(1, 5),
                          rng.randint(1, 5), rng.randint(1, 5))
        x, z = rng.uniform(0.1, 0.9), rng.uniform(0.1, 0.9)
        ys = y_branches(p, x, z)
        if not ys:
            continue
        q = (x, ys[0], z)
        if all(abs(g) < 1e-12 for g in gradient(p, *q)):
            continue
        P, Pp = tangent_projection(p, q)
        assert np.allclose(P @ P, P, atol=1e-10)
        assert np.allclose(P + Pp, np.eye(3), atol=1e-12)
        g = np.array(gradient(p, *q), dtype=float)
        assert np.allclose(P @ g, 0, atol=1e-10 * (1 + np.linalg.norm(g)))
        xx, yy, zz = q
        fd = ((eval_f(p, xx + h, yy, zz) - eval_f(p, xx - h, yy, zz)) / (2 * h),
              (eval_f(p, xx, yy + h, zz) - eval_f(p, xx, yy - h, zz)) / (2 * h),
              (eval_f(p, xx, yy, zz + h) - eval_f(p, xx, yy, zz - h)) / (2 * h))
        for gi, fi in zip(gradient(p, *q), fd):
            assert math.isclose(gi, fi, rel_tol=1e-6, abs_tol=1e-8)
    report("criterion-9", True,
           "identity exact on 1000 rational points; projection algebra at "
           "1e-10; gradient matches finite differences at 1e-6")


# --- criterion 10: gap scan -----------------------------------------------------------------


def test_criterion_10_gap_scan():
    g8 = {t.as_tuple() for t in gap_scan(8)}
    for tup in [(3, 2, 3, 5), (4, 2, 5, 7), (4, 4, 1, 3)]:
        assert tup in g8
    counts = [len(gap_scan(n)) for n in (6, 8, 10)]
    assert counts[0] < counts[1] < counts[2]
    report("criterion-10", True,
           f"historic gap tuples present; counts grow {counts[0]} < "
           f"{counts[1]} < {counts[2]} for N = 6, 8, 10")
