"""Acceptance suite: one test per criterion, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines.  Criterion 5 is expected to fail for T3.5: the relative-ageing claim
behind it is numerically false on part of its stated hypothesis (shared
block parameter below both first-block values), with hazard-ratio
turnarounds on the order of 1e-2, far above every tolerance here.  The
failure is reported, not patched around.
"""

import time

import numpy as np
from scipy.integrate import quad

from posys import (
    Exponential,
    GridSpec,
    SystemModel,
    Weibull,
    check_hr,
    check_lr,
    check_rhr,
    check_st,
    majorizes,
    p_larger,
    po_density,
    po_hazard,
    po_survival,
    reciprocally_majorizes,
    reproduce_counterexample,
    sweep,
    weak_supermajorizes,
)
from posys.theorem_harness import spread_transfers, theorem_branches

MATRIX_BASELINES = [Exponential(1.0), Exponential(2.0), Weibull(2.0, 0.8), Weibull(2.0, 3.0)]
MATRIX_ALPHAS = [0.2, 1.0, 2.2, 5.0]
SWEEP_IDS = ("T3.1", "T3.2", "T3.3", "T3.4", "T3.5", "T3.6", "T3.7", "T3.8",
             "T3.9", "T4.1", "T4.2", "T4.3", "T4.4")


def _report(number, slug, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {number} ({slug}): {status}{detail}")
    assert ok, f"criterion {number} ({slug}) failed{detail}"


def test_criterion_1_series_survival_crossing():
    t0 = time.perf_counter()
    report = reproduce_counterexample("CE3.1")
    st_verdict = report.verdicts[0][1]
    witness_in_window = any(0.5 <= w.t <= 1.5 for w in st_verdict.witnesses)
    elapsed = time.perf_counter() - t0
    ok = (report.values_ok and not st_verdict.holds and witness_in_window
          and elapsed < 1.0)
    _report(1, "series survival values and st failure", ok,
            f"  [{elapsed:.2f}s, witness in [0.5,1.5]: {witness_in_window}]")


def test_criterion_2_series_hazard_crossing():
    t0 = time.perf_counter()
    report = reproduce_counterexample("CE3.2")
    hr_verdict = report.verdicts[0][1]
    elapsed = time.perf_counter() - t0
    ok = report.values_ok and not hr_verdict.holds and elapsed < 1.0
    _report(2, "series hazard values and hr failure", ok, f"  [{elapsed:.2f}s]")


def test_criterion_3_parallel_crossing_both_directions():
    t0 = time.perf_counter()
    first = reproduce_counterexample("CE4.1a")
    second = reproduce_counterexample("CE4.1b")
    directions = (first.verdicts[0][0], second.verdicts[0][0])
    elapsed = time.perf_counter() - t0
    ok = (first.ok and second.ok
          and directions == ("first st-smaller than second",
                             "second st-smaller than first")
          and elapsed < 1.0)
    _report(3, "parallel survival values, st fails both ways", ok,
            f"  [{elapsed:.2f}s]")


def test_criterion_4_ratio_turnarounds():
    t0 = time.perf_counter()
    problems = []
    for case_id in ("CE4.2", "CE4.3a", "CE4.3b", "CE4.4"):
        report = reproduce_counterexample(case_id)
        for name, verdict in report.monotonicity:
            if verdict.classification != "nonmonotone" or verdict.witness is None:
                problems.append(f"{case_id}:{name}")
    density_entries = [n for n, _ in reproduce_counterexample("CE4.2").monotonicity
                       if "density" in n]
    if not density_entries:
        problems.append("CE4.2 density ratio missing")
    elapsed = time.perf_counter() - t0
    ok = not problems and elapsed < 5.0
    _report(4, "nonmonotone ratio curves with witnesses", ok,
            f"  [{elapsed:.2f}s{', problems: ' + str(problems) if problems else ''}]")


def test_criterion_5_theorem_sweeps():
    t0 = time.perf_counter()
    outcomes = []
    bad = []
    for index, tid in enumerate(SWEEP_IDS):
        for branch in theorem_branches(tid):
            result = sweep(tid, 500, seed=1000 + index, branch=branch)
            tag = tid if branch is None else f"{tid}[{branch}]"
            outcomes.append(f"{tag}:{result.consistent_count}/500")
            if not result.all_consistent:
                bad.append(tag)
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 60.0
    detail = f"  [{elapsed:.1f}s] " + " ".join(outcomes)
    if bad:
        detail += (
            f"\n  inconsistent: {bad}. For T3.5 this is a genuine gap in the "
            "claimed implication: when the shared block parameter sits below "
            "both first-block values, the series hazard-rate ratio is "
            "nonmonotone (turnarounds ~1e-2, confirmed in 50-digit "
            "arithmetic), so no correct implementation can report 500/500.")
    _report(5, "500-instance sweeps per theorem branch", ok, detail)


def test_criterion_6_majorization_chain():
    rng = np.random.default_rng(20240601)
    failures = 0
    for _ in range(1000):
        n = int(rng.integers(2, 8))
        y = rng.uniform(0.5, 5.0, size=n)
        x = spread_transfers(y, rng, transfers=int(rng.integers(1, 5)), floor=0.05)
        chain = (majorizes(x, y) and weak_supermajorizes(x, y)
                 and p_larger(x, y) and reciprocally_majorizes(x, y))
        failures += not chain
    _report(6, "majorization chain on 1000 constructed pairs", failures == 0,
            f"  [{failures} failures]")


def test_criterion_7_model_invariants():
    problems = []
    for base in MATRIX_BASELINES:
        for alpha in MATRIX_ALPHAS:
            total, _ = quad(lambda t: po_density(alpha, base, t), 0.0, np.inf, limit=200)
            if abs(total - 1.0) > 1e-6:
                problems.append(f"po integral {base} a={alpha}: {total}")
            t_far = base.isf(1e-5)
            ratio = po_hazard(alpha, base, t_far) / base.hazard(t_far)
            if abs(ratio - 1.0) > 1e-4:
                problems.append(f"hazard ratio {base} a={alpha}: {ratio}")
        for topology in ("series", "parallel"):
            system = SystemModel(topology, base, MATRIX_ALPHAS)
            total, _ = quad(lambda t: system.density(t), 1e-12, np.inf, limit=200)
            if abs(total - 1.0) > 1e-6:
                problems.append(f"{topology} integral {base}: {total}")
        grid = np.geomspace(1e-3, 10.0, 500)
        if not np.array_equal(po_survival(1.0, base, grid), base.sf(grid)):
            problems.append(f"alpha=1 identity not exact for {base}")
    _report(7, "density normalization, tail convergence, unit identity",
            not problems, f"  [{problems}]" if problems else "")


def test_criterion_8_order_implication_consistency():
    rng = np.random.default_rng(20240808)
    violations = []
    for trial in range(200):
        n = int(rng.integers(2, 5))
        topology = "series" if rng.integers(0, 2) else "parallel"
        base = Exponential(float(rng.uniform(0.6, 2.0)))
        grid = GridSpec(1e-3, min(20.0, base.isf(1e-6)), 2000)
        mu = rng.uniform(0.5, 5.0, size=n)
        if trial % 2 == 0:
            lam = spread_transfers(mu, rng, 2, 0.05) * float(rng.uniform(0.75, 1.0))
        else:
            lam = rng.uniform(0.5, 5.0, size=n)
        a = SystemModel(topology, base, lam)
        b = SystemModel(topology, base, mu)
        lr = check_lr(a, b, grid).holds
        hr = check_hr(a, b, grid).holds
        rhr = check_rhr(a, b, grid).holds
        st = check_st(a, b, grid).holds
        if lr and not (hr and rhr):
            violations.append((trial, "lr without hr/rhr"))
        if (hr or rhr) and not st:
            violations.append((trial, "hr/rhr without st"))
    _report(8, "lr=>hr,rhr and hr,rhr=>st over 200 pairs", not violations,
            f"  [{violations}]" if violations else "")
