"""Acceptance suite: one test per criterion, each timed and reported in the run summary."""
import math
import time

import numpy as np
import pytest

from cantormeasure.cli import main
from cantormeasure.construction import (
    CantorSpec, _raw_scale, count, distance_to_set, endpoints, enumerate_intervals,
    enumeration_budget, tail_window,
)
from cantormeasure.corpus import CORPUS, fifths_three, middle_thirds, quarter_pair
from cantormeasure.hypotheses import (
    _pair_violation, _pair_violation_exhaustive, check_separation, cond2_ratio, report,
)
from cantormeasure.measures import (
    hausdorff_dim, hausdorff_measure, mass_scale, packing_dim, packing_measure, salto_depth,
    salto_violations,
)
from cantormeasure.natural_measure import mu_interval, sample_word
from cantormeasure.oracles import density_scan, frostman_constant, optimal_cover

from _gen import make_rng, random_level, random_spec


def _finish(record, number, failures, elapsed, limit, summary):
    ok = not failures and elapsed < limit
    detail = f"{summary}; {elapsed:.2f}s (limit {limit}s)"
    if failures:
        detail += "; " + "; ".join(failures[:3])
    record(number, ok, detail)
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert not failures, failures
    assert elapsed < limit


def test_criterion_1_middle_thirds(tmp_path, record_criterion):
    start = time.perf_counter()
    path = tmp_path / "mt.cspec"
    path.write_text("cantor-spec v1\ntail repeat-last\nlevel r=1/3 digits=0,2\n")
    out = tmp_path / "m.csv"
    code = main(["measures", str(path), "--format", "csv", "--out", str(out)])
    rows = {line.split(",")[0]: float(line.split(",")[1]) for line in out.read_text().splitlines()[1:]}
    elapsed = time.perf_counter() - start
    s0 = math.log(2) / math.log(3)
    failures = []
    if code != 0:
        failures.append(f"exit code {code}")
    for key, want, tol in (("s", s0, 1e-12), ("t", s0, 1e-12), ("B_s", 1.0, 1e-12), ("P_t", 4 ** s0, 1e-10)):
        if abs(rows[key] - want) > tol:
            failures.append(f"{key}={rows[key]!r} expected {want!r}")
    _finish(record_criterion, 1, failures, elapsed, 1.0,
            f"s=t={rows['s']:.15g}, B_s={rows['B_s']:.15g}, P_t={rows['P_t']:.15g}")


def test_criterion_2_quarter_pair(record_criterion):
    start = time.perf_counter()
    spec = quarter_pair()
    B = hausdorff_measure(spec).value
    P = packing_measure(spec).value
    elapsed = time.perf_counter() - start
    failures = []
    if abs(B - 1.0) > 1e-10:
        failures.append(f"B={B!r}")
    if abs(P - math.sqrt(6)) > 1e-10:
        failures.append(f"P={P!r}")
    _finish(record_criterion, 2, failures, elapsed, 1.0, f"B={B:.15g}, P={P:.15g}")


def test_criterion_3_fifths_three(record_criterion):
    start = time.perf_counter()
    spec = fifths_three()
    t = math.log(3) / math.log(5)
    pc = packing_measure(spec)
    gammas = [g for g in pc.gamma.details.values()]
    d_direct = distance_to_set(spec, 0.5, 1e-12)
    elapsed = time.perf_counter() - start
    failures = []
    if abs(pc.t - t) > 1e-15:
        failures.append(f"t={pc.t!r}")
    if abs(pc.gamma.value - 3 ** t) > 1e-10:
        failures.append(f"gamma={pc.gamma.value!r}")
    if abs(pc.value - 4 ** t) > 1e-10:
        failures.append(f"P={pc.value!r}")
    if max(g.d for g in gammas) > 1e-12 or d_direct > 1e-12:
        failures.append(f"d_n={max(g.d for g in gammas)!r}")
    _finish(record_criterion, 3, failures, elapsed, 1.0,
            f"gamma={pc.gamma.value:.15g}, P={pc.value:.15g}, max d_n={max(g.d for g in gammas)}")


def _acceptance_depth(spec, target=8):
    n = target
    while n > 1 and count(spec, n) > enumeration_budget():
        n -= 1
    return n


def test_criterion_4_sandwich(record_criterion):
    start = time.perf_counter()
    failures, worst = [], 0.0
    checked = []
    for label, spec in CORPUS.items():
        rep = report(spec)
        if not (rep.hausdorff_ok and rep.packing_ok):
            continue
        checked.append(label)
        s = hausdorff_dim(spec).value
        B = hausdorff_measure(spec).value
        N = _acceptance_depth(spec)
        uppers = []
        for n in range(1, N + 1):
            dp = optimal_cover(spec, n, s).value
            ms = mass_scale(spec, n, s)
            uppers.append(ms)
            if not dp <= ms * (1 + 1e-12) or not B <= dp * (1 + 1e-12):
                failures.append(f"{label} n={n}: B={B:.6g} dp={dp:.6g} mu s^s={ms:.6g}")
        lower = 1.0 / frostman_constant(spec, N, s)
        dp = optimal_cover(spec, N, s).value
        # upper outer bound: the cheapest order-k cover over k <= N
        upper = min(uppers)
        if not lower <= B * (1 + 1e-12):
            failures.append(f"{label}: 1/frostman={lower:.6g} > B={B:.6g}")
        for name, v in (("1/frostman", lower), ("dp", dp), ("min mu s^s", upper)):
            rel = abs(v - B) / B
            worst = max(worst, rel)
            if rel > 0.05:
                failures.append(f"{label}: {name}={v:.6g} vs B={B:.6g}")
        if label == "middle-thirds":
            for name, v in (("1/frostman", lower), ("B", B), ("dp", dp), ("mu s^s", mass_scale(spec, N, s))):
                if abs(v - 1.0) > 1e-10:
                    failures.append(f"middle-thirds {name}={v!r}")
    elapsed = time.perf_counter() - start
    _finish(record_criterion, 4, failures, elapsed, 30.0,
            f"{len(checked)} specs, worst outer-bound gap {100 * worst:.3f}%")


def test_criterion_5_density(record_criterion):
    start = time.perf_counter()
    failures, worst = [], 0.0
    tol = 1e-9
    checked = 0
    for label, spec in CORPUS.items():
        if not report(spec).packing_ok:
            continue
        checked += 1
        t = packing_dim(spec).value
        pc = packing_measure(spec)
        begin, _ = tail_window(spec)
        r_min = _raw_scale(spec, begin + 15)
        scan = density_scan(spec, t, 100, r_min, tol=tol, seed=2024)
        rel = abs(1.0 / scan.min_density - pc.value) / pc.value
        worst = max(worst, rel)
        if rel > 0.05:
            failures.append(f"{label}: 1/min={1 / scan.min_density:.6g} vs P={pc.value:.6g}")
        bound = 1.0 / pc.value
        low = min(d for p in scan.profiles for _, _, d in p.points)
        if low < bound - 1e-9:
            failures.append(f"{label}: profile point {low:.12g} below bound {bound:.12g}")
    elapsed = time.perf_counter() - start
    _finish(record_criterion, 5, failures, elapsed, 60.0,
            f"{checked} specs, worst |1/min - P|/P = {100 * worst:.4f}%")


def test_criterion_6_cond2_reduction(record_criterion):
    start = time.perf_counter()
    rng = make_rng(6)
    failures = []
    verdicts = {True: 0, False: 0}
    prev = random_level(rng)
    for _ in range(200):
        lv = random_level(rng, max_m=5)
        for spec in (CantorSpec((lv,)), CantorSpec((prev, lv), "cycle")):
            for n in (2, 3) if spec.tail == "cycle" else (2,):
                a, b = (spec.prefix[(n - 2) % len(spec.prefix)], spec.prefix[(n - 1) % len(spec.prefix)])
                fast = _pair_violation(a, b, n)
                slow = _pair_violation_exhaustive(a, b, n)
                verdicts[fast is None] += 1
                if (fast is None) != (slow is None):
                    failures.append(f"verdicts differ at n={n} for {spec}")
                for w in (fast, slow):
                    if w is not None:
                        lhs, rhs = cond2_ratio(spec, w.n, w.J1, w.J2, w.j)
                        if not lhs > rhs:
                            failures.append(f"witness does not violate: {w}")
        prev = lv
    elapsed = time.perf_counter() - start
    _finish(record_criterion, 6, failures, elapsed, 10.0,
            f"200 levels, {verdicts[True]} pairs hold, {verdicts[False]} violate")


def test_criterion_7_salto(record_criterion):
    start = time.perf_counter()
    rng = make_rng(7)
    failures, instances = [], 0
    for _ in range(50):
        spec = random_spec(rng, max_m=5, min_spacing=2.05)
        c = check_separation(spec)
        if not c > 2:
            failures.append(f"generator produced c={c}")
            continue
        L = salto_depth(c)
        t = packing_dim(spec).value
        for n in rng.choice(np.arange(L + 1, L + 41), size=10, replace=False):
            bad = salto_violations(spec, int(n), t, L)
            instances += 1
            if bad:
                failures.append(f"c={c:.4g} n={n}: {bad[0]}")
    elapsed = time.perf_counter() - start
    _finish(record_criterion, 7, failures, elapsed, 10.0, f"50 specs, {instances} level checks")


MU_SPECS = ["middle-thirds", "quarter-pair", "ninths-five", "lopsided-fifths", "mixed-branching"]


def test_criterion_8_mu_engine(record_criterion):
    start = time.perf_counter()
    rng = make_rng(8)
    tol = 1e-9
    failures, worst = [], 0.0
    for spec in CORPUS.values():
        v = mu_interval(spec, 0.0, 1.0, tol)
        if not v.lo == v.hi == 1.0:
            failures.append(f"total mass {v}")
    for label in MU_SPECS:
        spec = CORPUS[label]
        depth = 15
        for k in range(2000):
            if k % 2:
                xs = rng.uniform(-0.05, 1.05, 3)
            else:
                # points of the set, some nudged off it, stress the deep paths
                xs = [endpoints(spec, sample_word(spec, rng, depth)).a
                      + (rng.normal() * 10.0 ** -rng.integers(3, 12) if rng.random() < 0.5 else 0.0)
                      for _ in range(3)]
            x1, x2, x3 = sorted(float(x) for x in xs)
            a, b, c = (mu_interval(spec, x1, x2, tol), mu_interval(spec, x2, x3, tol),
                       mu_interval(spec, x1, x3, tol))
            err = abs(a.mid + b.mid - c.mid)
            worst = max(worst, err)
            if err > 2 * tol:
                failures.append(f"{label} additivity {err:.3g} at {(x1, x2, x3)}")
        for n in range(1, 6):
            want = 1.0 / count(spec, n)
            for _, g in enumerate_intervals(spec, n):
                v = mu_interval(spec, g.a, g.b, tol)
                if not v.lo == v.hi == want:
                    failures.append(f"{label} basic interval n={n}: {v}")
                    break
    elapsed = time.perf_counter() - start
    _finish(record_criterion, 8, failures, elapsed, 20.0,
            f"10^4 triples, worst additivity error {worst:.3g}")
