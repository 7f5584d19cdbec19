"""Acceptance suite: one test per criterion, at the pinned tolerances.

Run alone with ``pytest tests/test_acceptance.py -v``; each criterion prints
as a single PASSED/FAILED line.
"""

import math
import time

import numpy as np
import pytest

from pqseverity.events import EventSpec, synthesize
from pqseverity.harness import (
    asd_contour_study,
    estimate_sag_params,
    default_sweep,
    run_sweep,
    simultaneous_scenario,
    wavelet_sensitivity,
)
from pqseverity.indices import eni, monotonicity_margin, reference_distribution
from pqseverity.preference import preference_weights
from pqseverity.wavelet import analysis_filters, band_layout, decomposition_depth, dwt_decompose


def circular_oracle(x, name, D):
    """Level-by-level direct sum a[k] = sum_j h[j] x[(2k + L/2 - j) mod N]."""
    h, g = analysis_filters(name)
    L = len(h)
    a, out = list(x), []
    for _ in range(D):
        if len(a) % 2:
            a.append(0.0)
        N = len(a)
        lo = [sum(h[j] * a[(2 * k + L // 2 - j) % N] for j in range(L)) for k in range(N // 2)]
        hi = [sum(g[j] * a[(2 * k + L // 2 - j) % N] for j in range(L)) for k in range(N // 2)]
        out.append(np.array(hi))
        a = lo
    return out + [np.array(a)]


def test_criterion_01_preference_weights():
    t0 = time.perf_counter()
    w = preference_weights([1, 2, 3], 9, D=2).weights
    elapsed = time.perf_counter() - t0
    assert np.max(np.abs(w - [0.6923, 0.2308, 0.0769])) <= 1e-4
    assert elapsed < 1e-3, f"{elapsed * 1e3:.3f} ms"


def test_criterion_02_boundedness_and_identity():
    t0 = time.perf_counter()
    rng = np.random.default_rng(2)
    for i in range(10_000):
        n_bands = int(rng.integers(2, 10))
        x = rng.exponential(size=n_bands) * 10 ** rng.uniform(-3, 4)
        n = rng.exponential(size=n_bands) * 10 ** rng.uniform(-3, 4)
        if i % 5 == 0:
            x[rng.random(n_bands) < 0.5] = 0.0
        v = eni(x, n)
        assert 0.0 <= v <= 100.0
        assert abs(v - eni(n, x)) <= 1e-12 * max(v, 1.0)
        assert v > 0  # continuous draws never coincide
        if x.any():
            assert eni(x, x) == 0.0
        assert eni(np.zeros(n_bands), n) == pytest.approx(100.0, abs=1e-12)
    assert time.perf_counter() - t0 < 5.0


def test_criterion_03_dwt_oracle_and_parseval():
    t0 = time.perf_counter()
    rng = np.random.default_rng(3)
    names = ["db1", "db2", "db3", "sym2", "sym3", "sym4", "coif1"]
    for _ in range(200):
        name = names[rng.integers(len(names))]
        L = len(analysis_filters(name)[0])
        D = int(rng.integers(1, 4))
        x = rng.normal(size=int(rng.integers(L, 65)))
        got = dwt_decompose(x, name, D).coefficients()
        for c, r in zip(got, circular_oracle(x, name, D)):
            assert np.max(np.abs(c - r)) <= 1e-12
    for _ in range(200):
        name = names[rng.integers(len(names))]
        D = int(rng.integers(1, 4))
        x = rng.normal(size=2 ** int(rng.integers(max(D, 3), 7)))
        assert dwt_decompose(x, name, D).energy == pytest.approx(float(x @ x), rel=1e-9)
    assert time.perf_counter() - t0 < 10.0


def test_criterion_04_depth_rule_and_band_edges():
    assert decomposition_depth(10_000, 50) == 7
    assert decomposition_depth(20_000, 50) == 8
    printed = [(2500, 5000), (1250, 2500), (625, 1250), (312.5, 625), (156.20, 312.25), (78.10, 156.20), (39.05, 78.10), (0, 39.05)]
    got = [(round(b.f_low, 2), round(b.f_high, 2)) for b in band_layout(10_000, 7)]
    mismatched = [(f"B{i}", g, p) for i, (g, p) in enumerate(zip(got, printed), start=1) if g != p]
    assert not mismatched, f"band edges differ from the table at 2 decimals: {mismatched}"


def test_criterion_05_nominal_band_energy():
    e7 = reference_distribution(8000, 10_000, 50, "sym4", 7)[7]
    assert abs(e7 - 1995) <= 0.02 * 1995, f"e7 = {e7:.2f}"


def test_criterion_06_sag_sweep():
    t0 = time.perf_counter()
    res = run_sweep(default_sweep("sag"))
    assert len(res) == 250
    assert res.verdicts[("eni", "alpha")].n_violations == 0
    assert res.verdicts[("eni", "td")].n_violations == 0
    top = res.lookup(alpha=0.9, td=30).report.eni
    assert top == max(res.values())
    assert abs(top - 73) <= 3, top
    assert time.perf_counter() - t0 < 60


def test_criterion_07_transient_wni_range():
    t0 = time.perf_counter()
    res = run_sweep(default_sweep("transient"))
    assert len(res) == 100 and res.spec.f_trs == (4000.0,)
    assert res.verdicts[("wni", "beta")].n_violations == 0
    assert res.verdicts[("wni", "gamma")].n_violations == 0
    lo, hi = res.index_range("wni")
    assert abs(lo - 2.5) <= 3 and abs(hi - 90) <= 3, (lo, hi)
    assert time.perf_counter() - t0 < 60


TABLE = {
    "pair1": (
        dict(alpha=0.5, td=10, beta=1, gamma=-55),
        dict(alpha=0.3, td=10, beta=4, gamma=-55),
        dict(eni=(15.10, 16.49), lni=(15.08, 9.85), wni=(15.70, 55.82)),
    ),
    "pair2": (
        dict(alpha=0.3, td=6, beta=3.25, gamma=-75),
        dict(alpha=0.5, td=6, beta=1, gamma=-125),
        dict(eni=(8.60, 8.91), lni=(5.88, 8.91), wni=(30.24, 9.10)),
    ),
}


def test_criterion_08_simultaneous_pairs():
    results = {}
    for i, (name, (a, b, _)) in enumerate(TABLE.items()):
        results[name] = simultaneous_scenario(
            EventSpec.make("sag_transient", f_tr=2000, snr_db=45, seed=100 + 2 * i, **a),
            EventSpec.make("sag_transient", f_tr=2000, snr_db=45, seed=101 + 2 * i, **b),
        )
    p1, p2 = results["pair1"].reports, results["pair2"].reports
    assert p1[0].lni > p1[1].lni and p1[0].wni < p1[1].wni
    assert p2[0].lni < p2[1].lni and p2[0].wni > p2[1].wni
    for name, (_, _, published) in TABLE.items():
        for index, values in published.items():
            for rep, want in zip(results[name].reports, values):
                got = getattr(rep, index)
                assert abs(got - want) <= 2, (name, index, got, want)


def test_criterion_09_wavelet_sensitivity():
    wavelets = [f"db{n}" for n in range(1, 21)] + [f"sym{n}" for n in range(2, 21)] + [f"coif{n}" for n in range(1, 6)]
    assert len(wavelets) >= 30
    for kind in ("sag", "swell", "transient"):
        sens = wavelet_sensitivity(default_sweep(kind), wavelets)
        broken = [w for w, r in sens.results.items() if not r.is_monotone()]
        assert not broken, (kind, broken)
    tr = wavelet_sensitivity(default_sweep("transient", betas=(2.5,), gammas=(-55,)), ["db1", "db20"])
    assert tr.results["db1"].points[0].report.eni > tr.results["db20"].points[0].report.eni


def test_criterion_10_asd_contour():
    study = asd_contour_study()
    running = [r["eni_pct"] for r in study.rows if r["region"] == "running"]
    deep = [r["eni_pct"] for r in study.rows if r["td"] > 4 and r["alpha"] > 0.1 + 1e-9]
    problems = []
    if max(running) > 1.3 + 0.3:
        problems.append(f"largest Running ENI {max(running):.2f} > 1.6")
    if min(deep) <= 8 - 0.5:
        problems.append(f"smallest deep-Stopped ENI {min(deep):.2f} <= 7.5")
    if study.eni_at(0, 0) != 0.0:
        problems.append(f"ENI(0, 0) = {study.eni_at(0, 0)}")
    if abs(study.eni_at(1.0, 30) - 73) > 3:
        problems.append(f"ENI(1.0, 30) = {study.eni_at(1.0, 30):.2f}")
    assert not problems, "; ".join(problems)


def test_criterion_11_margin_sign_matches_finite_difference():
    rng = np.random.default_rng(11)
    cases = 0
    while cases < 1000:
        n_bands = int(rng.integers(2, 10))
        x = rng.exponential(size=n_bands) * 1000
        n = rng.exponential(size=n_bands) * 1000
        j = int(rng.integers(1, n_bands + 1))
        m = monotonicity_margin(x, n, j)
        if abs(m) <= 1e-6:
            continue
        eps = 1e-5 * x[j - 1]
        up, down = x.copy(), x.copy()
        up[j - 1] += eps
        down[j - 1] -= eps
        assert math.copysign(1, eni(up, n) - eni(down, n)) == math.copysign(1, m)
        cases += 1


def test_criterion_12_sag_parameter_round_trip():
    rng = np.random.default_rng(12)
    for _ in range(100):
        alpha, td = rng.uniform(0.1, 0.9), rng.uniform(0.5, 30)
        est = estimate_sag_params(synthesize(EventSpec.make("sag", alpha=alpha, td=td)))
        assert abs(est.alpha_hat - alpha) <= 0.03, (alpha, est.alpha_hat)
        assert abs(est.td_hat - td) <= 0.5, (td, est.td_hat)
