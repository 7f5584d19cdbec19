import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pqseverity.events import EventKind, EventSpec, nominal_record, synthesize
from pqseverity.exceptions import DetectionError, InsufficientLengthError, ParameterRangeError, ValidationError
from pqseverity.harness import (
    SENSITIVITY_SET,
    RideThrough,
    SweepPoint,
    SweepSpec,
    _monotonicity,
    asd_contour_study,
    asd_ride_through,
    estimate_sag_params,
    estimate_transient_params,
    default_sweep,
    run_sweep,
    simultaneous_scenario,
    wavelet_sensitivity,
)
from pqseverity.indices import reference_distribution

# ---------------------------------------------------------------- sweeps


@pytest.mark.parametrize("kind,size", [("sag", 250), ("swell", 250), ("interruption", 250), ("transient", 100), ("sag_transient", 1250), ("swell_transient", 1250)])
def test_default_grid_sizes(kind, size):
    assert len(default_sweep(kind).coordinates()) == size


@pytest.mark.parametrize("kind", ["sag", "swell", "interruption"])
def test_fundamental_event_sweeps_monotone(kind):
    res = run_sweep(default_sweep(kind))
    assert len(res) == 250
    assert res.verdicts[("eni", "alpha")].n_pairs == 225
    assert res.verdicts[("eni", "td")].n_pairs == 240
    assert res.is_monotone("eni")


def test_transient_sweep_monotone_in_wni():
    res = run_sweep(default_sweep("transient"))
    assert res.indices == ("eni", "wni")
    assert res.is_monotone("wni") and res.is_monotone("eni")


def test_sag_with_transient_noiseless_monotone():
    res = run_sweep(default_sweep("sag_transient", snr_db=None))
    assert res.is_monotone("eni")


def test_swell_with_transient_noiseless_monotone():
    res = run_sweep(default_sweep("swell_transient", snr_db=None))
    bad = {k: (v.n_violations, round(v.max_violation, 4)) for k, v in res.verdicts.items() if k[0] == "eni" and not v.monotone}
    assert res.is_monotone("eni"), f"ENI violations (count, largest drop): {bad}"


@pytest.mark.parametrize("kind", ["sag", "swell", "interruption", "transient", "sag_transient", "swell_transient"])
def test_noisy_sweeps_nearly_monotone(kind):
    res = run_sweep(default_sweep(kind, snr_db=45.0, seed=2024))
    worst = {name: round(res.max_violation(name), 4) for name in res.indices}
    assert all(v < 0.5 for v in worst.values()), f"largest drop per index: {worst}"


def test_sweep_noise_is_reproducible():
    spec = default_sweep("sag", alphas=(0.2, 0.6), tds=(1, 5), snr_db=45, seed=9)
    a, b = run_sweep(spec), run_sweep(spec)
    assert np.array_equal(a.values(), b.values())
    other = run_sweep(default_sweep("sag", alphas=(0.2, 0.6), tds=(1, 5), snr_db=45, seed=10))
    assert not np.array_equal(a.values(), other.values())


def test_violation_detection():
    # reversing the reports along alpha must turn every pair into a violation
    spec = SweepSpec("sag", alphas=(0.2, 0.4, 0.6), tds=(5,))
    res = run_sweep(spec)
    assert res.verdicts[("eni", "alpha")].n_pairs == 2
    flipped = [SweepPoint(p.coords, q.report) for p, q in zip(res.points, reversed(res.points))]
    v = _monotonicity(spec, flipped)[("eni", "alpha")]
    assert v.n_violations == 2 and v.fraction == 1.0 and v.max_violation > 0


def test_grid_errors_carry_coordinates():
    with pytest.raises(ParameterRangeError) as info:
        run_sweep(SweepSpec("sag", alphas=(0.5, 0.95), tds=(5,)))
    assert info.value.grid_point == {"alpha": 0.95, "td": 5.0}
    assert "grid point" in str(info.value)
    with pytest.raises(ValidationError):
        SweepSpec("sag", alphas=())


def test_rows_and_lookup():
    res = run_sweep(default_sweep("sag", alphas=(0.3, 0.6), tds=(2, 4)))
    assert res.columns() == ["alpha", "td", "eni_pct"]
    assert len(res.rows()) == 4
    assert res.lookup(alpha=0.6, td=4).report.eni == max(res.values())


# ------------------------------------------------------- simultaneous events


def test_table_pairs_orderings():
    pair1 = simultaneous_scenario(
        EventSpec.make("sag_transient", alpha=0.5, td=10, beta=1, gamma=-55, f_tr=2000, snr_db=45, seed=1),
        EventSpec.make("sag_transient", alpha=0.3, td=10, beta=4, gamma=-55, f_tr=2000, snr_db=45, seed=2),
    )
    assert pair1.verdicts["lni"] == "first" and pair1.verdicts["wni"] == "second"
    pair2 = simultaneous_scenario(
        EventSpec.make("sag_transient", alpha=0.3, td=6, beta=3.25, gamma=-75, f_tr=2000, snr_db=45, seed=3),
        EventSpec.make("sag_transient", alpha=0.5, td=6, beta=1, gamma=-125, f_tr=2000, snr_db=45, seed=4),
    )
    assert pair2.verdicts["lni"] == "second" and pair2.verdicts["wni"] == "first"
    assert len(pair2.rows()) == 2


def test_identical_pair_has_no_preference():
    spec = EventSpec.make("swell_transient", alpha=0.4, td=8, beta=2, gamma=-55, f_tr=2000)
    res = simultaneous_scenario(spec, spec)
    assert set(res.verdicts.values()) == {"equal"}


def test_scenario_rejects_single_events():
    with pytest.raises(ValidationError):
        simultaneous_scenario(EventSpec.make("sag", alpha=0.5, td=5), EventSpec.make("sag", alpha=0.4, td=5))


# --------------------------------------------------------- wavelet choice


def test_sensitivity_set_has_seventy_wavelets():
    assert len(SENSITIVITY_SET) == 70 == len(set(SENSITIVITY_SET))


def test_single_wavelet_equals_sweep():
    spec = default_sweep("sag", alphas=(0.2, 0.5, 0.8), tds=(1, 10))
    sens = wavelet_sensitivity(spec, ["sym4"])
    assert np.array_equal(sens.results["sym4"].values(), run_sweep(spec).values())
    assert sens.summary()[0]["points"] == 6


def test_low_order_wavelets_score_transients_higher():
    spec = default_sweep("transient")
    sens = wavelet_sensitivity(spec, ["db1", "db20"])
    assert sens.all_monotone()
    assert np.all(sens.results["db1"].values() > sens.results["db20"].values())


def test_sag_curves_nearly_coincide_across_symlets():
    spec = default_sweep("sag")
    sens = wavelet_sensitivity(spec, [f"sym{n}" for n in range(2, 21)])
    assert sens.all_monotone()
    curves = np.array([r.values() for r in sens.results.values()])
    assert np.max(curves.max(axis=0) - curves.min(axis=0)) < 5.0


def test_sensitivity_rejects_shared_reference():
    spec = default_sweep("sag", reference=reference_distribution(8000, 10_000))
    with pytest.raises(ValidationError):
        wavelet_sensitivity(spec, ["db1"])


# ------------------------------------------------------ parameter estimation


def test_sag_estimate():
    est = estimate_sag_params(synthesize(EventSpec.make("sag", alpha=0.5, td=10)))
    assert 0.48 <= est.alpha_hat <= 0.52 and 9.5 <= est.td_hat <= 10.5


def test_nominal_sag_estimate():
    est = estimate_sag_params(nominal_record(8000, 10_000))
    assert est.alpha_hat == pytest.approx(0, abs=1e-9) and est.td_hat == 0


def test_interruption_estimate():
    assert estimate_sag_params(synthesize(EventSpec.make("interruption", alpha=1.0, td=10))).alpha_hat >= 0.95


def test_sag_estimate_needs_two_cycles():
    with pytest.raises(InsufficientLengthError):
        estimate_sag_params(nominal_record(300, 10_000))


def test_sag_round_trip_random():
    rng = np.random.default_rng(17)
    for _ in range(100):
        alpha, td = rng.uniform(0.1, 0.9), rng.uniform(0.5, 30)
        est = estimate_sag_params(synthesize(EventSpec.make("sag", alpha=alpha, td=td)))
        assert abs(est.alpha_hat - alpha) <= 0.03 and abs(est.td_hat - td) <= 0.5


def test_transient_estimate():
    est = estimate_transient_params(synthesize(EventSpec.make("transient", beta=2, gamma=-55, f_tr=850)))
    assert 1.8 <= est.beta_hat <= 2.2 and 800 <= est.f_tr_hat <= 900
    assert est.t_tr_hat == pytest.approx(1e3 * np.log(10) / 55, rel=0.1)


def test_transient_duration_tracks_decay():
    slow = estimate_transient_params(synthesize(EventSpec.make("transient", beta=4, gamma=-25)))
    fast = estimate_transient_params(synthesize(EventSpec.make("transient", beta=1, gamma=-125)))
    assert slow.t_tr_hat > fast.t_tr_hat


def test_no_transient_detected():
    with pytest.raises(DetectionError):
        estimate_transient_params(nominal_record(8000, 10_000))


# ------------------------------------------------------------- ASD study


@pytest.mark.parametrize("alpha,td,region", [(0.05, 20, "running"), (0.5, 2, "running"), (0.5, 10, "stopped"), (0.1, 4, "running"), (0.55, 3.5, "running"), (0.56, 3.5, "stopped"), (1.0, 3, "running")])
def test_ride_through_examples(alpha, td, region):
    assert asd_ride_through(alpha, td) is RideThrough(region)


@settings(max_examples=300, deadline=None)
@given(a=st.floats(0, 1), b=st.floats(0, 1), t=st.floats(0, 40), u=st.floats(0, 40))
def test_ride_through_monotone(a, b, t, u):
    (a0, a1), (t0, t1) = sorted((a, b)), sorted((t, u))
    if asd_ride_through(a0, t0) is RideThrough.STOPPED:
        assert asd_ride_through(a1, t1) is RideThrough.STOPPED


def test_ride_through_rejects_bad_input():
    with pytest.raises(ValidationError):
        asd_ride_through(1.2, 5)
    with pytest.raises(ValidationError):
        asd_ride_through(0.5, -1)


@pytest.fixture(scope="module")
def asd_study():
    return asd_contour_study()


def test_asd_grid_shape(asd_study):
    assert len(asd_study.rows) == 21 * 61
    assert set(asd_study.rows[0]) == {"alpha", "td", "eni_pct", "region"}


def test_asd_extremes(asd_study):
    assert asd_study.eni_at(0, 0) == 0.0
    assert asd_study.eni_at(1.0, 30) == pytest.approx(73, abs=3)
    enis = [r["eni_pct"] for r in asd_study.rows]
    assert min(enis) == 0.0 and max(enis) == asd_study.eni_at(1.0, 30)


def test_asd_low_index_means_running(asd_study):
    # every event scoring at or below 1.3% keeps the drive running
    assert asd_study.low_implies_running(1.3)
    assert asd_study.threshold_lo > 1.3
