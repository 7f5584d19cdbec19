import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pqseverity.events import EventKind, EventSpec, VoltageRecord, add_awgn, nominal_record, synthesize
from pqseverity.exceptions import NyquistError, ParameterRangeError, ValidationError


def window(spec):
    rec = synthesize(spec)
    k = np.arange(len(rec))
    n1 = round(spec.start * spec.fs)
    n2 = round(spec.t2 * spec.fs)
    return rec, (k > n1) & (k <= n2)


def test_nominal_is_unit_sinusoid():
    rec = synthesize(EventSpec(EventKind.NOMINAL))
    t = np.arange(8000) / 10_000
    assert len(rec) == 8000
    assert np.array_equal(rec.samples, np.sin(2 * np.pi * 50 * t))
    assert rec.samples.max() == pytest.approx(1.0)
    assert np.array_equal(rec.samples, nominal_record(8000, 10_000, 50).samples)


def test_sag_depths_during_event():
    deep, gate = window(EventSpec.make("sag", alpha=0.8, td=10))
    shallow, _ = window(EventSpec.make("sag", alpha=0.2, td=10))
    assert np.max(np.abs(deep.samples[gate])) == pytest.approx(0.2, abs=1e-3)
    assert np.max(np.abs(shallow.samples[gate])) == pytest.approx(0.8, abs=1e-3)


def test_gate_covers_td_cycles_of_samples():
    _, gate = window(EventSpec.make("sag", alpha=0.5, td=10))
    assert gate.sum() == 2000


def test_zero_depth_sag_is_nominal():
    rec = synthesize(EventSpec.make("sag", alpha=0.0, td=12), strict=False)
    assert np.array_equal(rec.samples, synthesize(EventSpec(EventKind.NOMINAL)).samples)


@pytest.mark.parametrize("kind", ["sag", "swell", "interruption"])
def test_outside_gate_equals_nominal(kind):
    alpha = {"sag": 0.6, "swell": 0.4, "interruption": 1.0}[kind]
    rec, gate = window(EventSpec.make(kind, alpha=alpha, td=7.5))
    nominal = synthesize(EventSpec(EventKind.NOMINAL)).samples
    assert np.array_equal(rec.samples[~gate], nominal[~gate])
    factor = 1 - alpha if kind != "swell" else 1 + alpha
    assert np.allclose(rec.samples[gate], factor * nominal[gate])


@settings(max_examples=40, deadline=None)
@given(a=st.floats(0.1, 0.9), b=st.floats(0.1, 0.9), td=st.floats(0.5, 30))
def test_deeper_sag_has_smaller_envelope(a, b, td):
    lo, hi = sorted((a, b))
    x, gate = window(EventSpec.make("sag", alpha=lo, td=td))
    y, _ = window(EventSpec.make("sag", alpha=hi, td=td))
    assert np.all(np.abs(y.samples[gate]) <= np.abs(x.samples[gate]))


def test_transient_starts_after_inception():
    spec = EventSpec.make("transient", beta=3, gamma=-55, f_tr=2000)
    rec = synthesize(spec)
    n1 = round(spec.start * spec.fs)
    nominal = synthesize(EventSpec(EventKind.NOMINAL)).samples
    assert np.array_equal(rec.samples[: n1 + 1], nominal[: n1 + 1])
    t = np.arange(len(rec)) / spec.fs
    expected = nominal + (np.arange(len(rec)) > n1) * 3 * np.exp(-55 * (t - spec.start)) * np.sin(2 * np.pi * 2000 * t)
    assert np.allclose(rec.samples, expected, atol=1e-12)


def test_simultaneous_is_sum_of_constituents():
    sim = synthesize(EventSpec.make("sag_transient", alpha=0.5, td=10, beta=2, gamma=-75, f_tr=2000))
    sag = synthesize(EventSpec.make("sag", alpha=0.5, td=10))
    tr = synthesize(EventSpec.make("transient", t1=0.1, beta=2, gamma=-75, f_tr=2000))
    nominal = synthesize(EventSpec(EventKind.NOMINAL))
    assert np.allclose(sim.samples, sag.samples + tr.samples - nominal.samples, atol=1e-12)


@settings(max_examples=60, deadline=None)
@given(
    kind=st.sampled_from(["sag", "swell", "interruption", "transient", "sag_transient", "swell_transient"]),
    u=st.floats(0, 1),
    td=st.floats(0.5, 30),
    beta=st.floats(1, 4),
    gamma=st.floats(-125, -25),
    f_tr=st.floats(400, 4000),
)
def test_samples_bounded(kind, u, td, beta, gamma, f_tr):
    lo, hi = {"sag": (0.1, 0.9), "swell": (0.1, 0.8), "interruption": (0.91, 1.0)}.get(kind.split("_")[0], (0.1, 0.8))
    alpha = lo + u * (hi - lo)
    spec = EventSpec.make(kind, alpha=alpha, td=td, beta=beta, gamma=gamma, f_tr=f_tr)
    x = synthesize(spec).samples
    bound = 1 + (alpha if spec.kind.has_gate else 0) + (beta if spec.kind.has_transient else 0)
    assert np.all(np.isfinite(x)) and np.max(np.abs(x)) <= bound + 1e-12


@pytest.mark.parametrize(
    "kind,field,kw",
    [
        ("sag", "alpha", dict(alpha=0.95, td=5)),
        ("sag", "alpha", dict(alpha=0.05, td=5)),
        ("swell", "alpha", dict(alpha=0.85, td=5)),
        ("interruption", "alpha", dict(alpha=0.9, td=5)),
        ("sag", "t_d", dict(alpha=0.5, td=0.25)),
        ("sag", "t_d", dict(alpha=0.5, td=31)),
        ("transient", "gamma", dict(beta=2, gamma=-130)),
        ("transient", "beta", dict(beta=4.5)),
        ("transient", "f_tr", dict(beta=2, f_tr=300)),
    ],
)
def test_range_violation_names_parameter(kind, field, kw):
    with pytest.raises(ParameterRangeError) as info:
        synthesize(EventSpec.make(kind, **kw))
    assert info.value.name == field


def test_nyquist():
    with pytest.raises(NyquistError):
        synthesize(EventSpec.make("transient", beta=2, f_tr=4000, fs=8000))
    with pytest.raises(NyquistError):
        synthesize(EventSpec(EventKind.NOMINAL, f=50, fs=90))


def test_irrelevant_fields_ignored():
    # a sag never looks at transient parameters and vice versa
    synthesize(EventSpec.make("sag", alpha=0.5, td=5, beta=99, gamma=10, f_tr=1e6))
    synthesize(EventSpec.make("transient", beta=2, alpha=7))


def test_inception_clamped_to_window():
    rec = synthesize(EventSpec.make("transient", t1=0.9, beta=2))
    assert np.array_equal(rec.samples, synthesize(EventSpec(EventKind.NOMINAL)).samples)


def test_kind_aliases():
    assert EventKind.parse("Sag-With-Transient") is EventKind.SAG_WITH_TRANSIENT
    assert EventKind.parse("osc_transient") is EventKind.OSC_TRANSIENT
    with pytest.raises(ValidationError):
        EventKind.parse("flicker")


def test_awgn_snr():
    rec = nominal_record(8000, 10_000)
    noisy = add_awgn(rec, 45, seed=11)
    noise = noisy.samples - rec.samples
    snr = 10 * math.log10(np.mean(rec.samples**2) / np.mean(noise**2))
    assert abs(snr - 45) < 0.5
    assert abs(noise.mean()) < 5 * noise.std() / math.sqrt(noise.size)
    assert noisy.metadata["seed"] == 11 and noisy.metadata["snr_db"] == 45


def test_awgn_deterministic():
    rec = nominal_record(8000, 10_000)
    assert np.array_equal(add_awgn(rec, 30, 5).samples, add_awgn(rec, 30, 5).samples)
    assert not np.array_equal(add_awgn(rec, 30, 5).samples, add_awgn(rec, 30, 6).samples)


def test_awgn_absent_is_identity():
    rec = nominal_record(100, 10_000)
    assert add_awgn(rec, None) is rec
    with pytest.raises(ParameterRangeError):
        add_awgn(rec, math.inf)


def test_spec_noise_applied():
    a = synthesize(EventSpec.make("sag", alpha=0.5, td=5, snr_db=45, seed=1))
    b = synthesize(EventSpec.make("sag", alpha=0.5, td=5))
    assert not np.array_equal(a.samples, b.samples)
    assert np.max(np.abs(a.samples - b.samples)) < 0.05


def test_record_validation():
    with pytest.raises(ValidationError):
        VoltageRecord([], fs=1000)
    with pytest.raises(ValidationError):
        VoltageRecord([0.0, math.nan], fs=1000)
    with pytest.raises(ValidationError):
        VoltageRecord([0.0, 1.0], fs=0)
    rec = VoltageRecord([0.0, 1.0], fs=1000)
    with pytest.raises(ValueError):
        rec.samples[0] = 3.0
