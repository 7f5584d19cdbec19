import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pqseverity.events import VoltageRecord
from pqseverity.exceptions import InsufficientLengthError, ParameterRangeError, UnsupportedWaveletError, ValidationError
from pqseverity.wavelet import (
    BoundaryMode,
    WaveletSpec,
    analysis_filters,
    band_layout,
    decomposition_depth,
    dwt_decompose,
)

SMALL = ["db1", "db2", "db3", "sym2", "sym3", "sym4", "coif1"]


def brute_force_pyramid(x, name, D):
    """Direct evaluation of a[k] = sum_j h[j] x[(2k + L/2 - j) mod N], level by level."""
    h, g = analysis_filters(name)
    L = len(h)
    details = []
    a = [float(v) for v in x]
    for _ in range(D):
        if len(a) % 2:
            a = a + [0.0]
        N = len(a)
        lo, hi = [], []
        for k in range(N // 2):
            s_lo = s_hi = 0.0
            for j in range(L):
                v = a[(2 * k + L // 2 - j) % N]
                s_lo += h[j] * v
                s_hi += g[j] * v
            lo.append(s_lo)
            hi.append(s_hi)
        details.append(np.array(hi))
        a = lo
    return details, np.array(a)


def brute_force_symmetric(x, name):
    """One symmetric-extension level: convolve the half-sample mirrored signal, keep odd taps."""
    h, g = analysis_filters(name)
    L = len(h)
    N = len(x)

    def ext(i):
        # half-sample symmetric reflection: ... x1 x0 | x0 x1 ... x_{N-1} | x_{N-1} x_{N-2} ...
        period = 2 * N
        i %= period
        return x[i] if i < N else x[period - 1 - i]

    n_out = (N + L - 1) // 2
    lo = [sum(h[j] * ext(2 * k + 1 - j) for j in range(L)) for k in range(n_out)]
    hi = [sum(g[j] * ext(2 * k + 1 - j) for j in range(L)) for k in range(n_out)]
    return np.array(lo), np.array(hi)


def test_periodic_matches_brute_force_oracle():
    rng = np.random.default_rng(20240601)
    for _ in range(200):
        name = SMALL[rng.integers(len(SMALL))]
        L = WaveletSpec.parse(name).filter_length
        D = int(rng.integers(1, 4))
        N = int(rng.integers(max(L, 2), 65))
        x = rng.normal(size=N)
        pyr = dwt_decompose(x, name, D)
        details, approx = brute_force_pyramid(x, name, D)
        for got, want in zip(pyr.details, details):
            assert np.max(np.abs(got - want)) < 1e-12
        assert np.max(np.abs(pyr.approximation - approx)) < 1e-12


def test_symmetric_matches_brute_force_oracle():
    rng = np.random.default_rng(7)
    for name in SMALL:
        x = rng.normal(size=int(rng.integers(16, 40)))
        pyr = dwt_decompose(x, name, 1, mode="symmetric")
        lo, hi = brute_force_symmetric(x, name)
        assert np.allclose(pyr.approximation, lo, atol=1e-12)
        assert np.allclose(pyr.details[0], hi, atol=1e-12)


@settings(max_examples=60, deadline=None)
@given(
    name=st.sampled_from(["db1", "db4", "sym4", "sym8", "coif2", "db10"]),
    D=st.integers(1, 5),
    extra=st.integers(0, 3),
    seed=st.integers(0, 2**32 - 1),
)
def test_parseval_on_dyadic_lengths(name, D, extra, seed):
    N = 2 ** (D + extra) * 4
    N = max(N, 2 ** D * math.ceil(WaveletSpec.parse(name).filter_length / 2 ** D))
    x = np.random.default_rng(seed).normal(size=N)
    pyr = dwt_decompose(x, name, D)
    assert pyr.energy == pytest.approx(float(x @ x), rel=1e-9)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), a=st.floats(-3, 3), b=st.floats(-3, 3))
def test_linear(seed, a, b):
    rng = np.random.default_rng(seed)
    x, y = rng.normal(size=64), rng.normal(size=64)
    px, py, pz = (dwt_decompose(v, "sym4", 3) for v in (x, y, a * x + b * y))
    for cx, cy, cz in zip(px.coefficients(), py.coefficients(), pz.coefficients()):
        assert np.allclose(cz, a * cx + b * cy, atol=1e-10)


def test_band_lengths_follow_halving():
    pyr = dwt_decompose(np.ones(8000), "sym4", 7)
    assert [c.size for c in pyr.coefficients()] == [4000, 2000, 1000, 500, 250, 125, 63, 63]


def test_record_uses_depth_rule():
    rec = VoltageRecord(np.zeros(8000), fs=10_000, f=50)
    assert dwt_decompose(rec).D == 7


def test_depth_rule():
    assert decomposition_depth(10_000, 50) == 7
    assert decomposition_depth(20_000, 50) == 8
    assert decomposition_depth(15_360, 60) == 8  # exact boundary: 15360 / 2**8 = 60, both 7 and 8 qualify
    for fs, f in [(10_000, 50), (20_000, 50), (30_000, 60), (7_680, 60), (44_100, 50)]:
        D = decomposition_depth(fs, f)
        assert fs / 2 ** (D + 1) <= f <= fs / 2**D


@pytest.mark.parametrize("fs,f", [(100, 50), (100, 60), (100, 0), (100, -5)])
def test_depth_rule_rejects_bad_frequency(fs, f):
    with pytest.raises(ParameterRangeError):
        decomposition_depth(fs, f)


def test_band_layout_edges():
    bands = band_layout(10_000, 7)
    assert [(b.f_low, b.f_high) for b in bands[:4]] == [(2500, 5000), (1250, 2500), (625, 1250), (312.5, 625)]
    assert bands[6].f_low == 39.0625 and bands[6].f_high == 78.125
    assert bands[7].kind == "approximation" and (bands[7].f_low, bands[7].f_high) == (0.0, 39.0625)
    assert [b.label for b in bands] == [f"B{i}" for i in range(1, 9)]


def test_band_layout_within_table_rounding():
    printed = [(2500, 5000), (1250, 2500), (625, 1250), (312.5, 625), (156.20, 312.25), (78.10, 156.20), (39.05, 78.10), (0, 39.05)]
    bands = band_layout(10_000, 7)
    for b, (lo, hi) in zip(bands, printed):
        # the printed edges are truncated; the exact dyadic edges lie within a quarter hertz
        assert abs(b.f_low - lo) <= 0.06 and abs(b.f_high - hi) <= 0.26


def test_fundamental_lands_in_last_detail_band():
    bands = band_layout(10_000, decomposition_depth(10_000, 50))
    assert bands[-2].f_low <= 50 <= bands[-2].f_high


def test_wavelet_parsing():
    assert WaveletSpec.parse("haar").name == "db1"
    assert WaveletSpec.parse(" SYM4 ").name == "sym4"
    for bad in ["sym1", "db0", "coif18", "bior2.2", "morlet", "db"]:
        with pytest.raises(UnsupportedWaveletError):
            WaveletSpec.parse(bad)


def test_decompose_errors():
    with pytest.raises(InsufficientLengthError):
        dwt_decompose(np.ones(5), "sym4", 1)
    with pytest.raises(ValidationError):
        dwt_decompose(np.ones(64), "sym4")
    with pytest.raises(ParameterRangeError):
        dwt_decompose(np.ones(64), "sym4", 0)
    with pytest.raises(ValidationError):
        dwt_decompose(np.ones((8, 8)), "sym4", 1)
    with pytest.raises(ValidationError):
        dwt_decompose(np.ones(64), "sym4", 1, mode="zero")


def test_detail_of_constant_is_zero():
    pyr = dwt_decompose(np.full(256, 3.0), "db4", 4)
    for d in pyr.details:
        assert np.max(np.abs(d)) < 1e-9
    assert pyr.energy == pytest.approx(256 * 9.0)


def test_agrees_with_pywavelets():
    pywt = pytest.importorskip("pywt")
    rng = np.random.default_rng(3)
    x = rng.normal(size=512)
    for name in ["db1", "sym4", "coif3", "db20"]:
        ours = dwt_decompose(x, name, 4)
        ref = pywt.wavedec(x, name, mode="periodization", level=4)
        assert np.allclose(ours.approximation, ref[0], atol=1e-10)
        for lvl, d in enumerate(ours.details, start=1):
            # our high-pass is the negated convention; energies are unaffected
            assert np.allclose(-d, ref[-lvl], atol=1e-10)
        sym = dwt_decompose(x, name, 2, mode=BoundaryMode.SYMMETRIC)
        ref = pywt.wavedec(x, name, mode="symmetric", level=2)
        assert np.allclose(sym.approximation, ref[0], atol=1e-10)
