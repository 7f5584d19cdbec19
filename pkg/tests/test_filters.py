"""Filter table checks against independent constructions."""

import hashlib
import math

import numpy as np
import pytest
from scipy.special import comb

from pqseverity._filter_tables import DEC_LO
from pqseverity.wavelet import WaveletSpec, analysis_filters, available_wavelets

TABLE_DIGEST = "36192918965ed264ddc323c35b289c2daf08fd7c96f979ffd147a843b91e1580"


def daubechies_oracle(N):
    """Minimum-phase Daubechies low-pass by spectral factorization."""
    # P(y) = sum_k C(N-1+k, k) y**k with y = (2 - z - 1/z) / 4, times z**(N-1)
    poly = np.zeros(1)
    y = np.array([-0.25, 0.5, -0.25])  # z * y(z) as a polynomial in z
    for k in range(N):
        term = np.array([comb(N - 1 + k, k)])
        for _ in range(k):
            term = np.convolve(term, y)
        # shift so every term is multiplied by z**(N-1)
        term = np.concatenate([term, np.zeros(N - 1 - k)])
        pad = 2 * (N - 1) + 1 - term.size
        poly = np.pad(poly, (pad + term.size - poly.size, 0)) + np.pad(term, (pad, 0))
    roots = np.roots(poly) if N > 1 else np.array([])
    inside = roots[np.abs(roots) < 1]
    q = np.real(np.poly(inside)) if inside.size else np.ones(1)
    h = np.convolve(q, [1.0])
    for _ in range(N):
        h = np.convolve(h, [1.0, 1.0])
    return h * math.sqrt(2) / h.sum()


def autocorrelation(h):
    return np.correlate(h, h, mode="full")


def test_table_digest():
    digest = hashlib.sha256()
    for name in sorted(DEC_LO):
        digest.update(name.encode())
        digest.update(repr(tuple(DEC_LO[name])).encode())
    assert digest.hexdigest() == TABLE_DIGEST


def test_every_supported_wavelet_has_a_table():
    names = {w.name for w in available_wavelets()}
    assert names == set(DEC_LO)
    assert len(names) == 74


@pytest.mark.parametrize("name", sorted(DEC_LO))
def test_orthonormal(name):
    h = np.array(DEC_LO[name])
    L = h.size
    assert L % 2 == 0
    assert h.sum() == pytest.approx(math.sqrt(2), abs=1e-10)
    for m in range(L // 2):
        expected = 1.0 if m == 0 else 0.0
        assert np.dot(h[: L - 2 * m], h[2 * m :]) == pytest.approx(expected, abs=5e-10)


@pytest.mark.parametrize("N", range(1, 11))
def test_daubechies_matches_spectral_factorization(N):
    h = np.array(DEC_LO[f"db{N}"])
    ref = daubechies_oracle(N)
    assert h.size == 2 * N
    err = min(np.max(np.abs(h - ref)), np.max(np.abs(h[::-1] - ref)))
    assert err < 1e-8


@pytest.mark.parametrize("N", range(2, 11))
def test_symlet_shares_daubechies_magnitude_response(N):
    sym = np.array(DEC_LO[f"sym{N}"])
    assert np.allclose(autocorrelation(sym), autocorrelation(daubechies_oracle(N)), atol=1e-9)


def _family_moments(name):
    spec = WaveletSpec.parse(name)
    return 2 * spec.order if spec.family.value == "coif" else spec.order


@pytest.mark.parametrize(
    "name", [f"db{n}" for n in range(1, 11)] + [f"sym{n}" for n in range(2, 11)] + [f"coif{n}" for n in range(1, 6)]
)
def test_vanishing_moments(name):
    _, g = analysis_filters(name)
    L = g.size
    t = (np.arange(L) - (L - 1) / 2) / L
    for m in range(_family_moments(name)):
        assert abs(np.dot(g, t**m)) < 1e-9, m


def test_high_pass_is_quadrature_mirror():
    h, g = analysis_filters("sym4")
    L = h.size
    assert np.allclose(g, [(-1) ** k * h[L - 1 - k] for k in range(L)])
    assert abs(g.sum()) < 1e-10
    assert np.dot(h, g) == pytest.approx(0.0, abs=1e-12)
