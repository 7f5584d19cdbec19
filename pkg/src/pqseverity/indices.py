"""Band energy distributions and the normalized energy-norm indices.

All three indices share one form,

    100 * ||X - N||_p / sqrt(||X||_p**2 + ||N||_p**2)

applied to the full distributions (ENI), to preference-weighted
distributions (WNI) or to the two lowest bands only (LNI). For ``p >= 2`` and
non-negative inputs the result lies in [0, 100]; for ``1 <= p < 2`` the
ceiling is ``100 * 2**(1/p - 1/2)``, reached by disjoint supports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Union

import numpy as np

from .events import VoltageRecord, nominal_record
from .exceptions import (
    DimensionError,
    NumericalError,
    ParameterRangeError,
    UndefinedRatioError,
    ValidationError,
)
from .preference import PreferenceProfile, check_weights, high_band_profile
from .wavelet import Band, BoundaryMode, WaveletPyramid, WaveletSpec, band_layout, decomposition_depth, dwt_decompose

__all__ = [
    "EnergyDistribution",
    "IndexReport",
    "band_energies",
    "eni",
    "wni",
    "lni",
    "monotonicity_margin",
    "index_ceiling",
    "reference_distribution",
    "compute_indices",
]


@dataclass(frozen=True)
class EnergyDistribution:
    """Per-band coefficient energies ``e[1..D+1]`` (finest detail first, approximation last)."""

    energies: np.ndarray
    D: int
    wavelet: Optional[WaveletSpec] = None
    fs: Optional[float] = None

    def __post_init__(self):
        e = np.array(self.energies, dtype=float)
        if e.ndim != 1 or e.size != self.D + 1:
            raise DimensionError(f"expected {self.D + 1} band energies, got shape {e.shape}")
        if not np.all(np.isfinite(e)) or np.any(e < 0):
            raise ValidationError("band energies must be finite and non-negative")
        e.setflags(write=False)
        object.__setattr__(self, "energies", e)

    def __len__(self):
        return self.energies.size

    def __getitem__(self, band: int) -> float:
        """Energy of band ``B{band}`` (1-based, as the bands are labelled)."""
        if not 1 <= band <= self.D + 1:
            raise IndexError(f"band B{band} outside B1..B{self.D + 1}")
        return float(self.energies[band - 1])

    @property
    def total(self) -> float:
        return float(self.energies.sum())

    def bands(self) -> List[Band]:
        if self.fs is None:
            raise ValidationError("sampling rate unknown for this distribution")
        return band_layout(self.fs, self.D)


def band_energies(pyramid: WaveletPyramid, fs: Optional[float] = None) -> EnergyDistribution:
    e = [float(np.dot(c, c)) for c in pyramid.coefficients()]
    return EnergyDistribution(np.array(e), pyramid.D, pyramid.wavelet, fs)


def _vector(x) -> np.ndarray:
    if isinstance(x, EnergyDistribution):
        return x.energies
    return np.asarray(x, dtype=float)


def _pnorm(v: np.ndarray, p: float) -> float:
    if math.isinf(p):
        return float(np.max(np.abs(v))) if v.size else 0.0
    return float(np.sum(np.abs(v) ** p) ** (1.0 / p))


def _check_p(p: float) -> float:
    p = float(p)
    if not p >= 1:
        raise ParameterRangeError("p", p, 1, math.inf)
    return p


def index_ceiling(p: float) -> float:
    """Largest value the index can take for non-negative inputs and norm order ``p``."""
    p = _check_p(p)
    if p >= 2:
        return 100.0
    return 100.0 * 2.0 ** (1.0 / p - 0.5)


def _normalized_norm(x: np.ndarray, n: np.ndarray, p: float) -> float:
    if x.shape != n.shape:
        raise DimensionError(f"distribution lengths differ: {x.shape} vs {n.shape}")
    p = _check_p(p)
    peak = max(float(np.max(np.abs(x), initial=0.0)), float(np.max(np.abs(n), initial=0.0)))
    if peak == 0.0:
        raise UndefinedRatioError("both energy distributions are all zero; the index is 0/0")
    # power-of-two rescale: exact, and keeps |v|**p away from overflow
    scale = math.ldexp(1.0, math.frexp(peak)[1])
    xs, ns = x / scale, n / scale
    num = _pnorm(xs - ns, p)
    den = math.hypot(_pnorm(xs, p), _pnorm(ns, p))
    return min(100.0 * num / den, index_ceiling(p))


def eni(ex, en, p: float = 2) -> float:
    """Energy Norm Index in percent."""
    return _normalized_norm(_vector(ex), _vector(en), p)


def wni(ex, en, profile: Union[PreferenceProfile, np.ndarray], p: float = 2) -> float:
    """Weighted Norm Index: ENI of the element-wise weighted distributions."""
    x, n = _vector(ex), _vector(en)
    if x.shape != n.shape:
        raise DimensionError(f"distribution lengths differ: {x.shape} vs {n.shape}")
    w = check_weights(profile, x.size)
    if np.all(w == w[0]):
        # equal weights cancel in the ratio
        return _normalized_norm(x, n, p)
    return _normalized_norm(w * x, w * n, p)


def lni(ex, en, p: float = 2) -> float:
    """Low-pass Norm Index over the last detail band and the approximation."""
    x, n = _vector(ex), _vector(en)
    if x.size < 2:
        raise DimensionError("segmented index needs at least one detail band plus the approximation")
    if x.shape != n.shape:
        raise DimensionError(f"distribution lengths differ: {x.shape} vs {n.shape}")
    return _normalized_norm(x[-2:], n[-2:], p)


def monotonicity_margin(ex, en, band: int, p: float = 2) -> float:
    """Signed slack of the monotonicity condition for band ``B{band}`` (1-based).

    Returns ``(1 - en_j / ex_j) - ||Ex - En||_p**2 / (||Ex||_p**2 + ||En||_p**2)``.
    For ``p = 2`` its sign equals the sign of ``d ENI / d ex_j``: positive means
    the index grows with that band's energy, negative means it shrinks.
    """
    x, n = _vector(ex), _vector(en)
    if x.shape != n.shape:
        raise DimensionError(f"distribution lengths differ: {x.shape} vs {n.shape}")
    if not 1 <= band <= x.size:
        raise IndexError(f"band B{band} outside B1..B{x.size}")
    p = _check_p(p)
    xj, nj = x[band - 1], n[band - 1]
    if xj == 0:
        raise NumericalError(f"event energy in band B{band} is zero; the condition divides by it")
    den = _pnorm(x, p) ** 2 + _pnorm(n, p) ** 2
    if den == 0:
        raise UndefinedRatioError("both energy distributions are all zero")
    return (1.0 - nj / xj) - _pnorm(x - n, p) ** 2 / den


@dataclass(frozen=True)
class IndexReport:
    eni: float
    p: float
    wavelet: WaveletSpec
    D: int
    wni: Optional[float] = None
    lni: Optional[float] = None
    weights: Optional[PreferenceProfile] = None
    bands: tuple = ()
    event_energy: Optional[np.ndarray] = field(default=None, compare=False)
    reference_energy: Optional[np.ndarray] = field(default=None, compare=False)

    def __post_init__(self):
        ceiling = index_ceiling(self.p) + 1e-9
        for name in ("eni", "wni", "lni"):
            v = getattr(self, name)
            if v is not None and not (0.0 <= v <= ceiling):
                raise NumericalError(f"{name}={v} outside [0, {ceiling:.6g}]")

    def to_dict(self) -> dict:
        out = {
            "eni_pct": self.eni,
            "wni_pct": self.wni,
            "lni_pct": self.lni,
            "p": self.p,
            "wavelet": self.wavelet.name,
            "D": self.D,
            "bands": [b._asdict() for b in self.bands],
        }
        if self.weights is not None:
            out["preference"] = self.weights.to_dict()
        if self.event_energy is not None:
            out["event_energy"] = [float(e) for e in self.event_energy]
        if self.reference_energy is not None:
            out["reference_energy"] = [float(e) for e in self.reference_energy]
        return out


@lru_cache(maxsize=256)
def _reference_cached(n: int, fs: float, f: float, wavelet: str, D: int, mode: str) -> EnergyDistribution:
    rec = nominal_record(n, fs, f)
    return band_energies(dwt_decompose(rec, wavelet, D, mode), fs)


def reference_distribution(
    n_samples: int,
    fs: float,
    f: float = 50.0,
    wavelet: Union[str, WaveletSpec] = "sym4",
    D: Optional[int] = None,
    mode: Union[str, BoundaryMode] = BoundaryMode.PERIODIC,
) -> EnergyDistribution:
    """Energy distribution of a noiseless 1 pu sinusoid matching the event's framing.

    Results are cached; the returned distribution is immutable.
    """
    if D is None:
        D = decomposition_depth(fs, f)
    spec = WaveletSpec.parse(wavelet)
    return _reference_cached(int(n_samples), float(fs), float(f), spec.name, int(D), BoundaryMode(mode).value)


def compute_indices(
    record: VoltageRecord,
    reference: Union[EnergyDistribution, VoltageRecord, None] = None,
    wavelet: Union[str, WaveletSpec] = "sym4",
    p: float = 2,
    D: Optional[int] = None,
    preference: Optional[PreferenceProfile] = None,
    segmented: bool = False,
    mode: Union[str, BoundaryMode] = BoundaryMode.PERIODIC,
) -> IndexReport:
    """Decompose an event and report ENI, plus LNI and WNI when requested.

    Args:
        record: the event waveform, per-unit.
        reference: nominal energy distribution, or a measured nominal
            waveform to decompose the same way. ``None`` uses the synthetic
            sinusoid of identical length, rate and fundamental.
        preference: when given, WNI is computed with these weights.
        segmented: compute LNI.
    """
    spec = WaveletSpec.parse(wavelet)
    if D is None:
        D = decomposition_depth(record.fs, record.f)
    ex = band_energies(dwt_decompose(record, spec, D, mode), record.fs)
    if reference is None:
        en = reference_distribution(len(record), record.fs, record.f, spec, D, mode)
    elif isinstance(reference, VoltageRecord):
        if len(reference) != len(record) or reference.fs != record.fs:
            raise DimensionError("reference waveform must match the event's length and sampling rate")
        en = band_energies(dwt_decompose(reference, spec, D, mode), reference.fs)
    else:
        en = reference
    if len(en) != D + 1:
        raise DimensionError(f"reference has {len(en)} bands, decomposition has {D + 1}")

    w = lni_v = None
    if preference is not None:
        if preference.D != D:
            raise DimensionError(f"preference profile covers {preference.D + 1} bands, need {D + 1}")
        w = wni(ex, en, preference, p)
    if segmented:
        lni_v = lni(ex, en, p)
    return IndexReport(
        eni=eni(ex, en, p),
        p=float(p),
        wavelet=spec,
        D=int(D),
        wni=w,
        lni=lni_v,
        weights=preference,
        bands=tuple(band_layout(record.fs, D)),
        event_energy=ex.energies,
        reference_energy=en.energies,
    )


def default_preference(D: int) -> PreferenceProfile:
    return high_band_profile(D, 9.0)
