"""Orthogonal discrete wavelet transform (Mallat pyramid).

Analysis filters are applied by circular (or symmetric-extended) convolution
followed by decimation by two. For a filter of length ``L`` the periodic
transform keeps

    a[k] = sum_j h[j] * x[(2k + L/2 - j) mod N]

and likewise for the high-pass ``g[k] = (-1)**k * h[L-1-k]``.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import List, NamedTuple, Sequence, Union

import numpy as np

from ._filter_tables import DEC_LO
from .events import VoltageRecord
from .exceptions import InsufficientLengthError, ParameterRangeError, UnsupportedWaveletError, ValidationError

__all__ = [
    "WaveletFamily",
    "WaveletSpec",
    "BoundaryMode",
    "Band",
    "WaveletPyramid",
    "available_wavelets",
    "decomposition_depth",
    "band_layout",
    "dwt_decompose",
    "analysis_filters",
]


class WaveletFamily(str, enum.Enum):
    DAUBECHIES = "db"
    SYMLET = "sym"
    COIFLET = "coif"


SUPPORTED_ORDERS = {
    WaveletFamily.DAUBECHIES: range(1, 39),
    WaveletFamily.SYMLET: range(2, 21),
    WaveletFamily.COIFLET: range(1, 18),
}


class BoundaryMode(str, enum.Enum):
    PERIODIC = "periodic"
    SYMMETRIC = "symmetric"


@dataclass(frozen=True)
class WaveletSpec:
    family: WaveletFamily
    order: int

    def __post_init__(self):
        try:
            family = WaveletFamily(self.family)
        except ValueError:
            raise UnsupportedWaveletError(f"unknown wavelet family {self.family!r}") from None
        object.__setattr__(self, "family", family)
        if int(self.order) != self.order or self.order not in SUPPORTED_ORDERS[family]:
            r = SUPPORTED_ORDERS[family]
            raise UnsupportedWaveletError(
                f"{family.value}{self.order} not supported (orders {r.start}..{r.stop - 1})"
            )
        object.__setattr__(self, "order", int(self.order))

    @classmethod
    def parse(cls, value: Union[str, "WaveletSpec"]) -> "WaveletSpec":
        if isinstance(value, WaveletSpec):
            return value
        name = str(value).strip().lower()
        if name == "haar":
            name = "db1"
        m = re.fullmatch(r"(db|sym|coif)(\d+)", name)
        if m is None:
            raise UnsupportedWaveletError(f"cannot parse wavelet name {value!r}")
        return cls(WaveletFamily(m.group(1)), int(m.group(2)))

    @property
    def name(self) -> str:
        return f"{self.family.value}{self.order}"

    @property
    def filter_length(self) -> int:
        return len(DEC_LO[self.name])

    def __str__(self):
        return self.name


def available_wavelets() -> List[WaveletSpec]:
    return [WaveletSpec(fam, n) for fam, orders in SUPPORTED_ORDERS.items() for n in orders]


@lru_cache(maxsize=None)
def _filters(name: str):
    h = np.array(DEC_LO[name], dtype=float)
    L = h.size
    g = h[::-1] * (-1.0) ** np.arange(L)
    h.setflags(write=False)
    g.setflags(write=False)
    return h, g


def analysis_filters(wavelet) -> tuple:
    """Return the ``(low_pass, high_pass)`` analysis filter pair."""
    return _filters(WaveletSpec.parse(wavelet).name)


def decomposition_depth(fs: float, f: float) -> int:
    """Depth ``D`` with ``fs / 2**(D+1) <= f <= fs / 2**D``.

    At an exact boundary (``f == fs / 2**D``) both ``D`` and ``D-1`` satisfy
    the bracket; the larger one is returned.
    """
    if not (0 < f < fs / 2):
        raise ParameterRangeError("f", f, 0, fs / 2, "frequency of interest must lie in (0, fs/2)")
    D = int(math.floor(math.log2(fs / f)))
    # guard against log2 rounding near powers of two
    while fs / 2 ** (D + 1) > f:
        D += 1
    while D > 1 and fs / 2**D < f:
        D -= 1
    return D


class Band(NamedTuple):
    band_id: int
    f_low: float
    f_high: float
    kind: str  # "detail" or "approximation"

    @property
    def label(self) -> str:
        return f"B{self.band_id}"


def band_layout(fs: float, D: int) -> List[Band]:
    """Frequency content of the ``D`` detail bands and the final approximation."""
    if D < 1 or int(D) != D:
        raise ParameterRangeError("D", D, 1, None)
    bands = [Band(k, fs / 2 ** (k + 1), fs / 2**k, "detail") for k in range(1, D + 1)]
    bands.append(Band(D + 1, 0.0, fs / 2 ** (D + 1), "approximation"))
    return bands


@dataclass(frozen=True)
class WaveletPyramid:
    details: tuple  # level 1 (finest) first
    approximation: np.ndarray
    wavelet: WaveletSpec
    boundary_mode: BoundaryMode

    @property
    def D(self) -> int:
        return len(self.details)

    def coefficients(self) -> List[np.ndarray]:
        """Details finest-first followed by the approximation (band order B1..B{D+1})."""
        return [*self.details, self.approximation]

    @property
    def energy(self) -> float:
        return float(sum(np.dot(c, c) for c in self.coefficients()))


def _periodic_step(x: np.ndarray, h: np.ndarray, g: np.ndarray):
    if x.size % 2:
        x = np.append(x, 0.0)
    N = x.size
    L = h.size
    # wrap so that full circular convolution is a 'valid' linear one
    xp = x[np.arange(-(L - 1), N) % N]
    yl = np.convolve(xp, h, mode="valid")
    yh = np.convolve(xp, g, mode="valid")
    idx = (2 * np.arange(N // 2) + L // 2) % N
    return yl[idx], yh[idx]


def _symmetric_step(x: np.ndarray, h: np.ndarray, g: np.ndarray):
    L = h.size
    xe = np.pad(x, L - 1, mode="symmetric")
    yl = np.convolve(xe, h, mode="valid")
    yh = np.convolve(xe, g, mode="valid")
    return yl[1::2], yh[1::2]


def dwt_decompose(
    record: Union[VoltageRecord, Sequence[float], np.ndarray],
    wavelet: Union[str, WaveletSpec] = "sym4",
    D: int = None,
    mode: Union[str, BoundaryMode] = BoundaryMode.PERIODIC,
) -> WaveletPyramid:
    """Decompose a waveform to depth ``D``.

    Args:
        record: a ``VoltageRecord`` or a plain 1-D array.
        wavelet: wavelet name (``"sym4"``) or ``WaveletSpec``.
        D: number of levels; defaults to the depth rule when ``record`` is a
            ``VoltageRecord`` (frequency of interest = its fundamental).
        mode: ``"periodic"`` (energy preserving) or ``"symmetric"``.

    Under periodic mode an odd-length intermediate signal is zero-extended by
    one sample before filtering. The padding adds no energy, so the pyramid
    energy equals the signal energy for any length.
    """
    spec = WaveletSpec.parse(wavelet)
    try:
        mode = BoundaryMode(mode)
    except ValueError:
        raise ValidationError(f"unknown boundary mode {mode!r}") from None
    if isinstance(record, VoltageRecord):
        x = record.samples
        if D is None:
            D = decomposition_depth(record.fs, record.f)
    else:
        x = np.asarray(record, dtype=float)
        if x.ndim != 1:
            raise ValidationError("expected a 1-D signal")
        if D is None:
            raise ValidationError("depth D is required for raw arrays")
    if D < 1 or int(D) != D:
        raise ParameterRangeError("D", D, 1, None)
    h, g = _filters(spec.name)
    if x.size < h.size:
        raise InsufficientLengthError(
            f"signal of {x.size} samples is shorter than the {spec.name} filter ({h.size} taps)"
        )

    step = _periodic_step if mode is BoundaryMode.PERIODIC else _symmetric_step
    details = []
    a = x
    for _ in range(int(D)):
        a, d = step(a, h, g)
        details.append(d)
    return WaveletPyramid(tuple(details), a, spec, mode)
