"""Parametric power-quality event synthesis.

Waveforms are per-unit, sampled from ``t = 0`` with sample ``k`` at ``k / fs``.
Event boundaries snap to the nearest sample instant and use the unit step
``u(t) = 1 for t > 0``, so a gate ``u(t - t1) - u(t - t2)`` covers samples
``n1 < k <= n2``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace
from typing import Any, Mapping, Optional

import numpy as np

from .exceptions import NyquistError, ParameterRangeError, ValidationError

__all__ = [
    "EventKind",
    "EventSpec",
    "VoltageRecord",
    "synthesize",
    "add_awgn",
    "nominal_record",
]


class EventKind(str, enum.Enum):
    NOMINAL = "nominal"
    SAG = "sag"
    SWELL = "swell"
    INTERRUPTION = "interruption"
    OSC_TRANSIENT = "transient"
    SAG_WITH_TRANSIENT = "sag_transient"
    SWELL_WITH_TRANSIENT = "swell_transient"

    @property
    def has_gate(self) -> bool:
        return self in _GATED

    @property
    def has_transient(self) -> bool:
        return self in _TRANSIENT

    @property
    def lowers_voltage(self) -> bool:
        return self in (EventKind.SAG, EventKind.INTERRUPTION, EventKind.SAG_WITH_TRANSIENT)

    @classmethod
    def parse(cls, value: "str | EventKind") -> "EventKind":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace("-", "_")
        aliases = {
            "osc_transient": "transient",
            "oscillatory_transient": "transient",
            "sag_with_transient": "sag_transient",
            "swell_with_transient": "swell_transient",
        }
        key = aliases.get(key, key)
        try:
            return cls(key)
        except ValueError:
            names = ", ".join(k.value for k in cls)
            raise ValidationError(f"unknown event kind {value!r}; expected one of {names}") from None


_GATED = frozenset(
    {
        EventKind.SAG,
        EventKind.SWELL,
        EventKind.INTERRUPTION,
        EventKind.SAG_WITH_TRANSIENT,
        EventKind.SWELL_WITH_TRANSIENT,
    }
)
_TRANSIENT = frozenset(
    {EventKind.OSC_TRANSIENT, EventKind.SAG_WITH_TRANSIENT, EventKind.SWELL_WITH_TRANSIENT}
)

# Table ranges for alpha, by kind: (low, high, low_inclusive)
_ALPHA_RANGE = {
    EventKind.SAG: (0.1, 0.9, True),
    EventKind.SAG_WITH_TRANSIENT: (0.1, 0.9, True),
    EventKind.SWELL: (0.1, 0.8, True),
    EventKind.SWELL_WITH_TRANSIENT: (0.1, 0.8, True),
    EventKind.INTERRUPTION: (0.9, 1.0, False),
}
_TOL = 1e-9

# Default inception times (s). Gated events start early enough that a
# 30-cycle event fits inside a 40-cycle, 50 Hz window; stand-alone
# transients start at the lower end of their tabulated inception range.
DEFAULT_T1_GATED = 0.1
DEFAULT_T1_TRANSIENT = 0.3


@dataclass(frozen=True)
class VoltageRecord:
    """Uniformly sampled per-unit voltage waveform."""

    samples: np.ndarray
    fs: float
    f: float = 50.0
    base_voltage: float = 1.0
    metadata: Mapping[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        x = np.array(self.samples, dtype=float)
        if x.ndim != 1 or x.size == 0:
            raise ValidationError("voltage record must be a non-empty 1-D sequence")
        if not np.all(np.isfinite(x)):
            raise ValidationError("voltage record contains non-finite samples")
        if not (self.fs > 0 and math.isfinite(self.fs)):
            raise ParameterRangeError("fs", self.fs, 0, None)
        if not (self.f > 0 and math.isfinite(self.f)):
            raise ParameterRangeError("f", self.f, 0, None)
        x.setflags(write=False)
        object.__setattr__(self, "samples", x)
        object.__setattr__(self, "metadata", dict(self.metadata))

    def __len__(self):
        return self.samples.size

    @property
    def duration(self) -> float:
        return self.samples.size / self.fs

    @property
    def time(self) -> np.ndarray:
        return np.arange(self.samples.size) / self.fs

    @property
    def energy(self) -> float:
        return float(np.dot(self.samples, self.samples))

    def with_samples(self, samples, **metadata) -> "VoltageRecord":
        meta = dict(self.metadata)
        meta.update(metadata)
        return replace(self, samples=samples, metadata=meta)


@dataclass(frozen=True)
class EventSpec:
    """Parametric description of one event.

    Fields that do not apply to ``kind`` are ignored. ``t1`` left as ``None``
    resolves to a per-kind default; ``t2`` left as ``None`` means no gated
    component (equivalent to ``t2 = t1``).
    """

    kind: EventKind = EventKind.NOMINAL
    alpha: float = 0.0
    t1: Optional[float] = None
    t2: Optional[float] = None
    beta: float = 0.0
    gamma: float = -55.0
    f_tr: float = 4000.0
    f: float = 50.0
    fs: float = 10_000.0
    n_cycles: float = 40
    snr_db: Optional[float] = None
    seed: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "kind", EventKind.parse(self.kind))

    @classmethod
    def make(cls, kind, *, td: float = 0.0, t1: Optional[float] = None, **kwargs) -> "EventSpec":
        """Build a spec from a duration in fundamental cycles instead of ``t2``."""
        kind = EventKind.parse(kind)
        f = kwargs.get("f", 50.0)
        if t1 is None:
            t1 = DEFAULT_T1_TRANSIENT if kind is EventKind.OSC_TRANSIENT else DEFAULT_T1_GATED
        return cls(kind=kind, t1=t1, t2=t1 + td / f, **kwargs)

    @property
    def period(self) -> float:
        return 1.0 / self.f

    @property
    def n_samples(self) -> int:
        return int(round(self.n_cycles * self.fs / self.f))

    @property
    def start(self) -> float:
        if self.t1 is not None:
            return float(self.t1)
        if self.kind is EventKind.OSC_TRANSIENT:
            return DEFAULT_T1_TRANSIENT
        return DEFAULT_T1_GATED

    @property
    def td(self) -> float:
        """Gated duration in seconds (0 when ``t2`` is unset)."""
        if self.t2 is None:
            return 0.0
        return float(self.t2) - self.start

    @property
    def td_cycles(self) -> float:
        return self.td * self.f

    def validate(self, strict: bool = True) -> None:
        """Check the spec against its kind's parameter ranges.

        With ``strict=False`` only physically meaningful bounds are enforced
        (``0 <= alpha <= 1`` for voltage-lowering events, non-negative
        duration, decaying transient); used by studies that deliberately
        include the zero-severity and full-interruption corners.
        """
        for name in ("f", "fs", "n_cycles"):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise ParameterRangeError(name, value, 0, None)
        if self.f >= self.fs / 2:
            raise NyquistError(f"fundamental f={self.f} Hz not below fs/2={self.fs / 2} Hz")
        kind = self.kind
        if kind.has_gate:
            self._validate_gate(strict)
        if kind.has_transient:
            self._validate_transient(strict)

    def _validate_gate(self, strict: bool) -> None:
        kind = self.kind
        a = self.alpha
        if not math.isfinite(a):
            raise ParameterRangeError("alpha", a)
        if strict:
            low, high, low_incl = _ALPHA_RANGE[kind]
            too_low = a < low - _TOL if low_incl else a <= low + _TOL
            if too_low or a > high + _TOL:
                raise ParameterRangeError("alpha", a, low, high, f"{kind.value} magnitude")
        else:
            high = 1.0 if kind.lowers_voltage else math.inf
            if a < -_TOL or a > high + _TOL:
                raise ParameterRangeError("alpha", a, 0.0, high)
        start = self.start
        if start < 0:
            raise ParameterRangeError("t1", start, 0.0, None)
        td = self.td
        T = self.period
        if strict:
            if td < 0.5 * T - _TOL or td > 30 * T + _TOL:
                raise ParameterRangeError("t_d", td, 0.5 * T, 30 * T, "event duration in seconds")
        elif td < -_TOL:
            raise ParameterRangeError("t_d", td, 0.0, None)

    def _validate_transient(self, strict: bool) -> None:
        if self.f_tr <= 0 or not math.isfinite(self.f_tr):
            raise ParameterRangeError("f_tr", self.f_tr, 0, None)
        if self.fs <= 2 * self.f_tr:
            raise NyquistError(
                f"sampling rate fs={self.fs} Hz cannot represent a {self.f_tr} Hz transient"
                f" (needs fs > {2 * self.f_tr} Hz)"
            )
        if self.start < 0:
            raise ParameterRangeError("t1", self.start, 0.0, None)
        if strict:
            checks = (
                ("gamma", self.gamma, -125.0, -25.0),
                ("beta", self.beta, 1.0, 4.0),
                ("f_tr", self.f_tr, 400.0, 4000.0),
            )
            for name, value, low, high in checks:
                if not (low - _TOL <= value <= high + _TOL):
                    raise ParameterRangeError(name, value, low, high)
        else:
            if self.gamma > 0 or not math.isfinite(self.gamma):
                raise ParameterRangeError("gamma", self.gamma, None, 0.0)
            if self.beta < 0 or not math.isfinite(self.beta):
                raise ParameterRangeError("beta", self.beta, 0.0, None)


def synthesize(spec: EventSpec, strict: bool = True) -> VoltageRecord:
    """Sample the parametric model for ``spec.kind``.

    Sag/interruption: ``[1 - alpha*(u(t-t1) - u(t-t2))] sin(wt)``; swell uses
    ``1 + alpha``. The transient term ``beta * exp(gamma*(t-t1)) * sin(w_tr t)``
    is switched on for ``t > t1``. Noise is added when ``spec.snr_db`` is set.
    """
    spec.validate(strict=strict)
    n = spec.n_samples
    k = np.arange(n)
    t = k / spec.fs
    v = np.sin(2 * np.pi * spec.f * t)

    kind = spec.kind
    n1 = int(round(min(spec.start, n / spec.fs) * spec.fs))
    if kind.has_gate and spec.t2 is not None:
        n2 = int(round(spec.t2 * spec.fs))
        gate = (k > n1) & (k <= n2)
        sign = -1.0 if kind.lowers_voltage else 1.0
        v = (1.0 + sign * spec.alpha * gate) * v
    if kind.has_transient and spec.beta != 0:
        on = k > n1
        lag = np.where(on, t - n1 / spec.fs, 0.0)
        v = v + on * spec.beta * np.exp(spec.gamma * lag) * np.sin(2 * np.pi * spec.f_tr * t)

    meta = {"kind": kind.value}
    record = VoltageRecord(v, fs=spec.fs, f=spec.f, metadata=meta)
    if spec.snr_db is not None:
        record = add_awgn(record, spec.snr_db, spec.seed)
    return record


def nominal_record(n_samples: int, fs: float, f: float = 50.0) -> VoltageRecord:
    """Noiseless 1 pu sinusoid, the default reference waveform."""
    t = np.arange(int(n_samples)) / fs
    return VoltageRecord(np.sin(2 * np.pi * f * t), fs=fs, f=f, metadata={"kind": "nominal"})


def add_awgn(record: VoltageRecord, snr_db: Optional[float], seed: Optional[int] = None) -> VoltageRecord:
    """Add zero-mean white Gaussian noise at ``snr_db`` relative to the record power.

    ``snr_db=None`` returns the record untouched. The noise stream comes from
    NumPy's PCG64 generator, so a fixed ``seed`` is bit-reproducible.
    """
    if snr_db is None:
        return record
    snr_db = float(snr_db)
    if not math.isfinite(snr_db):
        raise ParameterRangeError("snr_db", snr_db, detail="omit noise instead of passing an infinite SNR")
    x = record.samples
    noise_power = float(np.mean(x * x)) / 10.0 ** (snr_db / 10.0)
    rng = np.random.default_rng(seed)
    noisy = x + rng.normal(0.0, math.sqrt(noise_power), size=x.size)
    return record.with_samples(noisy, snr_db=snr_db, seed=seed)
