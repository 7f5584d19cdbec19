"""Experiment protocols built on the index pipeline.

Severity sweeps over parameter grids with adjacent-pair monotonicity
verdicts, paired simultaneous-event comparisons, wavelet sensitivity runs,
characteristic-parameter estimation for recordings and the adjustable speed
drive (ASD) ride-through study.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field, replace
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.signal import hilbert

from .events import EventKind, EventSpec, VoltageRecord, synthesize
from .exceptions import DetectionError, InsufficientLengthError, PQError, ValidationError
from .indices import EnergyDistribution, IndexReport, compute_indices
from .preference import PreferenceProfile, high_band_profile
from .wavelet import BoundaryMode, WaveletSpec, decomposition_depth

__all__ = [
    "SweepSpec",
    "SweepPoint",
    "AxisVerdict",
    "SweepResult",
    "run_sweep",
    "default_sweep",
    "ScenarioResult",
    "simultaneous_scenario",
    "SensitivityResult",
    "wavelet_sensitivity",
    "SENSITIVITY_SET",
    "EstimatedParams",
    "estimate_sag_params",
    "estimate_transient_params",
    "RideThrough",
    "asd_ride_through",
    "AsdStudy",
    "asd_contour_study",
]

AXES = ("alpha", "td", "beta", "gamma", "f_tr")
# axes along which a larger value means a more severe event
SEVERITY_AXES = ("alpha", "td", "beta", "gamma")
INDEX_NAMES = ("eni", "wni", "lni")


def _axes_for(kind: EventKind) -> Tuple[str, ...]:
    if kind.has_gate and kind.has_transient:
        return AXES
    if kind.has_gate:
        return ("alpha", "td")
    if kind.has_transient:
        return ("beta", "gamma", "f_tr")
    return ()


@dataclass(frozen=True)
class SweepSpec:
    """Grid of events of one kind plus the index configuration.

    ``tds`` are durations in fundamental cycles. Axes irrelevant to ``kind``
    are ignored. ``preference="auto"`` selects the high-band profile for
    kinds with a transient component and no WNI otherwise.
    """

    kind: EventKind
    alphas: Sequence[float] = (0.0,)
    tds: Sequence[float] = (0.0,)
    betas: Sequence[float] = (0.0,)
    gammas: Sequence[float] = (-55.0,)
    f_trs: Sequence[float] = (4000.0,)
    wavelet: Union[str, WaveletSpec] = "sym4"
    p: float = 2.0
    snr_db: Optional[float] = None
    seed: int = 0
    t1: Optional[float] = None
    f: float = 50.0
    fs: float = 10_000.0
    n_cycles: float = 40
    preference: Union[PreferenceProfile, str, None] = "auto"
    segmented: Optional[bool] = None
    reference: Optional[EnergyDistribution] = None
    mode: BoundaryMode = BoundaryMode.PERIODIC
    strict: bool = True

    def __post_init__(self):
        kind = EventKind.parse(self.kind)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "wavelet", WaveletSpec.parse(self.wavelet))
        for name in ("alphas", "tds", "betas", "gammas", "f_trs"):
            values = tuple(sorted(float(v) for v in getattr(self, name)))
            if not values:
                raise ValidationError(f"sweep grid {name!r} is empty")
            object.__setattr__(self, name, values)

    @property
    def axes(self) -> Tuple[str, ...]:
        return _axes_for(self.kind)

    def grid(self, axis: str) -> tuple:
        return getattr(self, {"td": "tds", "f_tr": "f_trs"}.get(axis, axis + "s"))

    @property
    def depth(self) -> int:
        return decomposition_depth(self.fs, self.f)

    def resolved_preference(self) -> Optional[PreferenceProfile]:
        if isinstance(self.preference, PreferenceProfile):
            return self.preference
        if self.preference == "auto":
            return high_band_profile(self.depth) if self.kind.has_transient else None
        if self.preference is None:
            return None
        raise ValidationError(f"unrecognised preference setting {self.preference!r}")

    def resolved_segmented(self) -> bool:
        if self.segmented is None:
            return self.kind.has_gate and self.kind.has_transient
        return bool(self.segmented)

    def coordinates(self) -> List[Dict[str, float]]:
        axes = self.axes
        grids = [self.grid(a) for a in axes]
        return [dict(zip(axes, combo)) for combo in itertools.product(*grids)]

    def event(self, coords: Dict[str, float], index: int = 0) -> EventSpec:
        seed = None
        if self.snr_db is not None:
            seed = int(np.random.SeedSequence([self.seed, index]).generate_state(1)[0])
        return EventSpec.make(
            self.kind,
            td=coords.get("td", 0.0),
            t1=self.t1,
            alpha=coords.get("alpha", 0.0),
            beta=coords.get("beta", 0.0),
            gamma=coords.get("gamma", -55.0),
            f_tr=coords.get("f_tr", 4000.0),
            f=self.f,
            fs=self.fs,
            n_cycles=self.n_cycles,
            snr_db=self.snr_db,
            seed=seed,
        )


@dataclass(frozen=True)
class SweepPoint:
    coords: Dict[str, float]
    report: IndexReport

    def value(self, index: str) -> Optional[float]:
        return getattr(self.report, index)


@dataclass(frozen=True)
class AxisVerdict:
    """Adjacent-pair monotonicity along one axis, other axes held fixed."""

    index: str
    axis: str
    n_pairs: int
    n_violations: int
    max_violation: float  # largest drop in index points, 0 when none

    @property
    def fraction(self) -> float:
        return self.n_violations / self.n_pairs if self.n_pairs else 0.0

    @property
    def monotone(self) -> bool:
        return self.n_violations == 0


@dataclass
class SweepResult:
    spec: SweepSpec
    points: List[SweepPoint]
    verdicts: Dict[Tuple[str, str], AxisVerdict] = field(default_factory=dict)

    def __len__(self):
        return len(self.points)

    @property
    def indices(self) -> Tuple[str, ...]:
        if not self.points:
            return ()
        return tuple(n for n in INDEX_NAMES if self.points[0].value(n) is not None)

    def values(self, index: str = "eni") -> np.ndarray:
        return np.array([pt.value(index) for pt in self.points], dtype=float)

    def index_range(self, index: str = "eni") -> Tuple[float, float]:
        v = self.values(index)
        return float(v.min()), float(v.max())

    def is_monotone(self, index: Optional[str] = None) -> bool:
        return all(v.monotone for (name, _), v in self.verdicts.items() if index is None or name == index)

    def max_violation(self, index: Optional[str] = None) -> float:
        drops = [v.max_violation for (name, _), v in self.verdicts.items() if index is None or name == index]
        return max(drops, default=0.0)

    def lookup(self, **coords) -> SweepPoint:
        for pt in self.points:
            if all(math.isclose(pt.coords[k], v, rel_tol=0, abs_tol=1e-9) for k, v in coords.items()):
                return pt
        raise KeyError(coords)

    def columns(self) -> List[str]:
        return [*self.spec.axes, *(f"{n}_pct" for n in self.indices)]

    def rows(self) -> List[dict]:
        out = []
        for pt in self.points:
            row = dict(pt.coords)
            for n in self.indices:
                row[f"{n}_pct"] = pt.value(n)
            out.append(row)
        return out

    def verdict_rows(self) -> List[dict]:
        return [
            {
                "index": v.index,
                "axis": v.axis,
                "pairs": v.n_pairs,
                "violations": v.n_violations,
                "fraction": v.fraction,
                "max_violation": v.max_violation,
            }
            for v in self.verdicts.values()
        ]


def _monotonicity(spec: SweepSpec, points: List[SweepPoint], tol: float = 1e-9) -> Dict[Tuple[str, str], AxisVerdict]:
    axes = spec.axes
    table = {tuple(pt.coords[a] for a in axes): pt for pt in points}
    names = [n for n in INDEX_NAMES if points and points[0].value(n) is not None]
    verdicts = {}
    for axis_pos, axis in enumerate(axes):
        if axis not in SEVERITY_AXES or len(spec.grid(axis)) < 2:
            continue
        grid = spec.grid(axis)
        others = [spec.grid(a) if i != axis_pos else (None,) for i, a in enumerate(axes)]
        for name in names:
            n_pairs = n_bad = 0
            worst = 0.0
            for fixed in itertools.product(*others):
                seq = []
                for value in grid:
                    key = list(fixed)
                    key[axis_pos] = value
                    seq.append(table[tuple(key)].value(name))
                drops = -np.diff(seq)
                n_pairs += drops.size
                bad = drops > tol
                n_bad += int(bad.sum())
                if bad.any():
                    worst = max(worst, float(drops.max()))
            verdicts[(name, axis)] = AxisVerdict(name, axis, n_pairs, n_bad, worst)
    return verdicts


def run_sweep(spec: SweepSpec) -> SweepResult:
    """Evaluate every grid point and check monotonicity along each severity axis."""
    preference = spec.resolved_preference()
    segmented = spec.resolved_segmented()
    points = []
    for i, coords in enumerate(spec.coordinates()):
        try:
            record = synthesize(spec.event(coords, i), strict=spec.strict)
            report = compute_indices(
                record,
                reference=spec.reference,
                wavelet=spec.wavelet,
                p=spec.p,
                preference=preference,
                segmented=segmented,
                mode=spec.mode,
            )
        except PQError as exc:
            exc.grid_point = coords
            exc.args = (f"{exc} [grid point {coords}]",)
            raise
        points.append(SweepPoint(coords, report))
    return SweepResult(spec, points, _monotonicity(spec, points))


def _grid(low, high, n):
    return tuple(float(v) for v in np.round(np.linspace(low, high, n), 10))


def default_sweep(kind, **overrides) -> SweepSpec:
    """Default grids: 250 events for sag/swell/interruption, 100 transients, 1250 simultaneous."""
    kind = EventKind.parse(kind)
    tds = _grid(0.5, 30, 25)
    if kind is EventKind.SAG:
        base = dict(alphas=_grid(0.1, 0.9, 10), tds=tds)
    elif kind is EventKind.SWELL:
        base = dict(alphas=_grid(0.1, 0.8, 10), tds=tds)
    elif kind is EventKind.INTERRUPTION:
        base = dict(alphas=_grid(0.91, 1.0, 10), tds=tds)
    elif kind is EventKind.OSC_TRANSIENT:
        base = dict(betas=_grid(1, 4, 10), gammas=_grid(-125, -25, 10), f_trs=(4000.0,))
    elif kind in (EventKind.SAG_WITH_TRANSIENT, EventKind.SWELL_WITH_TRANSIENT):
        top = 0.9 if kind is EventKind.SAG_WITH_TRANSIENT else 0.8
        base = dict(
            alphas=_grid(0.1, top, 5),
            tds=_grid(0.5, 30, 5),
            betas=_grid(1, 4, 5),
            gammas=_grid(-125, -25, 10),
            f_trs=(4000.0,),
            snr_db=45.0,
        )
    else:
        raise ValidationError(f"no default sweep for {kind.value}")
    base.update(overrides)
    return SweepSpec(kind=kind, **base)


@dataclass(frozen=True)
class ScenarioResult:
    specs: Tuple[EventSpec, EventSpec]
    reports: Tuple[IndexReport, IndexReport]
    verdicts: Dict[str, str]  # index name -> "first", "second" or "equal"

    def rows(self) -> List[dict]:
        out = []
        for i, (s, r) in enumerate(zip(self.specs, self.reports), start=1):
            out.append(
                {
                    "event": i,
                    "kind": s.kind.value,
                    "alpha": s.alpha,
                    "td": s.td_cycles,
                    "beta": s.beta,
                    "gamma": s.gamma,
                    "f_tr": s.f_tr,
                    "eni_pct": r.eni,
                    "lni_pct": r.lni,
                    "wni_pct": r.wni,
                }
            )
        return out


def simultaneous_scenario(
    first: EventSpec,
    second: EventSpec,
    wavelet: Union[str, WaveletSpec] = "sym4",
    p: float = 2.0,
    preference: Optional[PreferenceProfile] = None,
    tol: float = 1e-9,
) -> ScenarioResult:
    """Compare two simultaneous events index by index.

    LNI ranks the sag/swell constituents, WNI (high-band preference unless
    given) ranks the transient constituents and ENI the overall deviation.
    """
    specs = (first, second)
    for s in specs:
        if not (s.kind.has_gate and s.kind.has_transient):
            raise ValidationError(f"{s.kind.value} is not a simultaneous event kind")
    reports = []
    for s in specs:
        record = synthesize(s)
        D = decomposition_depth(record.fs, record.f)
        pref = preference if preference is not None else high_band_profile(D)
        reports.append(compute_indices(record, wavelet=wavelet, p=p, D=D, preference=pref, segmented=True))
    verdicts = {}
    for name in INDEX_NAMES:
        a, b = getattr(reports[0], name), getattr(reports[1], name)
        verdicts[name] = "equal" if abs(a - b) <= tol else ("first" if a > b else "second")
    return ScenarioResult(specs, tuple(reports), verdicts)


# 70 wavelets over the three orthogonal families
SENSITIVITY_SET = tuple(
    [f"db{n}" for n in range(1, 35)] + [f"sym{n}" for n in range(2, 21)] + [f"coif{n}" for n in range(1, 18)]
)


@dataclass
class SensitivityResult:
    results: Dict[str, SweepResult]

    def summary(self) -> List[dict]:
        rows = []
        for name, res in self.results.items():
            row = {"wavelet": name, "points": len(res)}
            for idx in res.indices:
                lo, hi = res.index_range(idx)
                row[f"{idx}_min"] = lo
                row[f"{idx}_max"] = hi
            row["monotone"] = res.is_monotone()
            row["violations"] = sum(v.n_violations for v in res.verdicts.values())
            rows.append(row)
        return rows

    def all_monotone(self) -> bool:
        return all(r.is_monotone() for r in self.results.values())


def wavelet_sensitivity(spec: SweepSpec, wavelets: Iterable[Union[str, WaveletSpec]]) -> SensitivityResult:
    """Repeat one sweep under each wavelet; each run uses its own reference distribution."""
    if spec.reference is not None:
        raise ValidationError("a fixed reference distribution cannot be shared across wavelets")
    out = {}
    for w in wavelets:
        w = WaveletSpec.parse(w)
        out[w.name] = run_sweep(replace(spec, wavelet=w))
    return SensitivityResult(out)


@dataclass(frozen=True)
class EstimatedParams:
    alpha_hat: Optional[float] = None
    td_hat: Optional[float] = None  # cycles
    beta_hat: Optional[float] = None
    t_tr_hat: Optional[float] = None  # ms
    f_tr_hat: Optional[float] = None

    def to_dict(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if v is not None}


def _half_cycle_rms(record: VoltageRecord) -> np.ndarray:
    n_half = int(round(record.fs / (2 * record.f)))
    x = record.samples
    n_win = x.size // n_half
    return np.sqrt(np.mean(x[: n_win * n_half].reshape(n_win, n_half) ** 2, axis=1))


def estimate_sag_params(record: VoltageRecord, threshold: float = 0.9, nominal_rms: Optional[float] = None) -> EstimatedParams:
    """Sag depth and duration from half-cycle RMS values.

    Windows are consecutive half cycles from the start of the record.
    ``alpha_hat = 1 - min(rms) / nominal_rms`` and the duration counts the
    windows whose RMS falls below ``threshold * nominal_rms``. The nominal
    RMS defaults to that of a 1 pu peak sinusoid.
    """
    if record.duration * record.f < 2:
        raise InsufficientLengthError("sag estimation needs at least two fundamental cycles")
    if nominal_rms is None:
        nominal_rms = 1.0 / math.sqrt(2.0)
    rms = _half_cycle_rms(record) / nominal_rms
    alpha = float(np.clip(1.0 - rms.min(), 0.0, 1.5))
    below = rms < threshold
    return EstimatedParams(alpha_hat=alpha, td_hat=float(below.sum()) / 2.0)


def _fundamental_fit(record: VoltageRecord) -> np.ndarray:
    """Cycle-by-cycle least-squares fit of ``a sin(wt) + b cos(wt) + c``."""
    x = record.samples
    t = record.time
    w = 2 * np.pi * record.f
    n_cyc = max(int(round(record.fs / record.f)), 1)
    fit = np.empty_like(x)
    for start in range(0, x.size, n_cyc):
        sl = slice(start, min(start + n_cyc, x.size))
        tt = t[sl]
        A = np.column_stack([np.sin(w * tt), np.cos(w * tt), np.ones_like(tt)])
        coef, *_ = np.linalg.lstsq(A, x[sl], rcond=None)
        fit[sl] = A @ coef
    return fit


def estimate_transient_params(record: VoltageRecord, min_peak: float = 0.1, fraction: float = 0.1) -> EstimatedParams:
    """Peak, duration and frequency of an oscillatory transient.

    The fundamental is removed by a per-cycle sinusoid fit. ``beta_hat`` is
    the peak residual, the duration spans the samples whose residual
    envelope exceeds ``fraction * beta_hat``, and the frequency comes from
    the zero-crossing count over that span.

    Raises:
        DetectionError: when the residual never exceeds ``min_peak`` pu.
    """
    residual = record.samples - _fundamental_fit(record)
    peak = float(np.max(np.abs(residual)))
    if peak < min_peak:
        raise DetectionError(f"no transient found (peak residual {peak:.3g} pu < {min_peak} pu)")
    env = np.abs(hilbert(residual))
    above = np.flatnonzero(env > fraction * peak)
    first, last = int(above[0]), int(above[-1])
    span = (last - first + 1) / record.fs
    seg = residual[first : last + 1]
    signs = np.signbit(seg[seg != 0])
    crossings = int(np.count_nonzero(signs[1:] != signs[:-1]))
    f_tr = crossings / (2.0 * span) if span > 0 else float("nan")
    return EstimatedParams(beta_hat=peak, t_tr_hat=1e3 * span, f_tr_hat=f_tr)


class RideThrough(str, enum.Enum):
    RUNNING = "running"
    STOPPED = "stopped"


def asd_tolerable_alpha(td: float) -> float:
    """Deepest sag an adjustable speed drive rides through at duration ``td`` cycles."""
    if td <= 3:
        return 1.0
    if td <= 4:
        return 1.0 - 0.9 * (td - 3)
    return 0.1


def asd_ride_through(alpha: float, td: float) -> RideThrough:
    """Typical ASD tolerance: any sag up to 3 cycles, linear 1 -> 0.1 pu over 3-4 cycles, then 0.1 pu."""
    if not (0 <= alpha <= 1):
        raise ValidationError(f"alpha={alpha} outside [0, 1]")
    if td < 0:
        raise ValidationError(f"duration {td} cycles is negative")
    ok = alpha <= asd_tolerable_alpha(td) + 1e-9
    return RideThrough.RUNNING if ok else RideThrough.STOPPED


@dataclass
class AsdStudy:
    rows: List[dict]
    threshold_lo: float  # lowest ENI among Stopped points
    threshold_hi: float  # highest ENI among Running points

    def _select(self, pred):
        return [r for r in self.rows if pred(r)]

    def eni_at(self, alpha: float, td: float) -> float:
        for r in self.rows:
            if abs(r["alpha"] - alpha) < 1e-9 and abs(r["td"] - td) < 1e-9:
                return r["eni_pct"]
        raise KeyError((alpha, td))

    def running_below(self, level: float) -> bool:
        """Every Running point has ENI <= level."""
        return all(r["eni_pct"] <= level for r in self._select(lambda r: r["region"] == "running"))

    def deep_stopped_above(self, level: float) -> bool:
        """Every point past the sustained tolerance (td > 4, alpha > 0.1) has ENI > level."""
        deep = self._select(lambda r: r["td"] > 4 and r["alpha"] > 0.1 + 1e-9)
        return all(r["eni_pct"] > level for r in deep)

    def low_implies_running(self, level: float) -> bool:
        """Every point with ENI <= level is Running."""
        return all(r["region"] == "running" for r in self._select(lambda r: r["eni_pct"] <= level))

    def high_implies_stopped(self, level: float) -> bool:
        """Every point with ENI > level is Stopped."""
        return all(r["region"] == "stopped" for r in self._select(lambda r: r["eni_pct"] > level))


def asd_contour_study(
    alphas: Sequence[float] = None,
    tds: Sequence[float] = None,
    wavelet: Union[str, WaveletSpec] = "sym4",
    p: float = 2.0,
    f: float = 50.0,
    fs: float = 10_000.0,
    n_cycles: float = 40,
) -> AsdStudy:
    """Label a (alpha, td) sag grid with ride-through verdicts and ENI."""
    if alphas is None:
        alphas = _grid(0.0, 1.0, 21)
    if tds is None:
        tds = _grid(0.0, 30.0, 61)
    if not len(alphas) or not len(tds):
        raise ValidationError("ASD grid is empty")
    spec = SweepSpec(
        EventKind.SAG,
        alphas=alphas,
        tds=tds,
        wavelet=wavelet,
        p=p,
        f=f,
        fs=fs,
        n_cycles=n_cycles,
        preference=None,
        segmented=False,
        strict=False,
    )
    sweep = run_sweep(spec)
    rows = []
    for pt in sweep.points:
        a, td = pt.coords["alpha"], pt.coords["td"]
        rows.append({"alpha": a, "td": td, "eni_pct": pt.report.eni, "region": asd_ride_through(a, td).value})
    stopped = [r["eni_pct"] for r in rows if r["region"] == "stopped"]
    running = [r["eni_pct"] for r in rows if r["region"] == "running"]
    lo = min(stopped) if stopped else float("nan")
    hi = max(running) if running else float("nan")
    return AsdStudy(rows, lo, hi)
