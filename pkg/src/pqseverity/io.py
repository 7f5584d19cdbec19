"""Waveform file ingestion and deterministic tabular output.

Waveform files are delimited text with one column (voltage, sampling rate
supplied separately) or two columns (time in seconds, voltage). Commas,
semicolons, tabs and spaces all separate fields; a single non-numeric header
row and ``#`` comment lines are skipped. An optional JSON sidecar next to the
file (``name.json``) may carry ``fs``, ``f`` and ``base_voltage``.
"""

from __future__ import annotations

import csv
import io as _io
import json
import math
import os
import re
from pathlib import Path
from typing import Any, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from .events import VoltageRecord
from .exceptions import NonUniformSamplingError, PQIOError, ValidationError, WaveformParseError

__all__ = [
    "JITTER_TOLERANCE",
    "ingest",
    "read_sidecar",
    "write_waveform",
    "format_value",
    "table_to_csv",
    "table_to_json",
    "write_table",
]

JITTER_TOLERANCE = 1e-3
_SPLIT = re.compile(r"[,;\s]+")

PathLike = Union[str, os.PathLike]


def _sidecar_path(path: Path) -> Path:
    return path.with_suffix(".json") if path.suffix.lower() != ".json" else path.with_suffix(".meta.json")


def read_sidecar(path: PathLike) -> dict:
    """Metadata sidecar for a waveform file, or ``{}`` when there is none."""
    side = _sidecar_path(Path(path))
    if not side.exists():
        return {}
    try:
        meta = json.loads(side.read_text())
    except json.JSONDecodeError as exc:
        raise WaveformParseError(side, exc.lineno, f"invalid JSON sidecar: {exc.msg}") from None
    if not isinstance(meta, dict):
        raise WaveformParseError(side, 1, "sidecar must hold a JSON object")
    return meta


def _parse_rows(path: Path) -> Tuple[np.ndarray, Optional[List[str]]]:
    try:
        text = path.read_text()
    except OSError as exc:
        raise PQIOError(f"cannot read {path}: {exc.strerror or exc}") from None
    rows, header, width = [], None, None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [tok for tok in _SPLIT.split(line) if tok]
        try:
            values = [float(tok) for tok in fields]
        except ValueError:
            if not rows and header is None:
                header = fields
                continue
            raise WaveformParseError(path, lineno, f"non-numeric field in {raw.strip()!r}") from None
        if width is None:
            width = len(values)
            if width not in (1, 2):
                raise WaveformParseError(path, lineno, f"expected 1 or 2 columns, found {width}")
        elif len(values) != width:
            raise WaveformParseError(path, lineno, f"expected {width} columns, found {len(values)}")
        if not all(math.isfinite(v) for v in values):
            raise WaveformParseError(path, lineno, "non-finite value")
        rows.append(values)
    if not rows:
        raise WaveformParseError(path, None, "no samples found")
    return np.array(rows, dtype=float), header


def _rate_from_time(path: Path, t: np.ndarray) -> float:
    if t.size < 2:
        raise NonUniformSamplingError(f"{path}: need at least two timestamps to derive the sampling rate")
    dt = np.diff(t)
    if np.any(dt <= 0):
        i = int(np.flatnonzero(dt <= 0)[0])
        raise NonUniformSamplingError(f"{path}: time column not strictly increasing at sample {i + 1}")
    step = (t[-1] - t[0]) / (t.size - 1)
    jitter = float(np.max(np.abs(dt - step)) / step)
    if jitter > JITTER_TOLERANCE:
        raise NonUniformSamplingError(
            f"{path}: sampling jitter {jitter:.3%} exceeds {JITTER_TOLERANCE:.1%}; resample the recording first"
        )
    return 1.0 / step


def ingest(
    path: PathLike,
    fs: Optional[float] = None,
    base_voltage: Optional[float] = None,
    f: Optional[float] = None,
    norm_window: Tuple[float, float] = (0.0, 2.0),
) -> VoltageRecord:
    """Read a recording and normalize it to per unit.

    Args:
        path: waveform file.
        fs: sampling rate; overrides the sidecar and is cross-checked
            against the time column when both exist.
        base_voltage: volts per pu. When absent (here and in the sidecar) the
            peak magnitude over ``norm_window`` is used.
        f: fundamental frequency, 50 Hz unless given here or in the sidecar.
        norm_window: ``(start, end)`` in fundamental cycles of the pre-event
            stretch used for the automatic base.

    Raises:
        WaveformParseError: malformed line, reported with its number.
        NonUniformSamplingError: irregular or non-increasing timestamps.
        ValidationError: no way to determine the sampling rate.
    """
    path = Path(path)
    meta = read_sidecar(path)
    data, header = _parse_rows(path)
    fs = fs if fs is not None else meta.get("fs")
    f = f if f is not None else meta.get("f", 50.0)
    base_voltage = base_voltage if base_voltage is not None else meta.get("base_voltage")

    if data.shape[1] == 2:
        derived = _rate_from_time(path, data[:, 0])
        if fs is None:
            fs = derived
        elif abs(derived - fs) > JITTER_TOLERANCE * fs:
            raise NonUniformSamplingError(f"{path}: time column implies fs={derived:.6g} Hz, but fs={fs} was given")
        v = data[:, 1]
    else:
        if fs is None:
            raise ValidationError(f"{path}: voltage-only file needs a sampling rate (--fs or sidecar)")
        v = data[:, 0]
    fs, f = float(fs), float(f)

    if base_voltage is None:
        start, end = norm_window
        if not 0 <= start < end:
            raise ValidationError(f"normalization window {norm_window} is not a valid cycle range")
        n0 = int(round(start * fs / f))
        n1 = max(int(round(end * fs / f)), n0 + 1)
        window = v[n0:n1]
        if window.size == 0:
            raise ValidationError(f"{path}: normalization window lies beyond the {v.size}-sample record")
        base_voltage = float(np.max(np.abs(window)))
        base_source = "peak"
    else:
        base_source = "given"
    base_voltage = float(base_voltage)
    if not (base_voltage > 0 and math.isfinite(base_voltage)):
        raise ValidationError(f"{path}: base voltage {base_voltage} must be positive")

    metadata = {"source": str(path), "base_source": base_source}
    if header:
        metadata["header"] = header
    metadata.update({k: v for k, v in meta.items() if k not in ("fs", "f", "base_voltage")})
    return VoltageRecord(v / base_voltage, fs=fs, f=f, base_voltage=base_voltage, metadata=metadata)


def write_waveform(
    record: VoltageRecord,
    path: PathLike,
    time_column: bool = True,
    sidecar: bool = True,
    delimiter: str = ",",
) -> Path:
    """Write a record in volts (``samples * base_voltage``) with full float precision."""
    path = Path(path)
    volts = record.samples * record.base_voltage
    buf = _io.StringIO()
    if time_column:
        buf.write(f"time_s{delimiter}voltage\n")
        for t, x in zip(record.time, volts):
            buf.write(f"{format_value(float(t))}{delimiter}{format_value(float(x))}\n")
    else:
        buf.write("voltage\n")
        for x in volts:
            buf.write(f"{format_value(float(x))}\n")
    path.write_text(buf.getvalue())
    if sidecar:
        meta = {"fs": record.fs, "f": record.f, "base_voltage": record.base_voltage}
        meta.update({k: v for k, v in record.metadata.items() if _jsonable(v)})
        _sidecar_path(path).write_text(json.dumps(meta, sort_keys=True, indent=2) + "\n")
    return path


def _jsonable(value) -> bool:
    try:
        json.dumps(value)
    except (TypeError, ValueError):
        return False
    return True


def format_value(value: Any) -> str:
    """Shortest round-tripping text for floats, plain ``str`` otherwise."""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def _plain(value):
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, Mapping):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def table_to_csv(rows: Sequence[Mapping], columns: Sequence[str]) -> str:
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_value(row.get(c)) for c in columns])
    return buf.getvalue()


def table_to_json(rows: Sequence[Mapping], columns: Sequence[str], metadata: Optional[Mapping] = None) -> str:
    doc = {
        "metadata": _plain(dict(metadata or {})),
        "columns": list(columns),
        "rows": [{c: _plain(row.get(c)) for c in columns} for row in rows],
    }
    return json.dumps(doc, sort_keys=True, indent=2, allow_nan=True) + "\n"


def write_table(
    rows: Sequence[Mapping],
    columns: Sequence[str],
    path: Optional[PathLike] = None,
    fmt: str = "csv",
    metadata: Optional[Mapping] = None,
) -> str:
    """Render rows as CSV or JSON; write to ``path`` when given and return the text."""
    if fmt == "csv":
        text = table_to_csv(rows, columns)
    elif fmt == "json":
        text = table_to_json(rows, columns, metadata)
    else:
        raise ValidationError(f"unknown output format {fmt!r} (csv or json)")
    if path is not None:
        path = Path(path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text)
        except OSError as exc:
            raise PQIOError(f"cannot write {path}: {exc.strerror or exc}") from None
    return text
