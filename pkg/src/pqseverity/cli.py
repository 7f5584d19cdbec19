"""Command-line interface.

Subcommands: ``index`` (one event or recording), ``synth`` (write a
synthetic waveform), ``sweep``, ``sensitivity`` and ``asd``. Exit status is 0
on success, 2 for invalid input, 3 for file errors and 4 for numerical
failures. Relative output paths resolve against ``$PQSEVERITY_OUTPUT_DIR``
when it is set.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np

from . import __version__
from .events import EventKind, EventSpec, add_awgn, synthesize
from .exceptions import NumericalError, PQError, PQIOError, ValidationError
from .harness import (
    SENSITIVITY_SET,
    asd_contour_study,
    default_sweep,
    run_sweep,
    wavelet_sensitivity,
)
from .indices import compute_indices
from .io import format_value, ingest, write_table, write_waveform
from .preference import high_band_profile, preference_weights
from .wavelet import BoundaryMode, WaveletSpec, decomposition_depth

OUTPUT_DIR_ENV = "PQSEVERITY_OUTPUT_DIR"

EXIT_OK, EXIT_VALIDATION, EXIT_IO, EXIT_NUMERICAL = 0, 2, 3, 4


@dataclass
class RunConfig:
    """Resolved options shared by all subcommands."""

    subcommand: str
    inputs: List[str] = field(default_factory=list)
    wavelet: str = "sym4"
    p: float = 2.0
    depth: Optional[int] = None
    snr_db: Optional[float] = None
    seed: int = 0
    pref_order: Optional[List[int]] = None
    pref_intensity: Optional[float] = None
    fmt: str = "csv"
    output: Optional[str] = None

    def __post_init__(self):
        if self.depth is not None and self.depth < 1:
            raise ValidationError(f"--depth must be >= 1, got {self.depth}")
        if not self.p >= 1:
            raise ValidationError(f"--p must be >= 1, got {self.p}")


def parse_grid(text: str) -> List[float]:
    """``"0.1:0.9:10"`` is an inclusive linspace; otherwise a comma list."""
    text = text.strip()
    try:
        if ":" in text:
            lo, hi, n = text.split(":")
            n = int(n)
            if n < 1:
                raise ValueError
            return [float(v) for v in np.round(np.linspace(float(lo), float(hi), n), 10)]
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise ValidationError(f"cannot parse grid {text!r} (use a,b,c or lo:hi:n)") from None


def parse_order(text: str) -> List[int]:
    """``"1..8"``, ``"8..1"`` or ``"3,1,2"``."""
    text = text.strip()
    try:
        if ".." in text:
            a, b = (int(v) for v in text.split(".."))
            step = 1 if b >= a else -1
            return list(range(a, b + step, step))
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise ValidationError(f"cannot parse preference order {text!r}") from None


def parse_wavelets(text: str) -> List[str]:
    """Comma list of names, ranges such as ``db1-db20`` or ``sym2-8``, or ``all``."""
    out = []
    for tok in (t.strip() for t in text.split(",")):
        if not tok:
            continue
        if tok.lower() == "all":
            out.extend(SENSITIVITY_SET)
        elif "-" in tok:
            first, last = tok.split("-", 1)
            lo = WaveletSpec.parse(first)
            hi = WaveletSpec.parse(last if not last.isdigit() else f"{lo.family.value}{last}")
            if hi.family != lo.family:
                raise ValidationError(f"wavelet range {tok!r} mixes families")
            out.extend(WaveletSpec(lo.family, n).name for n in range(lo.order, hi.order + 1))
        else:
            out.append(WaveletSpec.parse(tok).name)
    if not out:
        raise ValidationError("empty wavelet list")
    return list(dict.fromkeys(out))


def resolve_output(path: Optional[str], default_name: Optional[str] = None) -> Optional[Path]:
    base = os.environ.get(OUTPUT_DIR_ENV)
    if path is None:
        if base and default_name:
            return Path(base) / default_name
        return None
    p = Path(path)
    if base and not p.is_absolute():
        p = Path(base) / p
    return p


def _write_text(path: Path, text: str) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    except OSError as exc:
        raise PQIOError(f"cannot write {path}: {exc.strerror or exc}") from None


def _emit(text: str, path: Optional[Path]) -> None:
    if path is None:
        sys.stdout.write(text)


def _add_common(p: argparse.ArgumentParser, fmt_choices=("csv", "json"), default_fmt="csv") -> None:
    p.add_argument("--wavelet", default="sym4", help="analysis wavelet, e.g. sym4, db1, coif3 (default sym4)")
    p.add_argument("--p", type=float, default=2.0, help="norm order p >= 1 (default 2)")
    p.add_argument("--depth", type=int, default=None, help="decomposition depth (default: from fs and f)")
    p.add_argument("--snr", type=float, default=None, help="add white Gaussian noise at this SNR in dB")
    p.add_argument("--seed", type=int, default=0, help="noise seed (default 0)")
    p.add_argument("--format", dest="fmt", choices=fmt_choices, default=default_fmt)
    p.add_argument("--output", "-o", default=None, help="output path (default stdout)")


def _add_event(p: argparse.ArgumentParser, required: bool = False) -> None:
    kinds = [k.value for k in EventKind]
    p.add_argument("--event", choices=kinds, required=required, help="synthetic event kind")
    p.add_argument("--alpha", type=float, default=0.0, help="sag/swell magnitude (pu)")
    p.add_argument("--td", type=float, default=0.0, help="sag/swell duration (cycles)")
    p.add_argument("--beta", type=float, default=0.0, help="transient peak (pu)")
    p.add_argument("--gamma", type=float, default=-55.0, help="transient decay constant (1/s)")
    p.add_argument("--ftr", type=float, default=4000.0, help="transient frequency (Hz)")
    p.add_argument("--t1", type=float, default=None, help="event inception (s)")
    p.add_argument("--fs", type=float, default=None, help="sampling rate (Hz); default 10000 for synthesis")
    p.add_argument("--f", type=float, default=None, help="fundamental frequency (Hz), default 50")
    p.add_argument("--cycles", type=float, default=40, help="synthetic window length in cycles (default 40)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pqseverity", description="Wavelet energy severity indices for voltage events.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("index", help="severity indices for one recording or synthetic event")
    p.add_argument("input", nargs="?", help="waveform file (omit with --event)")
    _add_event(p)
    p.add_argument("--base-voltage", type=float, default=None, help="volts per pu for recordings")
    p.add_argument(
        "--norm-window",
        default="0:2",
        help="cycle range START:END used for the automatic per-unit base (default 0:2)",
    )
    p.add_argument("--reference", default=None, help="measured nominal waveform to use as reference")
    p.add_argument("--mode", choices=[m.value for m in BoundaryMode], default="periodic")
    p.add_argument("--segmented", action="store_true", help="also report LNI")
    p.add_argument("--pref-order", default=None, help="band rankings, e.g. 1..8 or 2,1,3")
    p.add_argument("--pref-intensity", type=float, default=None, help="preference intensity in [1, 9]")
    _add_common(p, ("text", "csv", "json"), "text")

    p = sub.add_parser("synth", help="write a synthetic waveform file")
    _add_event(p, required=True)
    p.add_argument("--snr", type=float, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--base-voltage", type=float, default=1.0, help="scale the written samples to volts")
    p.add_argument("--output", "-o", required=True)

    p = sub.add_parser("sweep", help="monotonicity sweep over a parameter grid")
    p.add_argument("--event", choices=[k.value for k in EventKind if k is not EventKind.NOMINAL], required=True)
    for name, hint in (
        ("alphas", "magnitudes"),
        ("tds", "durations in cycles"),
        ("betas", "transient peaks"),
        ("gammas", "decay constants"),
        ("ftrs", "transient frequencies"),
    ):
        p.add_argument(f"--{name}", default=None, help=f"{hint}: a,b,c or lo:hi:n")
    p.add_argument("--t1", type=float, default=None)
    p.add_argument("--pref-order", default=None)
    p.add_argument("--pref-intensity", type=float, default=None)
    p.add_argument("--verdicts", default=None, help="also write per-axis monotonicity verdicts here")
    _add_common(p)

    p = sub.add_parser("sensitivity", help="repeat a sweep for many wavelets")
    p.add_argument("--event", choices=[k.value for k in EventKind if k is not EventKind.NOMINAL], required=True)
    p.add_argument("--wavelets", default="all", help="comma list, ranges like db1-db20, or 'all' (70 wavelets)")
    for name in ("alphas", "tds", "betas", "gammas", "ftrs"):
        p.add_argument(f"--{name}", default=None)
    _add_common(p)

    p = sub.add_parser("asd", help="ride-through contour study for adjustable speed drives")
    p.add_argument("--alphas", default=None, help="default 0:1:21")
    p.add_argument("--tds", default=None, help="default 0:30:61 (cycles)")
    _add_common(p)
    return parser


def _preference(order_text, intensity, D):
    if order_text is None and intensity is None:
        return None
    intensity = 9.0 if intensity is None else intensity
    if order_text is None:
        return high_band_profile(D, intensity)
    return preference_weights(parse_order(order_text), intensity, D)


def _event_spec(args, snr_db=None, seed=None) -> EventSpec:
    return EventSpec.make(
        args.event,
        td=args.td,
        t1=args.t1,
        alpha=args.alpha,
        beta=args.beta,
        gamma=args.gamma,
        f_tr=args.ftr,
        f=args.f if args.f is not None else 50.0,
        fs=args.fs if args.fs is not None else 10_000.0,
        n_cycles=args.cycles,
        snr_db=snr_db,
        seed=seed,
    )


def _norm_window(text: str):
    try:
        a, b = (float(v) for v in text.split(":"))
    except ValueError:
        raise ValidationError(f"cannot parse --norm-window {text!r} (use START:END in cycles)") from None
    return a, b


def cmd_index(args) -> int:
    cfg = RunConfig("index", [args.input] if args.input else [], args.wavelet, args.p, args.depth, args.snr, args.seed)
    if args.input and args.event:
        raise ValidationError("give either an input file or --event, not both")
    if args.input:
        record = ingest(args.input, fs=args.fs, base_voltage=args.base_voltage, f=args.f, norm_window=_norm_window(args.norm_window))
        record = add_awgn(record, cfg.snr_db, cfg.seed)
        kind = None
    elif args.event:
        spec = _event_spec(args, cfg.snr_db, cfg.seed if cfg.snr_db is not None else None)
        record = synthesize(spec)
        kind = spec.kind
    else:
        raise ValidationError("index needs an input file or --event")
    D = cfg.depth if cfg.depth is not None else decomposition_depth(record.fs, record.f)
    reference = None
    if args.reference:
        # a measured nominal shares the event's units, so reuse its base when one is given
        reference = ingest(
            args.reference,
            fs=record.fs,
            base_voltage=args.base_voltage,
            f=record.f,
            norm_window=_norm_window(args.norm_window),
        )
    preference = _preference(args.pref_order, args.pref_intensity, D)
    segmented = args.segmented or (kind is not None and kind.has_gate and kind.has_transient)
    report = compute_indices(
        record,
        reference=reference,
        wavelet=cfg.wavelet,
        p=cfg.p,
        D=D,
        preference=preference,
        segmented=segmented,
        mode=args.mode,
    )
    info = report.to_dict()
    columns = ["eni_pct", "wni_pct", "lni_pct", "p", "wavelet", "D"]
    row = {c: info[c] for c in columns}
    out = resolve_output(args.output)
    if args.fmt == "text":
        lines = [f"{c}: {format_value(row[c])}" for c in columns if row[c] is not None]
        text = "\n".join(lines) + "\n"
        if out is not None:
            _write_text(out, text)
    else:
        meta = {"source": args.input or f"synthetic:{kind.value}", "report": info, "snr_db": cfg.snr_db, "seed": cfg.seed}
        text = write_table([row], columns, out, args.fmt, meta)
    _emit(text, out)
    return EXIT_OK


def cmd_synth(args) -> int:
    spec = _event_spec(args, args.snr, args.seed if args.snr is not None else None)
    record = synthesize(spec)
    record = replace(record, base_voltage=float(args.base_voltage))
    out = resolve_output(args.output)
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        write_waveform(record, out)
    except OSError as exc:
        raise PQIOError(f"cannot write {out}: {exc.strerror or exc}") from None
    return EXIT_OK


def _sweep_overrides(args) -> dict:
    kw = {}
    for flag, key in (("alphas", "alphas"), ("tds", "tds"), ("betas", "betas"), ("gammas", "gammas"), ("ftrs", "f_trs")):
        text = getattr(args, flag, None)
        if text is not None:
            kw[key] = parse_grid(text)
    if args.snr is not None:
        kw["snr_db"] = args.snr
    kw["seed"] = args.seed
    kw["wavelet"] = args.wavelet
    kw["p"] = args.p
    if getattr(args, "t1", None) is not None:
        kw["t1"] = args.t1
    return kw


def _sweep_meta(spec, extra=None) -> dict:
    meta = {
        "kind": spec.kind.value,
        "wavelet": spec.wavelet.name,
        "p": spec.p,
        "snr_db": spec.snr_db,
        "seed": spec.seed,
        "fs": spec.fs,
        "f": spec.f,
        "n_cycles": spec.n_cycles,
        "grids": {a: list(spec.grid(a)) for a in spec.axes},
    }
    meta.update(extra or {})
    return meta


def cmd_sweep(args) -> int:
    if args.depth is not None:
        raise ValidationError("sweep always uses the depth implied by fs and f")
    spec = default_sweep(args.event, **_sweep_overrides(args))
    if args.pref_order is not None or args.pref_intensity is not None:
        spec = replace(spec, preference=_preference(args.pref_order, args.pref_intensity, spec.depth))
    result = run_sweep(spec)
    out = resolve_output(args.output, f"sweep_{spec.kind.value}.{args.fmt}")
    meta = _sweep_meta(spec, {"verdicts": result.verdict_rows()})
    text = write_table(result.rows(), result.columns(), out, args.fmt, meta)
    if args.verdicts:
        vcols = ["index", "axis", "pairs", "violations", "fraction", "max_violation"]
        write_table(result.verdict_rows(), vcols, resolve_output(args.verdicts), "csv")
    _emit(text, out)
    return EXIT_OK


def cmd_sensitivity(args) -> int:
    if args.depth is not None:
        raise ValidationError("sensitivity always uses the depth implied by fs and f")
    names = parse_wavelets(args.wavelets)
    kw = _sweep_overrides(args)
    kw.pop("wavelet")
    spec = default_sweep(args.event, **kw)
    result = wavelet_sensitivity(spec, names)
    out_dir = resolve_output(args.output, f"sensitivity_{spec.kind.value}") or Path(f"sensitivity_{spec.kind.value}")
    for name, res in result.results.items():
        write_table(res.rows(), res.columns(), out_dir / f"{name}.{args.fmt}", args.fmt, _sweep_meta(res.spec))
    summary = result.summary()
    cols = list(summary[0].keys())
    write_table(summary, cols, out_dir / f"summary.{args.fmt}", args.fmt, {"kind": spec.kind.value, "wavelets": names})
    sys.stdout.write(f"wrote {len(names)} sweeps and a summary to {out_dir}\n")
    return EXIT_OK


def cmd_asd(args) -> int:
    if args.depth is not None:
        raise ValidationError("asd always uses the depth implied by fs and f")
    if args.snr is not None:
        raise ValidationError("the ASD study is noiseless")
    alphas = parse_grid(args.alphas) if args.alphas else None
    tds = parse_grid(args.tds) if args.tds else None
    study = asd_contour_study(alphas, tds, wavelet=args.wavelet, p=args.p)
    out = resolve_output(args.output, f"asd.{args.fmt}")
    meta = {
        "wavelet": args.wavelet,
        "p": args.p,
        "threshold_lo": study.threshold_lo,
        "threshold_hi": study.threshold_hi,
    }
    text = write_table(study.rows, ["alpha", "td", "eni_pct", "region"], out, args.fmt, meta)
    _emit(text, out)
    return EXIT_OK


COMMANDS = {
    "index": cmd_index,
    "synth": cmd_synth,
    "sweep": cmd_sweep,
    "sensitivity": cmd_sensitivity,
    "asd": cmd_asd,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.subcommand](args)
    except NumericalError as exc:
        code = EXIT_NUMERICAL
        err = exc
    except (PQIOError, OSError) as exc:
        code = EXIT_IO
        err = exc
    except (ValidationError, PQError) as exc:
        code = EXIT_VALIDATION
        err = exc
    sys.stderr.write(f"pqseverity: error: {err}\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
