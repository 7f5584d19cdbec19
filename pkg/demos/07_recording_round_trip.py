"""Write a sag recorded in volts, read it back and recover its parameters."""

import tempfile
from pathlib import Path

from pqseverity import EventSpec, compute_indices, estimate_sag_params, ingest, synthesize, write_waveform

rec = synthesize(EventSpec.make("sag", alpha=0.4, td=12, fs=20_000))
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "sag_300V.csv"
    write_waveform(rec.with_samples(rec.samples * 300.0), path, sidecar=False)
    back = ingest(path)  # no base voltage given: taken from the first two cycles
    print("rate", back.fs, "Hz; base", round(back.base_voltage, 3), "from", back.metadata["base_source"])
    est = estimate_sag_params(back)
    print(f"estimated alpha {est.alpha_hat:.3f}, duration {est.td_hat:.2f} cycles")
    print(f"ENI {compute_indices(back).eni:.2f}% (synthetic original {compute_indices(rec).eni:.2f}%)")
