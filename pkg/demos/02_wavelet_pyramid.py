"""Decompose a nominal sinusoid and show where its energy falls."""

import numpy as np

from pqseverity import band_energies, band_layout, decomposition_depth, dwt_decompose, nominal_record

fs, f = 10_000, 50
D = decomposition_depth(fs, f)
rec = nominal_record(8000, fs, f)
pyramid = dwt_decompose(rec.samples, "sym4", D)
dist = band_energies(pyramid, fs)

print(f"depth {D} for fs={fs} Hz, f={f} Hz")
for band, e in zip(band_layout(fs, D), dist.energies):
    print(f"  {band.label:>4s} {band.f_low:9.3f} - {band.f_high:8.3f} Hz  energy {e:10.3f}")
print(f"signal energy {rec.energy:.6f}, pyramid energy {pyramid.energy:.6f}")
print("db1 places", round(band_energies(dwt_decompose(rec.samples, "db1", D))[7], 1), "in B7")
