"""Severity indices for non-stationary voltage disturbances.

A voltage record is split into dyadic frequency bands with an orthogonal
wavelet pyramid; the per-band energies are then compared with those of the
nominal sinusoid through a normalized p-norm distance (ENI), optionally
weighted by band preferences (WNI) or restricted to the lowest bands (LNI).
"""

__version__ = "0.1.0"

from .events import EventKind, EventSpec, VoltageRecord, add_awgn, nominal_record, synthesize
from .exceptions import (
    DetectionError,
    NumericalError,
    PQError,
    PQIOError,
    ValidationError,
)
from .harness import (
    SweepSpec,
    SweepResult,
    asd_contour_study,
    asd_ride_through,
    estimate_sag_params,
    estimate_transient_params,
    default_sweep,
    run_sweep,
    simultaneous_scenario,
    wavelet_sensitivity,
)
from .indices import (
    EnergyDistribution,
    IndexReport,
    band_energies,
    compute_indices,
    eni,
    lni,
    monotonicity_margin,
    reference_distribution,
    wni,
)
from .io import ingest, write_waveform
from .preference import PreferenceProfile, high_band_profile, preference_weights
from .wavelet import BoundaryMode, WaveletSpec, band_layout, decomposition_depth, dwt_decompose

__all__ = [name for name in dir() if not name.startswith("_")]
