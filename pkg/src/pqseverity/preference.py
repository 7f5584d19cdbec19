"""Band preference weights from ordered rankings (multiplicative preference relations)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .exceptions import ParameterRangeError, WeightError

__all__ = ["PreferenceProfile", "preference_weights", "high_band_profile", "uniform_profile"]


@dataclass(frozen=True)
class PreferenceProfile:
    """Rankings ``order`` (1 = most preferred band), intensity and normalized weights."""

    order: tuple
    intensity: float
    weights: np.ndarray

    @property
    def D(self) -> int:
        return len(self.order) - 1

    def to_dict(self) -> dict:
        return {
            "order": list(self.order),
            "intensity": self.intensity,
            "weights": [float(w) for w in self.weights],
        }


def _check_order(order: Sequence[int]) -> tuple:
    try:
        ranks = tuple(int(o) for o in order)
    except (TypeError, ValueError):
        raise WeightError(f"rankings must be integers, got {order!r}") from None
    if any(r != o for r, o in zip(ranks, order)):
        raise WeightError(f"rankings must be integers, got {order!r}")
    if sorted(ranks) != list(range(1, len(ranks) + 1)):
        raise WeightError(f"rankings {list(ranks)} are not a permutation of 1..{len(ranks)}")
    if len(ranks) < 2:
        raise WeightError("at least two bands are required")
    return ranks


def preference_weights(order: Sequence[int], intensity: float, D: Optional[int] = None) -> PreferenceProfile:
    """Translate band rankings and an intensity in [1, 9] into normalized weights.

    Pairwise relations are ``tau[i, j] = I ** ((O[j] - O[i]) / D)``; each
    band's weight is the geometric mean of its row, then the row means are
    normalized to sum to one. Note the exponent divides by the depth ``D``
    (one less than the number of bands), so the most and least preferred
    bands end up exactly a factor ``I`` apart.

    >>> preference_weights([1, 2, 3], 9).weights.round(4)
    array([0.6923, 0.2308, 0.0769])
    """
    ranks = _check_order(order)
    n_bands = len(ranks)
    if D is None:
        D = n_bands - 1
    elif D != n_bands - 1:
        raise WeightError(f"depth D={D} needs {D + 1} rankings, got {n_bands}")
    intensity = float(intensity)
    if not (1.0 <= intensity <= 9.0):
        raise ParameterRangeError("intensity", intensity, 1, 9)

    O = np.asarray(ranks, dtype=float)
    delta = (O[None, :] - O[:, None]) / D
    tau = intensity**delta
    w = np.exp(np.mean(np.log(tau), axis=1))
    w = w / w.sum()
    w.setflags(write=False)
    return PreferenceProfile(ranks, intensity, w)


def high_band_profile(D: int, intensity: float = 9.0) -> PreferenceProfile:
    """Finest detail band most preferred, approximation least (the transient-sensitive default)."""
    return preference_weights(range(1, D + 2), intensity)


def uniform_profile(D: int) -> PreferenceProfile:
    return preference_weights(range(1, D + 2), 1.0)


def check_weights(weights, n_bands: int) -> np.ndarray:
    w = np.asarray(weights.weights if isinstance(weights, PreferenceProfile) else weights, dtype=float)
    if w.shape != (n_bands,):
        raise WeightError(f"expected {n_bands} weights, got shape {w.shape}")
    if np.any(w < 0) or not np.all(np.isfinite(w)):
        raise WeightError("weights must be finite and non-negative")
    if abs(w.sum() - 1.0) > 1e-9:
        raise WeightError(f"weights sum to {w.sum():.12g}, expected 1")
    return w
