"""Histogram-contrast visual saliency.

The saliency of a pixel is its total absolute intensity distance to every
other pixel, computed on 8-bit quantized levels through a 256-bin histogram
and a per-level distance lookup: O(N + 256^2) overall instead of O(N^2).
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .image import as_plane


def quantize256(p: np.ndarray) -> np.ndarray:
    """Map [0,1] samples to 8-bit levels with round-half-up."""
    p = as_plane(p)
    if p.min() < 0.0 or p.max() > 1.0:
        raise ValueError("samples out of [0, 1]; quantization is defined on image range")
    return np.floor(p * 255.0 + 0.5).astype(np.uint8)


def saliency_raw(p: np.ndarray) -> np.ndarray:
    """Unnormalized integer saliency map (exact int64 arithmetic)."""
    return kernels.saliency_raw(quantize256(p))


def saliency_map(p: np.ndarray) -> np.ndarray:
    """Min-max normalized saliency in [0, 1].

    A constant-saliency image has no contrast signal; the map degenerates to
    all 0.5 so that downstream weight ratios reduce to equal weighting.
    """
    raw = saliency_raw(p).astype(np.float64)
    lo = raw.min()
    hi = raw.max()
    if hi == lo:
        return np.full(raw.shape, 0.5)
    return (raw - lo) / (hi - lo)
