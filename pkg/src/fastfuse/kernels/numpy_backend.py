"""Pure-NumPy kernel backend.

Same contracts as the compiled backend in ``_native``: O(N) box filtering via
running sums (independent of the radius) and O(N + 256^2) histogram-contrast
saliency. Used automatically when the extension is not built, or when
``FUSE_KERNEL_BACKEND=numpy``.
"""

import numpy as np


def _sliding_sum(a: np.ndarray, r: int, axis: int) -> np.ndarray:
    """Sum over the length-(2r+1) window clipped to the array bounds."""
    n = a.shape[axis]
    c = np.cumsum(a, axis=axis, dtype=np.float64)
    pad = [(0, 0), (0, 0)]
    pad[axis] = (1, 0)
    c = np.pad(c, pad)  # c[i] = sum of first i elements along axis
    idx = np.arange(n)
    hi = np.minimum(idx + r + 1, n)
    lo = np.maximum(idx - r, 0)
    return np.take(c, hi, axis=axis) - np.take(c, lo, axis=axis)


def _window_counts(n: int, r: int) -> np.ndarray:
    idx = np.arange(n)
    return np.minimum(idx + r + 1, n) - np.maximum(idx - r, 0)


def box_filter(src: np.ndarray, r: int) -> np.ndarray:
    """Windowed mean with in-bounds-area normalization (no padding)."""
    sums = _sliding_sum(_sliding_sum(src, r, axis=0), r, axis=1)
    area = np.outer(_window_counts(src.shape[0], r), _window_counts(src.shape[1], r))
    return sums / area


def saliency_raw(levels: np.ndarray) -> np.ndarray:
    """Raw histogram-contrast saliency on 8-bit levels, exact int64 arithmetic.

    Output pixel value is sum_i hist[i] * |level - i|, i.e. the total absolute
    intensity distance from that pixel to every pixel in the image.
    """
    hist = np.bincount(levels.ravel(), minlength=256).astype(np.int64)
    grid = np.arange(256, dtype=np.int64)
    lut = (np.abs(grid[:, None] - grid[None, :]) * hist[None, :]).sum(axis=1)
    return lut[levels]
