"""O(N) smoothing kernels: box/average filter and the guided filter.

Both run in time independent of the radius. All windowed means use
in-bounds-area normalization (no padding), so a constant plane is a fixed
point and borders carry no halo bias.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .image import as_plane


@dataclass(frozen=True)
class DecompositionPair:
    """Base (smoothed) layer plus the signed residual detail layer."""

    base: np.ndarray
    detail: np.ndarray


@dataclass(frozen=True)
class GuidedFilterParams:
    """Window is (2r+1) x (2r+1); eps regularizes on the [0,1]^2 intensity scale."""

    radius: int
    eps: float

    def __post_init__(self):
        if self.radius < 1:
            raise ValueError(f"guided filter radius must be >= 1, got {self.radius}")
        if not self.eps > 0:
            raise ValueError(f"guided filter eps must be > 0, got {self.eps}")


def box_filter(p: np.ndarray, r: int) -> np.ndarray:
    """Mean over the (2r+1)^2 window clipped to the image bounds.

    Radii larger than the image are allowed: the window degenerates to the
    whole-image mean.
    """
    if r < 1:
        raise ValueError(f"box filter radius must be >= 1, got {r}")
    return kernels.box_filter_raw(as_plane(p), r)


def decompose(p: np.ndarray, r: int) -> DecompositionPair:
    """Two-scale split: base = box mean, detail = p - base (exact reconstruction)."""
    p = as_plane(p)
    base = box_filter(p, r)
    return DecompositionPair(base=base, detail=p - base)


def guided_filter(p: np.ndarray, guide: np.ndarray, params: GuidedFilterParams) -> np.ndarray:
    """Gray-guide guided filter: output is a locally affine transform of the guide.

    q = box(a) * guide + box(b), with a = cov(guide, p) / (var(guide) + eps)
    and b = mean(p) - a * mean(guide), all moments over the same box window.
    """
    p = as_plane(p, name="input")
    guide = as_plane(guide, name="guide")
    if p.shape != guide.shape:
        raise ValueError(f"input shape {p.shape} != guide shape {guide.shape}")
    r = params.radius
    mean_i = box_filter(guide, r)
    mean_p = box_filter(p, r)
    corr_ip = box_filter(guide * p, r)
    corr_ii = box_filter(guide * guide, r)
    cov_ip = corr_ip - mean_i * mean_p
    var_i = corr_ii - mean_i * mean_i
    a = cov_ip / (var_i + params.eps)
    b = mean_p - a * mean_i
    return box_filter(a, r) * guide + box_filter(b, r)
