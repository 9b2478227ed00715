"""Raster data model and 8-bit I/O.

A *plane* throughout this package is a 2-D C-contiguous float64 ndarray.
Image planes live in [0, 1]; detail layers are signed. Quantization happens
only at the I/O boundary: 8-bit code c maps to c/255 on load, and samples
encode as round-half-up(s * 255) on save.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from PIL import Image, UnidentifiedImageError


class FormatError(ValueError):
    """Unsupported raster format or pixel layout."""


def as_plane(a, *, name: str = "plane") -> np.ndarray:
    """Validate and return ``a`` as a plane (2-D, finite, float64, C order)."""
    p = np.ascontiguousarray(a, dtype=np.float64)
    if p.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got shape {p.shape}")
    if p.shape[0] < 1 or p.shape[1] < 1:
        raise ValueError(f"{name} must be at least 1x1, got shape {p.shape}")
    if not np.all(np.isfinite(p)):
        raise ValueError(f"{name} contains non-finite samples")
    return p


def validate_source_set(planes) -> list[np.ndarray]:
    """Validate K >= 2 co-registered planes of identical size."""
    planes = [as_plane(p, name=f"source[{i}]") for i, p in enumerate(planes)]
    if len(planes) < 2:
        raise ValueError(f"a source set requires K >= 2 planes, got {len(planes)}")
    shape = planes[0].shape
    for i, p in enumerate(planes[1:], start=1):
        if p.shape != shape:
            raise ValueError(
                f"source[{i}] has shape {p.shape}, expected {shape} (sources must be pre-registered)"
            )
    return planes


@dataclass(frozen=True)
class ColorImage:
    """RGB raster with samples in [0, 1], one plane per channel."""

    r: np.ndarray
    g: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        for name in ("r", "g", "b"):
            object.__setattr__(self, name, as_plane(getattr(self, name), name=name))
        if not (self.r.shape == self.g.shape == self.b.shape):
            raise ValueError("color channels must share dimensions")

    @property
    def shape(self) -> tuple[int, int]:
        return self.r.shape


def encode_u8(p: np.ndarray) -> np.ndarray:
    """Encode [0,1] samples to uint8 with round-half-up. Caller clips first."""
    p = as_plane(p)
    if p.min() < 0.0 or p.max() > 1.0:
        raise ValueError("samples out of [0, 1]; clip before encoding")
    return np.floor(p * 255.0 + 0.5).astype(np.uint8)


def load_image(path) -> np.ndarray | ColorImage:
    """Load an 8-bit raster. Grayscale files yield a plane, color files a ColorImage."""
    try:
        with Image.open(path) as im:
            im.load()
            mode = im.mode
            if mode == "L":
                return np.asarray(im, dtype=np.float64) / 255.0
            if mode == "RGB":
                arr = np.asarray(im, dtype=np.float64) / 255.0
                return ColorImage(arr[:, :, 0], arr[:, :, 1], arr[:, :, 2])
            raise FormatError(f"unsupported pixel mode {mode!r} in {path} (8-bit L/RGB only)")
    except UnidentifiedImageError as exc:
        raise FormatError(f"unsupported or corrupt raster file: {path}") from exc


def save_image(img: np.ndarray | ColorImage, path) -> None:
    """Write an 8-bit PNG/PGM/PPM. Samples must already be clipped to [0, 1]."""
    if isinstance(img, ColorImage):
        stack = np.stack([encode_u8(img.r), encode_u8(img.g), encode_u8(img.b)], axis=-1)
        Image.fromarray(stack, mode="RGB").save(path)
    else:
        Image.fromarray(encode_u8(img), mode="L").save(path)


# ITU-R BT.601 full-range luma coefficients (recorded assumption: the method
# only requires *a* YCbCr transform; this variant is documented in README).
_KR, _KG, _KB = 0.299, 0.587, 0.114


def rgb_to_ycbcr(img: ColorImage) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """BT.601 full-range transform; y in [0,1], cb/cr in [-0.5, 0.5]."""
    y = _KR * img.r + _KG * img.g + _KB * img.b
    cb = (img.b - y) / (2.0 * (1.0 - _KB))
    cr = (img.r - y) / (2.0 * (1.0 - _KR))
    return y, cb, cr


def ycbcr_to_rgb(y: np.ndarray, cb: np.ndarray, cr: np.ndarray) -> ColorImage:
    """Inverse of :func:`rgb_to_ycbcr`; round-trips within 1e-6 per sample."""
    r = y + 2.0 * (1.0 - _KR) * cr
    b = y + 2.0 * (1.0 - _KB) * cb
    g = (y - _KR * r - _KB * b) / _KG
    return ColorImage(r, g, b)


def clip(p: np.ndarray, lo: float = 0.0, hi: float = 1.0) -> np.ndarray:
    """Clamp every sample to [lo, hi]."""
    if not lo < hi:
        raise ValueError(f"clip range requires lo < hi, got [{lo}, {hi}]")
    return np.clip(p, lo, hi)
