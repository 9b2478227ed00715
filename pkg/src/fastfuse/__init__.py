"""fastfuse: real-time zero-learning image fusion.

Merges K pre-registered sources (thermal/visible, MRI/CT, multi-focus,
multi-exposure) by two-scale decomposition, saliency-weighted base fusion,
and deep-feature-weighted detail fusion, with an objective metric suite and
a runtime benchmark harness.
"""

from .filters import DecompositionPair, GuidedFilterParams, box_filter, decompose, guided_filter
from .image import ColorImage, clip, load_image, rgb_to_ycbcr, save_image, ycbcr_to_rgb
from .saliency import saliency_map

__version__ = "0.1.0"

__all__ = [
    "ColorImage",
    "DecompositionPair",
    "GuidedFilterParams",
    "box_filter",
    "clip",
    "decompose",
    "guided_filter",
    "load_image",
    "rgb_to_ycbcr",
    "saliency_map",
    "save_image",
    "ycbcr_to_rgb",
]
