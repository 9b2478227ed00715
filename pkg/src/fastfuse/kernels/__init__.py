"""Kernel backend selection.

The compiled Cython extension is preferred when present; the pure-NumPy
implementation is the fallback. Set ``FUSE_KERNEL_BACKEND=numpy`` (or
``native``) to force a choice; forcing ``native`` raises if the extension
is not built.
"""

import os

from . import numpy_backend

_requested = os.environ.get("FUSE_KERNEL_BACKEND", "").strip().lower()

if _requested == "numpy":
    _impl = numpy_backend
    BACKEND = "numpy"
else:
    try:
        from . import _native as _impl  # type: ignore[no-redef]

        BACKEND = "native"
    except ImportError:
        if _requested == "native":
            raise ImportError(
                "FUSE_KERNEL_BACKEND=native but the compiled extension is not built"
            )
        _impl = numpy_backend
        BACKEND = "numpy"

box_filter_raw = _impl.box_filter
saliency_raw = _impl.saliency_raw


def backend_name() -> str:
    return BACKEND
