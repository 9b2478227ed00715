"""Builds the optional Cython kernel extension.

The package works without it: fastfuse.kernels falls back to the pure-NumPy
backend when the compiled module is absent.
"""

import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "fastfuse.kernels._native",
                sources=["src/fastfuse/kernels/_native.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
