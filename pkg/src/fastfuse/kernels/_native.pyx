# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernel backend: separable running-sum box filter and
histogram-contrast saliency. Mirrors numpy_backend exactly."""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def box_filter(double[:, ::1] src, int r):
    cdef Py_ssize_t h = src.shape[0]
    cdef Py_ssize_t w = src.shape[1]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] tmp_arr = np.empty((h, w), dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out_arr = np.empty((h, w), dtype=np.float64)
    cdef double[:, ::1] tmp = tmp_arr
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t i, j, hi
    cdef double s
    cdef long cy, cx

    # Row pass: window sums along columns.
    for i in range(h):
        s = 0.0
        hi = r if r < w - 1 else w - 1
        for j in range(hi + 1):
            s += src[i, j]
        tmp[i, 0] = s
        for j in range(1, w):
            if j + r < w:
                s += src[i, j + r]
            if j - r - 1 >= 0:
                s -= src[i, j - r - 1]
            tmp[i, j] = s

    # Column pass: window sums along rows, then divide by in-bounds area.
    for j in range(w):
        s = 0.0
        hi = r if r < h - 1 else h - 1
        for i in range(hi + 1):
            s += tmp[i, j]
        out[0, j] = s
    for i in range(1, h):
        for j in range(w):
            s = out[i - 1, j]
            if i + r < h:
                s += tmp[i + r, j]
            if i - r - 1 >= 0:
                s -= tmp[i - r - 1, j]
            out[i, j] = s

    for i in range(h):
        cy = (i + r + 1 if i + r + 1 < h else h) - (i - r if i - r > 0 else 0)
        for j in range(w):
            cx = (j + r + 1 if j + r + 1 < w else w) - (j - r if j - r > 0 else 0)
            out[i, j] /= <double>(cy * cx)
    return out_arr


def saliency_raw(const unsigned char[:, ::1] levels):
    cdef Py_ssize_t h = levels.shape[0]
    cdef Py_ssize_t w = levels.shape[1]
    cdef long long[256] hist
    cdef long long[256] lut
    cdef Py_ssize_t i, j
    cdef int a, b
    cdef long long acc

    for a in range(256):
        hist[a] = 0
    for i in range(h):
        for j in range(w):
            hist[levels[i, j]] += 1
    for a in range(256):
        acc = 0
        for b in range(256):
            acc += hist[b] * (a - b if a >= b else b - a)
        lut[a] = acc

    cdef cnp.ndarray[cnp.int64_t, ndim=2] out_arr = np.empty((h, w), dtype=np.int64)
    cdef long long[:, ::1] out = out_arr
    for i in range(h):
        for j in range(w):
            out[i, j] = lut[levels[i, j]]
    return out_arr
