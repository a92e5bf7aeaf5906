"""Compiled scoring kernels: equal-width binning and the three criteria.

Same contracts as histselect._kernels_py.  The inner loops release the GIL
so resampling rounds can overlap on a thread pool.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport floor, log2

cnp.import_array()

FISHER_EPS = 1e-12

cdef double _EPS = 1e-12


def discretize_matrix(values, int n_bins):
    """Equal-width-bin every column; constant columns collapse to one bin."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2, mode="c"] vals = np.ascontiguousarray(
        values, dtype=np.float64
    )
    cdef Py_ssize_t n = vals.shape[0]
    cdef Py_ssize_t f = vals.shape[1]
    codes_arr = np.zeros((n, f), dtype=np.int32)
    bins_arr = np.empty(f, dtype=np.int32)
    cdef cnp.int32_t[:, ::1] codes = codes_arr
    cdef cnp.int32_t[::1] bins = bins_arr
    cdef double[:, ::1] v = vals
    cdef Py_ssize_t i, j
    cdef double lo, hi, width
    cdef int c
    with nogil:
        for j in range(f):
            lo = v[0, j]
            hi = v[0, j]
            for i in range(1, n):
                if v[i, j] < lo:
                    lo = v[i, j]
                if v[i, j] > hi:
                    hi = v[i, j]
            if hi == lo:
                bins[j] = 1
            else:
                width = (hi - lo) / n_bins
                bins[j] = n_bins
                for i in range(n):
                    c = <int>floor((v[i, j] - lo) / width)
                    if c > n_bins - 1:
                        c = n_bins - 1
                    elif c < 0:
                        c = 0
                    codes[i, j] = c
    return codes_arr, bins_arr


def fisher_scores(values, labels, int n_classes):
    """Fisher ratio per column, population variances, epsilon-floored."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2, mode="c"] vals = np.ascontiguousarray(
        values, dtype=np.float64
    )
    cdef cnp.ndarray[cnp.int64_t, ndim=1] labs = np.ascontiguousarray(
        labels, dtype=np.int64
    )
    cdef Py_ssize_t n = vals.shape[0]
    cdef Py_ssize_t f = vals.shape[1]
    counts_arr = np.zeros(n_classes, dtype=np.int64)
    sums_arr = np.zeros((n_classes, f), dtype=np.float64)
    within_arr = np.zeros(f, dtype=np.float64)
    between_arr = np.zeros(f, dtype=np.float64)
    out_arr = np.empty(f, dtype=np.float64)
    cdef cnp.int64_t[::1] counts = counts_arr
    cdef double[:, ::1] sums = sums_arr
    cdef double[::1] within = within_arr
    cdef double[::1] between = between_arr
    cdef double[::1] out = out_arr
    cdef double[:, ::1] v = vals
    cdef cnp.int64_t[::1] y = labs
    cdef Py_ssize_t i, j
    cdef int c
    cdef double d, overall, den
    with nogil:
        for i in range(n):
            counts[y[i]] += 1
            for j in range(f):
                sums[y[i], j] += v[i, j]
        # class sums -> class means, reusing the sums buffer
        for c in range(n_classes):
            if counts[c] > 0:
                for j in range(f):
                    sums[c, j] /= counts[c]
        for i in range(n):
            for j in range(f):
                d = v[i, j] - sums[y[i], j]
                within[j] += d * d
        for j in range(f):
            overall = 0.0
            for c in range(n_classes):
                overall += counts[c] * sums[c, j]
            overall /= n
            for c in range(n_classes):
                if counts[c] > 0:
                    d = sums[c, j] - overall
                    between[j] += counts[c] * d * d
            den = within[j]
            if den < _EPS:
                den = _EPS
            out[j] = between[j] / den
    return out_arr


def chi2_scores(codes, labels, int n_classes, int n_bins):
    """Pearson chi-square per feature; empty cells contribute nothing."""
    cdef cnp.ndarray[cnp.int32_t, ndim=2, mode="c"] code_m = np.ascontiguousarray(
        codes, dtype=np.int32
    )
    cdef cnp.ndarray[cnp.int64_t, ndim=1] labs = np.ascontiguousarray(
        labels, dtype=np.int64
    )
    cdef Py_ssize_t n = code_m.shape[0]
    cdef Py_ssize_t f = code_m.shape[1]
    cols_arr = np.bincount(labs, minlength=n_classes).astype(np.int64)
    table_arr = np.zeros(n_bins * n_classes, dtype=np.int64)
    out_arr = np.empty(f, dtype=np.float64)
    cdef cnp.int32_t[:, ::1] cm = code_m
    cdef cnp.int64_t[::1] y = labs
    cdef cnp.int64_t[::1] cols = cols_arr
    cdef cnp.int64_t[::1] table = table_arr
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i, j
    cdef int b, c
    cdef cnp.int64_t row
    cdef double e, d, score
    with nogil:
        for j in range(f):
            for b in range(n_bins * n_classes):
                table[b] = 0
            for i in range(n):
                table[cm[i, j] * n_classes + y[i]] += 1
            score = 0.0
            for b in range(n_bins):
                row = 0
                for c in range(n_classes):
                    row += table[b * n_classes + c]
                if row == 0:
                    continue
                for c in range(n_classes):
                    if cols[c] == 0:
                        continue
                    e = (<double>row) * (<double>cols[c]) / n
                    d = (<double>table[b * n_classes + c]) - e
                    score += d * d / e
            out[j] = score
    return out_arr


def infogain_scores(codes, labels, int n_classes, int n_bins):
    """Information gain H(Y) - H(Y|X) in bits per feature."""
    cdef cnp.ndarray[cnp.int32_t, ndim=2, mode="c"] code_m = np.ascontiguousarray(
        codes, dtype=np.int32
    )
    cdef cnp.ndarray[cnp.int64_t, ndim=1] labs = np.ascontiguousarray(
        labels, dtype=np.int64
    )
    cdef Py_ssize_t n = code_m.shape[0]
    cdef Py_ssize_t f = code_m.shape[1]
    cols_arr = np.bincount(labs, minlength=n_classes).astype(np.int64)
    table_arr = np.zeros(n_bins * n_classes, dtype=np.int64)
    out_arr = np.empty(f, dtype=np.float64)
    cdef cnp.int32_t[:, ::1] cm = code_m
    cdef cnp.int64_t[::1] y = labs
    cdef cnp.int64_t[::1] cols = cols_arr
    cdef cnp.int64_t[::1] table = table_arr
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i, j
    cdef int b, c
    cdef cnp.int64_t row, o
    cdef double h_y, h_cond, p, ig
    h_y = 0.0
    for c in range(n_classes):
        if cols_arr[c] > 0:
            p = cols_arr[c] / <double>n
            h_y -= p * log2(p)
    with nogil:
        for j in range(f):
            for b in range(n_bins * n_classes):
                table[b] = 0
            for i in range(n):
                table[cm[i, j] * n_classes + y[i]] += 1
            h_cond = 0.0
            for b in range(n_bins):
                row = 0
                for c in range(n_classes):
                    row += table[b * n_classes + c]
                if row == 0:
                    continue
                for c in range(n_classes):
                    o = table[b * n_classes + c]
                    if o > 0:
                        h_cond -= (<double>o / n) * log2(<double>o / <double>row)
            ig = h_y - h_cond
            if ig < 0.0:
                ig = 0.0
            out[j] = ig
    return out_arr
