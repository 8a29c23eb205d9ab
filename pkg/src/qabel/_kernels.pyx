# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``qabel._purepy`` (same signatures)."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t

cnp.import_array()


cdef struct Tables:
    int64_t* count
    int64_t* length_sum
    int64_t* distinct_sum
    int64_t* by_lg
    int64_t* by_sm
    int64_t* ds_lg
    int64_t* ds_sm
    int stride


cdef void _walk(int s, int l, int lg, int p, bint distinct, int nd, int N,
                Tables* t) noexcept nogil:
    cdef int x, top, idx
    t.count[s] += 1
    t.length_sum[s] += l
    t.distinct_sum[s] += nd
    idx = s * t.stride
    t.by_lg[idx + lg] += 1
    t.by_sm[idx + p] += 1
    if distinct:
        if l & 1:
            t.ds_lg[idx + lg] -= 1
            t.ds_sm[idx + p] -= 1
        else:
            t.ds_lg[idx + lg] += 1
            t.ds_sm[idx + p] += 1
    top = p if p < N - s else N - s
    for x in range(1, top + 1):
        if x < p:
            _walk(s + x, l + 1, lg, x, distinct, nd + 1, N, t)
        else:
            _walk(s + x, l + 1, lg, x, False, nd, N, t)


def partition_histograms(int N):
    if N < 0:
        raise ValueError("N must be nonnegative")
    cdef cnp.ndarray[int64_t, ndim=1] count = np.zeros(N + 1, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] length_sum = np.zeros(N + 1, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] distinct_sum = np.zeros(N + 1, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=2] by_lg = np.zeros((N + 1, N + 1), dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=2] by_sm = np.zeros((N + 1, N + 1), dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=2] ds_lg = np.zeros((N + 1, N + 1), dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=2] ds_sm = np.zeros((N + 1, N + 1), dtype=np.int64)
    cdef Tables t
    cdef int x
    t.count = <int64_t*> count.data
    t.length_sum = <int64_t*> length_sum.data
    t.distinct_sum = <int64_t*> distinct_sum.data
    t.by_lg = <int64_t*> by_lg.data
    t.by_sm = <int64_t*> by_sm.data
    t.ds_lg = <int64_t*> ds_lg.data
    t.ds_sm = <int64_t*> ds_sm.data
    t.stride = N + 1

    count[0] = 1
    by_lg[0, 0] = 1
    by_sm[0, 0] = 1
    ds_lg[0, 0] = 1
    ds_sm[0, 0] = 1
    with nogil:
        for x in range(1, N + 1):
            _walk(x, 1, x, x, True, 1, N, &t)
    return {
        "count": count,
        "by_largest": by_lg,
        "by_smallest": by_sm,
        "distinct_sign_by_largest": ds_lg,
        "distinct_sign_by_smallest": ds_sm,
        "length_sum": length_sum,
        "distinct_sum": distinct_sum,
    }


def mul_poch_range(c, int a, int b):
    cdef cnp.ndarray[double, ndim=1] out = np.array(c, dtype=np.float64, copy=True)
    cdef double* o = <double*> out.data
    cdef Py_ssize_t n = out.shape[0], i
    cdef int k, lo = a if a > 1 else 1, hi = b if b < n - 1 else <int>(n - 1)
    with nogil:
        for k in range(lo, hi + 1):
            i = n - 1
            while i >= k:
                o[i] -= o[i - k]
                i -= 1
    return out


def div_poch_range(c, int a, int b):
    cdef cnp.ndarray[double, ndim=1] out = np.array(c, dtype=np.float64, copy=True)
    cdef double* o = <double*> out.data
    cdef Py_ssize_t n = out.shape[0], i
    cdef int k, lo = a if a > 1 else 1, hi = b if b < n - 1 else <int>(n - 1)
    with nogil:
        for k in range(lo, hi + 1):
            for i in range(k, n):
                o[i] += o[i - k]
    return out


def descending_product_sum(f):
    cdef cnp.ndarray[double, ndim=1] fv = np.ascontiguousarray(f, dtype=np.float64)
    cdef Py_ssize_t N = fv.shape[0] - 1, i
    cdef cnp.ndarray[double, ndim=1] w = np.zeros(N + 1)
    cdef double* wp = <double*> w.data
    cdef double* fp = <double*> fv.data
    cdef Py_ssize_t m
    with nogil:
        for m in range(1, N + 1):
            i = N
            while i >= m:
                wp[i] -= wp[i - m]
                i -= 1
            wp[m] += fp[m]
    return w


def horner(c, double complex q):
    cdef cnp.ndarray[double, ndim=1] cv = np.ascontiguousarray(c, dtype=np.float64)
    cdef double* cp = <double*> cv.data
    cdef Py_ssize_t i = cv.shape[0] - 1
    cdef double complex acc = 0
    with nogil:
        while i >= 0:
            acc = acc * q + cp[i]
            i -= 1
    return complex(acc)
