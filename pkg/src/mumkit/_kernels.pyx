# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled batch kernels: measurement probabilities and per-row entropies.

Mirrors ``mumkit._kernels_py`` exactly; see that module for the contract.
The probability kernel hands its real-valued contraction to BLAS dgemm
(same arithmetic as the fallback's matmul, without Python dispatch), and
the power sums special-case the alpha values the bound sweeps use so the
hot loops stay on multiplications and square roots.
"""

import numpy as np

from libc.math cimport log, pow, sqrt
from scipy.linalg.cython_blas cimport dgemm

ZERO_CUTOFF = 1e-15
cdef double _CUT = 1e-15


def measure_batch(ops, rhos):
    o = np.ascontiguousarray(ops, dtype=np.complex128)
    r = np.ascontiguousarray(rhos, dtype=np.complex128)
    cdef int K = o.shape[0]
    cdef int S = r.shape[0]
    cdef int n = 2 * o.shape[1] * o.shape[2]
    ov_arr = o.view(np.float64).reshape(K, n)
    rv_arr = r.view(np.float64).reshape(S, n)
    out = np.empty((S, K), dtype=np.float64)
    cdef const double[:, ::1] a = ov_arr
    cdef const double[:, ::1] b = rv_arr
    cdef double[:, ::1] res = out
    cdef double one = 1.0, zero = 0.0
    # Row-major out (S, K) is column-major (K, S): with column-major views
    # A = ov memory (n, K) and B = rv memory (n, S), out^T = A^T B.
    dgemm("T", "N", &K, &S, &n, &one, <double*> &a[0, 0], &n,
          <double*> &b[0, 0], &n, &zero, &res[0, 0], &K)
    return out


def shannon_rows(p):
    arr = np.ascontiguousarray(p, dtype=np.float64)
    cdef Py_ssize_t N = arr.shape[0]
    cdef Py_ssize_t m = arr.shape[1]
    out = np.empty(N, dtype=np.float64)
    cdef const double[:, ::1] pv = arr
    cdef double[::1] hv = out
    cdef Py_ssize_t i, j
    cdef double acc, x
    for i in range(N):
        acc = 0.0
        for j in range(m):
            x = pv[i, j]
            if x > _CUT:
                acc -= x * log(x)
        hv[i] = acc
    return out


cdef inline double _power_sum(const double[:, ::1] pv, Py_ssize_t i,
                              Py_ssize_t m, double alpha) nogil:
    """Sum of p_j^alpha over row i, fast paths for the common grids."""
    cdef Py_ssize_t j
    cdef double acc = 0.0
    cdef double x
    if alpha == 2.0:
        for j in range(m):
            x = pv[i, j]
            acc += x * x
    elif alpha == 3.0:
        for j in range(m):
            x = pv[i, j]
            acc += x * x * x
    elif alpha == 5.0:
        for j in range(m):
            x = pv[i, j]
            x = x * (x * x) * (x * x)
            acc += x
    elif alpha == 0.5:
        for j in range(m):
            acc += sqrt(pv[i, j])
    elif alpha == 1.5:
        for j in range(m):
            x = pv[i, j]
            acc += x * sqrt(x)
    else:
        for j in range(m):
            acc += pow(pv[i, j], alpha)
    return acc


def renyi_rows(p, double alpha):
    arr = np.ascontiguousarray(p, dtype=np.float64)
    cdef Py_ssize_t N = arr.shape[0]
    cdef Py_ssize_t m = arr.shape[1]
    out = np.empty(N, dtype=np.float64)
    cdef const double[:, ::1] pv = arr
    cdef double[::1] hv = out
    cdef Py_ssize_t i
    for i in range(N):
        hv[i] = log(_power_sum(pv, i, m, alpha)) / (1.0 - alpha)
    return out


def min_entropy_rows(p):
    arr = np.ascontiguousarray(p, dtype=np.float64)
    cdef Py_ssize_t N = arr.shape[0]
    cdef Py_ssize_t m = arr.shape[1]
    out = np.empty(N, dtype=np.float64)
    cdef const double[:, ::1] pv = arr
    cdef double[::1] hv = out
    cdef Py_ssize_t i, j
    cdef double best, x
    for i in range(N):
        best = pv[i, 0]
        for j in range(1, m):
            x = pv[i, j]
            if x > best:
                best = x
        hv[i] = -log(best)
    return out


def tsallis_rows(p, double alpha):
    arr = np.ascontiguousarray(p, dtype=np.float64)
    cdef Py_ssize_t N = arr.shape[0]
    cdef Py_ssize_t m = arr.shape[1]
    out = np.empty(N, dtype=np.float64)
    cdef const double[:, ::1] pv = arr
    cdef double[::1] hv = out
    cdef Py_ssize_t i
    for i in range(N):
        hv[i] = (_power_sum(pv, i, m, alpha) - 1.0) / (1.0 - alpha)
    return out


def coincidence_rows(p):
    arr = np.ascontiguousarray(p, dtype=np.float64)
    cdef Py_ssize_t N = arr.shape[0]
    cdef Py_ssize_t m = arr.shape[1]
    out = np.empty(N, dtype=np.float64)
    cdef const double[:, ::1] pv = arr
    cdef double[::1] hv = out
    cdef Py_ssize_t i, j
    cdef double acc, x
    for i in range(N):
        acc = 0.0
        for j in range(m):
            x = pv[i, j]
            acc += x * x
        hv[i] = acc
    return out
