# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled partition-check kernels.

Semantics identical to wepart._pykernels; see that module for the contract.
These are the inner loops of the exhaustive partition sweeps, so they avoid
numpy temporaries entirely.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

DEF INF = 1e308


def we_deviation(const int[:] indptr, const int[:] indices,
                 const double[:] nu, const int[:] cell, int m):
    """Largest within-cell spread of the weight-intersection numbers."""
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef cnp.ndarray[double, ndim=1] row_arr = np.zeros(m)
    cdef cnp.ndarray[double, ndim=1] lo_arr = np.full(m * m, INF)
    cdef cnp.ndarray[double, ndim=1] hi_arr = np.full(m * m, -INF)
    cdef double[:] row = row_arr
    cdef double[:] lo = lo_arr
    cdef double[:] hi = hi_arr
    cdef Py_ssize_t u, k, j, base
    cdef double inv, val, dev = 0.0
    for u in range(n):
        for j in range(m):
            row[j] = 0.0
        for k in range(indptr[u], indptr[u + 1]):
            row[cell[indices[k]]] += nu[indices[k]]
        inv = 1.0 / nu[u]
        base = cell[u] * m
        for j in range(m):
            val = row[j] * inv
            if val < lo[base + j]:
                lo[base + j] = val
            if val > hi[base + j]:
                hi[base + j] = val
    for j in range(m * m):
        if hi[j] >= lo[j] and hi[j] - lo[j] > dev:
            dev = hi[j] - lo[j]
    return dev


def eq_deviation(const int[:] indptr, const int[:] indices,
                 const int[:] cell, int m):
    """Largest within-cell spread of the plain neighbor counts (exact)."""
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef cnp.ndarray[long, ndim=1] row_arr = np.zeros(m, dtype=np.int64)
    cdef cnp.ndarray[long, ndim=1] lo_arr = np.full(m * m, 2 ** 62, dtype=np.int64)
    cdef cnp.ndarray[long, ndim=1] hi_arr = np.full(m * m, -2 ** 62, dtype=np.int64)
    cdef long[:] row = row_arr
    cdef long[:] lo = lo_arr
    cdef long[:] hi = hi_arr
    cdef Py_ssize_t u, k, j, base
    cdef long dev = 0
    for u in range(n):
        for j in range(m):
            row[j] = 0
        for k in range(indptr[u], indptr[u + 1]):
            row[cell[indices[k]]] += 1
        base = cell[u] * m
        for j in range(m):
            if row[j] < lo[base + j]:
                lo[base + j] = row[j]
            if row[j] > hi[base + j]:
                hi[base + j] = row[j]
    for j in range(m * m):
        if hi[j] >= lo[j] and hi[j] - lo[j] > dev:
            dev = hi[j] - lo[j]
    return int(dev)


def commutator_deviation(const int[:] indptr, const int[:] indices,
                         const double[:] nu, const int[:] cell, int m):
    """‖A X - X A‖_inf (entrywise max) for the projector X of the partition."""
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef cnp.ndarray[double, ndim=2] t_arr = np.zeros((n, m))
    cdef cnp.ndarray[double, ndim=1] s2_arr = np.zeros(m)
    cdef cnp.ndarray[double, ndim=1] scale_arr = np.zeros(n)
    cdef double[:, :] t = t_arr
    cdef double[:] s2 = s2_arr
    cdef double[:] scale = scale_arr
    cdef Py_ssize_t u, w, k
    cdef double diff, dev = 0.0
    for u in range(n):
        s2[cell[u]] += nu[u] * nu[u]
        for k in range(indptr[u], indptr[u + 1]):
            t[u, cell[indices[k]]] += nu[indices[k]]
    for u in range(n):
        scale[u] = nu[u] / s2[cell[u]]
    # (A X)[u, w] = t[u, cell(w)] * scale(w); X A is its transpose.
    for u in range(n):
        for w in range(u + 1, n):
            diff = t[u, cell[w]] * scale[w] - t[w, cell[u]] * scale[u]
            if diff < 0.0:
                diff = -diff
            if diff > dev:
                dev = diff
    return dev
