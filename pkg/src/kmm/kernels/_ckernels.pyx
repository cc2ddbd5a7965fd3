# cython: boundscheck=False, wraparound=False, cdivision=True
# cython: language_level=3
"""Compiled implementations of the hot kernels.

Same contracts as kmm.kernels._pykernels; see that module for the
documented semantics.  The inner loops here are plain C over int64
bit masks and double complex amplitudes.
"""

import numpy as np

from ._tables import rev_interleave

cdef extern from *:
    """
    #if defined(_MSC_VER)
    #include <intrin.h>
    static inline int kmm_popcount64(unsigned long long x) { return (int)__popcnt64(x); }
    #else
    static inline int kmm_popcount64(unsigned long long x) { return __builtin_popcountll(x); }
    #endif
    """
    int kmm_popcount64(unsigned long long x) nogil


def expand_pure(amps, int n):
    cdef Py_ssize_t dim = 1 << n
    amps_arr = np.ascontiguousarray(amps, dtype=np.complex128)
    out_arr = np.empty(1 << (2 * n), dtype=np.float64)
    work_arr = np.empty(dim, dtype=np.complex128)
    cdef const double complex[::1] a = amps_arr
    cdef const long long[::1] ri = rev_interleave(n)
    cdef double[::1] out = out_arr
    cdef double complex[::1] work = work_arr
    cdef double scale = 2.0 ** -n
    cdef double complex ipow[4]
    ipow[0] = 1.0
    ipow[1] = 1.0j
    ipow[2] = -1.0
    ipow[3] = -1.0j
    cdef Py_ssize_t x, j, z, h, i
    cdef long long keyx
    cdef double complex t, u, val
    with nogil:
        for x in range(dim):
            for j in range(dim):
                work[j] = a[j ^ x].conjugate() * a[j]
            h = 1
            while h < dim:
                i = 0
                while i < dim:
                    for j in range(i, i + h):
                        t = work[j]
                        u = work[j + h]
                        work[j] = t + u
                        work[j + h] = t - u
                    i += 2 * h
                h *= 2
            keyx = ri[x]
            for z in range(dim):
                val = work[z] * ipow[kmm_popcount64(<unsigned long long> (x & z)) & 3]
                out[keyx + (ri[z] << 1)] = val.real * scale
    return out_arr


def expectations(amps, xs, zs):
    amps_arr = np.ascontiguousarray(amps, dtype=np.complex128)
    xs_arr = np.ascontiguousarray(xs, dtype=np.int64)
    zs_arr = np.ascontiguousarray(zs, dtype=np.int64)
    out_arr = np.empty(xs_arr.size, dtype=np.complex128)
    cdef const double complex[::1] a = amps_arr
    cdef const long long[::1] xv = xs_arr
    cdef const long long[::1] zv = zs_arr
    cdef double complex[::1] out = out_arr
    cdef double complex ipow[4]
    ipow[0] = 1.0
    ipow[1] = 1.0j
    ipow[2] = -1.0
    ipow[3] = -1.0j
    cdef Py_ssize_t dim = a.shape[0]
    cdef Py_ssize_t m = xv.shape[0]
    cdef Py_ssize_t i, j
    cdef long long x, z
    cdef double complex acc
    with nogil:
        for i in range(m):
            x = xv[i]
            z = zv[i]
            acc = 0
            for j in range(dim):
                if kmm_popcount64(<unsigned long long> (z & j)) & 1:
                    acc = acc - a[j ^ x].conjugate() * a[j]
                else:
                    acc = acc + a[j ^ x].conjugate() * a[j]
            out[i] = acc * ipow[kmm_popcount64(<unsigned long long> (x & z)) & 3]
    return out_arr


def star_accumulate(keys, vals, int n):
    keys_arr = np.ascontiguousarray(keys, dtype=np.int64)
    vals_arr = np.ascontiguousarray(vals, dtype=np.float64)
    acc_arr = np.zeros(1 << (2 * n), dtype=np.float64)
    cdef const long long[::1] kv = keys_arr
    cdef const double[::1] vv = vals_arr
    cdef double[::1] acc = acc_arr
    cdef long long mask = ((<long long> 1 << (2 * n)) - 1) // 3
    cdef Py_ssize_t m = kv.shape[0]
    ycnt_arr = np.empty(m, dtype=np.int64)
    cdef long long[::1] ycnt = ycnt_arr
    cdef Py_ssize_t i, j
    cdef long long ka, kb, za, g
    cdef int phi
    cdef double va
    with nogil:
        for i in range(m):
            ka = kv[i]
            ycnt[i] = kmm_popcount64(<unsigned long long> (ka & (ka >> 1) & mask))
        for i in range(m):
            ka = kv[i]
            za = (ka >> 1) & mask
            va = vv[i]
            for j in range(m):
                kb = kv[j]
                g = ka ^ kb
                phi = <int> ((ycnt[i] + ycnt[j]
                              + 2 * kmm_popcount64(<unsigned long long> (za & kb & mask))
                              + 3 * kmm_popcount64(<unsigned long long> (g & (g >> 1) & mask))) & 3)
                if phi & 1:
                    continue
                if phi == 0:
                    acc[g] += va * vv[j]
                else:
                    acc[g] -= va * vv[j]
    return acc_arr
