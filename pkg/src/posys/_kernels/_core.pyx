# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled evaluation kernels; signatures and numerics mirror the NumPy
fallback (denominators as (1-s) + l*s, log-space products)."""

import numpy as np

cimport numpy as cnp
from libc.math cimport log, log1p

cnp.import_array()

BACKEND = "compiled"


def po_sf(double alpha, object sbar_in):
    cdef double[::1] s = np.ascontiguousarray(sbar_in, dtype=np.float64)
    cdef Py_ssize_t m = s.shape[0]
    out_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t j
    for j in range(m):
        out[j] = alpha * s[j] / ((1.0 - s[j]) + alpha * s[j])
    return out_arr


def series_log_sf(object lams_in, object sbar_in):
    cdef double[::1] lams = np.ascontiguousarray(lams_in, dtype=np.float64)
    cdef double[::1] s = np.ascontiguousarray(sbar_in, dtype=np.float64)
    cdef Py_ssize_t n = lams.shape[0], m = s.shape[0]
    out_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] out = out_arr
    loglam_arr = np.log(np.asarray(lams_in, dtype=np.float64))
    cdef double[::1] loglam = loglam_arr
    cdef Py_ssize_t i, j
    cdef double acc, logs, sj, c
    for j in range(m):
        sj = s[j]
        logs = log(sj)  # -inf at sj == 0 is the intended limit
        c = 1.0 - sj
        acc = 0.0
        for i in range(n):
            acc += loglam[i] + logs - log(c + lams[i] * sj)
        out[j] = acc
    return out_arr


def series_hazard_factor(object lams_in, object sbar_in):
    cdef double[::1] lams = np.ascontiguousarray(lams_in, dtype=np.float64)
    cdef double[::1] s = np.ascontiguousarray(sbar_in, dtype=np.float64)
    cdef Py_ssize_t n = lams.shape[0], m = s.shape[0]
    out_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i, j
    cdef double acc, sj, c
    for j in range(m):
        sj = s[j]
        c = 1.0 - sj
        acc = 0.0
        for i in range(n):
            acc += 1.0 / (c + lams[i] * sj)
        out[j] = acc
    return out_arr


def parallel_log_cdf(object lams_in, object sbar_in):
    # log1p keeps the tiny log-cdf deficit once component survivals drop
    # below double epsilon; -inf at sj == 1 is the intended limit
    cdef double[::1] lams = np.ascontiguousarray(lams_in, dtype=np.float64)
    cdef double[::1] s = np.ascontiguousarray(sbar_in, dtype=np.float64)
    cdef Py_ssize_t n = lams.shape[0], m = s.shape[0]
    out_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i, j
    cdef double acc, logc, sj
    for j in range(m):
        sj = s[j]
        logc = log1p(-sj)
        acc = 0.0
        for i in range(n):
            acc += logc - log1p(-(1.0 - lams[i]) * sj)
        out[j] = acc
    return out_arr


def parallel_rhr_factor(object lams_in, object sbar_in):
    cdef double[::1] lams = np.ascontiguousarray(lams_in, dtype=np.float64)
    cdef double[::1] s = np.ascontiguousarray(sbar_in, dtype=np.float64)
    cdef Py_ssize_t n = lams.shape[0], m = s.shape[0]
    out_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i, j
    cdef double acc, sj, c
    for j in range(m):
        sj = s[j]
        c = 1.0 - sj
        acc = 0.0
        for i in range(n):
            acc += lams[i] / (c + lams[i] * sj)
        out[j] = acc
    return out_arr
