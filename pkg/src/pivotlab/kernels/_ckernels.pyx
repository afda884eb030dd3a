# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel core: fused loops for softmax, GELU, and layer norm.

Semantics match kernels.reference exactly (same formulas, float64). The win
over the numpy fallback comes from fusing the multi-pass reductions into a
single sweep per row, which matters at the small row sizes this package
trains at.
"""
import numpy as np

from libc.math cimport exp, sqrt, tanh

cdef double SQRT_2_OVER_PI = 0.7978845608028654
cdef double GELU_CUBIC = 0.044715


def softmax_fwd(double[:, ::1] x):
    cdef Py_ssize_t rows = x.shape[0], n = x.shape[1]
    out_arr = np.empty((rows, n), dtype=np.float64)
    cdef double[:, ::1] y = out_arr
    cdef Py_ssize_t i, j
    cdef double m, s
    for i in range(rows):
        m = x[i, 0]
        for j in range(1, n):
            if x[i, j] > m:
                m = x[i, j]
        s = 0.0
        for j in range(n):
            y[i, j] = exp(x[i, j] - m)
            s += y[i, j]
        for j in range(n):
            y[i, j] /= s
    return out_arr


def softmax_bwd(double[:, ::1] y, double[:, ::1] gy):
    cdef Py_ssize_t rows = y.shape[0], n = y.shape[1]
    out_arr = np.empty((rows, n), dtype=np.float64)
    cdef double[:, ::1] gx = out_arr
    cdef Py_ssize_t i, j
    cdef double dot
    for i in range(rows):
        dot = 0.0
        for j in range(n):
            dot += y[i, j] * gy[i, j]
        for j in range(n):
            gx[i, j] = y[i, j] * (gy[i, j] - dot)
    return out_arr


def gelu_fwd(double[::1] x):
    cdef Py_ssize_t n = x.shape[0]
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] y = out_arr
    cdef Py_ssize_t i
    cdef double u
    for i in range(n):
        u = SQRT_2_OVER_PI * (x[i] + GELU_CUBIC * x[i] * x[i] * x[i])
        y[i] = 0.5 * x[i] * (1.0 + tanh(u))
    return out_arr


def gelu_bwd(double[::1] x, double[::1] gy):
    cdef Py_ssize_t n = x.shape[0]
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] gx = out_arr
    cdef Py_ssize_t i
    cdef double u, t, du
    for i in range(n):
        u = SQRT_2_OVER_PI * (x[i] + GELU_CUBIC * x[i] * x[i] * x[i])
        t = tanh(u)
        du = SQRT_2_OVER_PI * (1.0 + 3.0 * GELU_CUBIC * x[i] * x[i])
        gx[i] = gy[i] * (0.5 * (1.0 + t) + 0.5 * x[i] * (1.0 - t * t) * du)
    return out_arr


def layer_norm_fwd(double[:, ::1] x, double[::1] gain, double[::1] bias, double eps):
    cdef Py_ssize_t rows = x.shape[0], d = x.shape[1]
    y_arr = np.empty((rows, d), dtype=np.float64)
    mean_arr = np.empty(rows, dtype=np.float64)
    inv_arr = np.empty(rows, dtype=np.float64)
    cdef double[:, ::1] y = y_arr
    cdef double[::1] mean = mean_arr
    cdef double[::1] inv = inv_arr
    cdef Py_ssize_t i, j
    cdef double mu, var, xc, iv
    for i in range(rows):
        mu = 0.0
        for j in range(d):
            mu += x[i, j]
        mu /= d
        var = 0.0
        for j in range(d):
            xc = x[i, j] - mu
            var += xc * xc
        var /= d
        iv = 1.0 / sqrt(var + eps)
        mean[i] = mu
        inv[i] = iv
        for j in range(d):
            y[i, j] = (x[i, j] - mu) * iv * gain[j] + bias[j]
    return y_arr, mean_arr, inv_arr


def layer_norm_bwd(double[:, ::1] x, double[::1] gain, double[::1] mean,
                   double[::1] inv, double[:, ::1] gy):
    cdef Py_ssize_t rows = x.shape[0], d = x.shape[1]
    gx_arr = np.empty((rows, d), dtype=np.float64)
    ggain_arr = np.zeros(d, dtype=np.float64)
    gbias_arr = np.zeros(d, dtype=np.float64)
    cdef double[:, ::1] gx = gx_arr
    cdef double[::1] ggain = ggain_arr
    cdef double[::1] gbias = gbias_arr
    cdef Py_ssize_t i, j
    cdef double m1, m2, xhat, gxhat
    for i in range(rows):
        m1 = 0.0
        m2 = 0.0
        for j in range(d):
            xhat = (x[i, j] - mean[i]) * inv[i]
            gxhat = gy[i, j] * gain[j]
            m1 += gxhat
            m2 += gxhat * xhat
        m1 /= d
        m2 /= d
        for j in range(d):
            xhat = (x[i, j] - mean[i]) * inv[i]
            gxhat = gy[i, j] * gain[j]
            gx[i, j] = inv[i] * (gxhat - m1 - xhat * m2)
            ggain[j] += gy[i, j] * xhat
            gbias[j] += gy[i, j]
    return gx_arr, ggain_arr, gbias_arr
