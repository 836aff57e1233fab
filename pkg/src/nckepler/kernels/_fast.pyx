# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled backend for the hot kernels.

Mirrors kernels._pure: same recurrences, same loop nesting, so results
agree with the fallback to rounding.  The triple-loop reduction is
parallelized over the first axis with per-slab partial sums combined
serially in ascending order, so the result does not depend on the
thread count.
"""

from cython.parallel import prange
from libc.math cimport cos, exp, log, sin

import numpy as np

TWO_PI = 2.0 * np.pi


def jacobi_values(int n, double alpha, double beta, x):
    """P_n^(alpha,beta) evaluated elementwise on an array."""
    xa = np.ascontiguousarray(x, dtype=np.float64)
    out = np.empty_like(xa)
    cdef const double[::1] xv = xa
    cdef double[::1] ov = out
    cdef Py_ssize_t i, m = xv.shape[0]
    cdef int k
    cdef double ab = alpha + beta
    cdef double prev, cur, nxt, c1, c2, c3, c4, xi
    for i in range(m):
        xi = xv[i]
        prev = 1.0
        if n == 0:
            ov[i] = prev
            continue
        cur = (alpha + 1.0) + (alpha + beta + 2.0) * 0.5 * (xi - 1.0)
        for k in range(2, n + 1):
            c1 = 2.0 * k * (k + ab) * (2.0 * k + ab - 2.0)
            c2 = (2.0 * k + ab - 1.0) * (2.0 * k + ab) * (2.0 * k + ab - 2.0)
            c3 = (2.0 * k + ab - 1.0) * (alpha * alpha - beta * beta)
            c4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * (2.0 * k + ab)
            nxt = ((c2 * xi + c3) * cur - c4 * prev) / c1
            prev = cur
            cur = nxt
        ov[i] = cur
    return out


def laguerre_values(int n, double alpha, u):
    """L_n^alpha evaluated elementwise on an array."""
    ua = np.ascontiguousarray(u, dtype=np.float64)
    out = np.empty_like(ua)
    cdef const double[::1] uv = ua
    cdef double[::1] ov = out
    cdef Py_ssize_t i, m = uv.shape[0]
    cdef int k
    cdef double prev, cur, nxt, ui
    for i in range(m):
        ui = uv[i]
        prev = 1.0
        if n == 0:
            ov[i] = prev
            continue
        cur = (1.0 + alpha) - ui
        for k in range(1, n):
            nxt = (((2.0 * k + 1.0 + alpha) - ui) * cur - (k + alpha) * prev) / (k + 1.0)
            prev = cur
            cur = nxt
        ov[i] = cur
    return out


def gegenbauer2_values(int n, x):
    """C_n^2 evaluated elementwise on an array."""
    xa = np.ascontiguousarray(x, dtype=np.float64)
    out = np.empty_like(xa)
    cdef const double[::1] xv = xa
    cdef double[::1] ov = out
    cdef Py_ssize_t i, m = xv.shape[0]
    cdef int k
    cdef double prev, cur, nxt, xi
    for i in range(m):
        xi = xv[i]
        prev = 1.0
        if n == 0:
            ov[i] = prev
            continue
        cur = 4.0 * xi
        for k in range(2, n + 1):
            nxt = (2.0 * (k + 1.0) * xi * cur - (k + 2.0) * prev) / k
            prev = cur
            cur = nxt
        ov[i] = cur
    return out


def oscillatory_power_sum(double c1, double c2, double c3, double rho,
                          int s1, int s2, int s3, int n):
    """Trapezoid sum of base^(-5/2 - i rho) times the channel phases.

    Same contract as the pure backend; see kernels._pure.
    """
    if 1.0 - (abs(c1) + abs(c2) + abs(c3)) <= 0.0:
        raise ValueError("power-sum base not positive on the grid")
    ca_arr = np.cos(TWO_PI * np.arange(n) / n)
    cdef double[::1] ca = ca_arr
    cdef double[::1] p1c = np.cos(-TWO_PI * s1 * np.arange(n) / n)
    cdef double[::1] p1s = np.sin(-TWO_PI * s1 * np.arange(n) / n)
    cdef double[::1] p2c = np.cos(-TWO_PI * s2 * np.arange(n) / n)
    cdef double[::1] p2s = np.sin(-TWO_PI * s2 * np.arange(n) / n)
    cdef double[::1] p3c = np.cos(-TWO_PI * s3 * np.arange(n) / n)
    cdef double[::1] p3s = np.sin(-TWO_PI * s3 * np.arange(n) / n)
    slab_re_arr = np.zeros(n)
    slab_im_arr = np.zeros(n)
    cdef double[::1] slab_re = slab_re_arr
    cdef double[::1] slab_im = slab_im_arr
    cdef Py_ssize_t i
    cdef double acc_re = 0.0, acc_im = 0.0
    if n >= 96:
        for i in prange(n, nogil=True, schedule="static"):
            _power_sum_slab(i, c1, c2, c3, rho, &ca[0], &p1c[0], &p1s[0], &p2c[0],
                            &p2s[0], &p3c[0], &p3s[0], n, &slab_re[0], &slab_im[0])
    else:
        # thread startup dwarfs the work on small grids
        for i in range(n):
            _power_sum_slab(i, c1, c2, c3, rho, &ca[0], &p1c[0], &p1s[0], &p2c[0],
                            &p2s[0], &p3c[0], &p3s[0], n, &slab_re[0], &slab_im[0])
    # serial reduction in ascending slab order keeps the result
    # independent of the thread count
    for i in range(n):
        acc_re += slab_re[i]
        acc_im += slab_im[i]
    w = (TWO_PI / n) ** 3
    return complex(acc_re * w, acc_im * w)


cdef void _power_sum_slab(Py_ssize_t i, double c1, double c2, double c3, double rho,
                          const double *ca, const double *p1c, const double *p1s,
                          const double *p2c, const double *p2s, const double *p3c,
                          const double *p3s, Py_ssize_t n,
                          double *slab_re, double *slab_im) noexcept nogil:
    cdef Py_ssize_t j, k
    cdef double base, t, mod, ang, vre, vim, pre_ij
    cdef double pre_i = 1.0 - c1 * ca[i]
    cdef double re_i = 0.0, im_i = 0.0
    cdef double row_re, row_im
    for j in range(n):
        pre_ij = pre_i - c2 * ca[j]
        row_re = 0.0
        row_im = 0.0
        for k in range(n):
            base = pre_ij - c3 * ca[k]
            t = log(base)
            mod = exp(-2.5 * t)
            ang = -rho * t
            vre = mod * cos(ang)
            vim = mod * sin(ang)
            row_re += vre * p3c[k] - vim * p3s[k]
            row_im += vre * p3s[k] + vim * p3c[k]
        re_i += row_re * p2c[j] - row_im * p2s[j]
        im_i += row_re * p2s[j] + row_im * p2c[j]
    slab_re[i] = re_i * p1c[i] - im_i * p1s[i]
    slab_im[i] = re_i * p1s[i] + im_i * p1c[i]
