# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementation of the hot numeric kernels.

Bit-identical to volasym._kernels_py: same SplitMix64 counter stream, same
inverse-CDF transform, same operation order (built with -ffp-contract=off so
no FMA contraction changes rounding).
"""

from libc.math cimport log, sqrt
from libc.stdint cimport uint64_t

import numpy as np

BACKEND = "cython"

cdef double TWO_NEG53 = 1.0 / 9007199254740992.0
cdef double PLOW = 0.02425
cdef double PHIGH = 1.0 - 0.02425

cdef double A0 = -3.969683028665376e+01
cdef double A1 = 2.209460984245205e+02
cdef double A2 = -2.759285104469687e+02
cdef double A3 = 1.383577518672690e+02
cdef double A4 = -3.066479806614716e+01
cdef double A5 = 2.506628277459239e+00
cdef double B0 = -5.447609879822406e+01
cdef double B1 = 1.615858368580409e+02
cdef double B2 = -1.556989798598866e+02
cdef double B3 = 6.680131188771972e+01
cdef double B4 = -1.328068155288572e+01
cdef double C0 = -7.784894002430293e-03
cdef double C1 = -3.223964580411365e-01
cdef double C2 = -2.400758277161838e+00
cdef double C3 = -2.549732539343734e+00
cdef double C4 = 4.374664141464968e+00
cdef double C5 = 2.938163982698783e+00
cdef double D0 = 7.784695709041462e-03
cdef double D1 = 3.224671290700398e-01
cdef double D2 = 2.445134137142996e+00
cdef double D3 = 3.754408661907416e+00


cdef inline uint64_t _mix(uint64_t z) nogil:
    z ^= z >> 30
    z = z * <uint64_t>0xBF58476D1CE4E5B9
    z ^= z >> 27
    z = z * <uint64_t>0x94D049BB133111EB
    z ^= z >> 31
    return z


cdef inline double _norm_inv_c(double p) nogil:
    cdef double q, r, num, den
    if p < PLOW:
        q = sqrt(-2.0 * log(p))
        num = ((((C0 * q + C1) * q + C2) * q + C3) * q + C4) * q + C5
        den = (((D0 * q + D1) * q + D2) * q + D3) * q + 1.0
        return num / den
    if p > PHIGH:
        q = sqrt(-2.0 * log(1.0 - p))
        num = ((((C0 * q + C1) * q + C2) * q + C3) * q + C4) * q + C5
        den = (((D0 * q + D1) * q + D2) * q + D3) * q + 1.0
        return -(num / den)
    q = p - 0.5
    r = q * q
    num = ((((A0 * r + A1) * r + A2) * r + A3) * r + A4) * r + A5
    den = ((((B0 * r + B1) * r + B2) * r + B3) * r + B4) * r + 1.0
    return num * q / den


def fill_uint64(seed, n):
    """Counter-mode SplitMix64: out[i] = mix(mix(seed) + (i+1)*golden)."""
    cdef uint64_t base = _mix(<uint64_t>(int(seed) & 0xFFFFFFFFFFFFFFFF))
    cdef Py_ssize_t m = n
    out_arr = np.empty(m, dtype=np.uint64)
    cdef uint64_t[::1] out = out_arr
    cdef Py_ssize_t i
    cdef uint64_t golden = <uint64_t>0x9E3779B97F4A7C15
    with nogil:
        for i in range(m):
            out[i] = _mix(base + (<uint64_t>(i + 1)) * golden)
    return out_arr


def fill_uniform(seed, n):
    """Uniforms strictly inside (0,1): ((x >> 11) + 0.5) * 2^-53."""
    cdef uint64_t base = _mix(<uint64_t>(int(seed) & 0xFFFFFFFFFFFFFFFF))
    cdef Py_ssize_t m = n
    out_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    cdef uint64_t golden = <uint64_t>0x9E3779B97F4A7C15
    cdef uint64_t bits
    with nogil:
        for i in range(m):
            bits = _mix(base + (<uint64_t>(i + 1)) * golden) >> 11
            out[i] = (<double>bits + 0.5) * TWO_NEG53
    return out_arr


def norm_inv(p):
    """Scalar inverse normal CDF (same polynomial as the vector path)."""
    return _norm_inv_c(<double>p)


def fill_normals(seed, n):
    cdef uint64_t base = _mix(<uint64_t>(int(seed) & 0xFFFFFFFFFFFFFFFF))
    cdef Py_ssize_t m = n
    out_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    cdef uint64_t golden = <uint64_t>0x9E3779B97F4A7C15
    cdef uint64_t bits
    cdef double u
    with nogil:
        for i in range(m):
            bits = _mix(base + (<uint64_t>(i + 1)) * golden) >> 11
            u = (<double>bits + 0.5) * TWO_NEG53
            out[i] = _norm_inv_c(u)
    return out_arr


def ar1_path(double[::1] innov, double phi, double x0):
    """x[0] = x0; x[t] = phi*x[t-1] + innov[t]. innov[0] is unused."""
    cdef Py_ssize_t n = innov.shape[0]
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double x = x0
    cdef Py_ssize_t t
    out[0] = x
    with nogil:
        for t in range(1, n):
            x = phi * x + innov[t]
            out[t] = x
    return out_arr


def gjr_returns(double[::1] z, double omega, double alpha, double gamma,
                double beta, double h0):
    """r[t] = sqrt(h_t)*z[t]; h_{t+1} = omega + (alpha + gamma*[r_t<0])*r_t^2 + beta*h_t."""
    cdef Py_ssize_t n = z.shape[0]
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double h = h0
    cdef double r, coef
    cdef Py_ssize_t t
    with nogil:
        for t in range(n):
            r = sqrt(h) * z[t]
            out[t] = r
            if r < 0.0:
                coef = alpha + gamma
            else:
                coef = alpha
            h = omega + coef * (r * r) + beta * h
    return out_arr
