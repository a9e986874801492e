"""Pure-Python/numpy implementation of the hot numeric kernels.

Mirrors volasym._kernels (the compiled extension) exactly: same counter-mode
SplitMix64 stream, same inverse-CDF normal transform, same recursions, same
IEEE operation order, so both backends produce bit-identical output. Tail
logarithms go through math.log (libm) rather than np.log on purpose: numpy's
vectorized log may round differently by 1 ulp.
"""

import math

import numpy as np

BACKEND = "python"

_MASK = 0xFFFFFFFFFFFFFFFF
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_TWO_NEG53 = 1.0 / 9007199254740992.0

# inverse normal CDF rational approximation (Acklam), |relative error| < 1.15e-9
_A = (-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
      1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00)
_B = (-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
      6.680131188771972e+01, -1.328068155288572e+01)
_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
      -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00)
_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
      3.754408661907416e+00)
_PLOW = 0.02425
_PHIGH = 1.0 - _PLOW


def _mix_scalar(z: int) -> int:
    z &= _MASK
    z ^= z >> 30
    z = (z * _MIX1) & _MASK
    z ^= z >> 27
    z = (z * _MIX2) & _MASK
    z ^= z >> 31
    return z


def fill_uint64(seed: int, n: int) -> np.ndarray:
    """Counter-mode SplitMix64: out[i] = mix(mix(seed) + (i+1)*golden)."""
    base = _mix_scalar(int(seed) & _MASK)
    idx = np.arange(1, n + 1, dtype=np.uint64)
    z = np.uint64(base) + idx * np.uint64(_GOLDEN)
    z = z ^ (z >> np.uint64(30))
    z = z * np.uint64(_MIX1)
    z = z ^ (z >> np.uint64(27))
    z = z * np.uint64(_MIX2)
    z = z ^ (z >> np.uint64(31))
    return z


def fill_uniform(seed: int, n: int) -> np.ndarray:
    """Uniforms strictly inside (0,1): ((x >> 11) + 0.5) * 2^-53."""
    bits = fill_uint64(seed, n) >> np.uint64(11)
    return (bits.astype(np.float64) + 0.5) * _TWO_NEG53


def _norm_inv_central(p: np.ndarray) -> np.ndarray:
    q = p - 0.5
    r = q * q
    num = ((((_A[0] * r + _A[1]) * r + _A[2]) * r + _A[3]) * r + _A[4]) * r + _A[5]
    den = ((((_B[0] * r + _B[1]) * r + _B[2]) * r + _B[3]) * r + _B[4]) * r + 1.0
    return num * q / den


def _norm_inv_tail_scalar(p: float) -> float:
    if p < _PLOW:
        q = math.sqrt(-2.0 * math.log(p))
        sign = 1.0
    else:
        q = math.sqrt(-2.0 * math.log(1.0 - p))
        sign = -1.0
    num = ((((_C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5]
    den = (((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0
    return sign * num / den


def norm_inv(p: float) -> float:
    """Scalar inverse normal CDF (same polynomial as the vector path)."""
    if _PLOW <= p <= _PHIGH:
        q = p - 0.5
        r = q * q
        num = ((((_A[0] * r + _A[1]) * r + _A[2]) * r + _A[3]) * r + _A[4]) * r + _A[5]
        den = ((((_B[0] * r + _B[1]) * r + _B[2]) * r + _B[3]) * r + _B[4]) * r + 1.0
        return num * q / den
    return _norm_inv_tail_scalar(p)


def fill_normals(seed: int, n: int) -> np.ndarray:
    u = fill_uniform(seed, n)
    out = np.empty(n, dtype=np.float64)
    central = (u >= _PLOW) & (u <= _PHIGH)
    out[central] = _norm_inv_central(u[central])
    tail_idx = np.nonzero(~central)[0]
    for i in tail_idx:
        out[i] = _norm_inv_tail_scalar(float(u[i]))
    return out


def ar1_path(innov: np.ndarray, phi: float, x0: float) -> np.ndarray:
    """x[0] = x0; x[t] = phi*x[t-1] + innov[t]. innov[0] is unused."""
    n = len(innov)
    out = np.empty(n, dtype=np.float64)
    x = float(x0)
    out[0] = x
    iv = innov
    for t in range(1, n):
        x = phi * x + float(iv[t])
        out[t] = x
    return out


def gjr_returns(z: np.ndarray, omega: float, alpha: float, gamma: float,
                beta: float, h0: float) -> np.ndarray:
    """r[t] = sqrt(h_t)*z[t]; h_{t+1} = omega + (alpha + gamma*[r_t<0])*r_t^2 + beta*h_t."""
    n = len(z)
    out = np.empty(n, dtype=np.float64)
    h = float(h0)
    for t in range(n):
        r = math.sqrt(h) * float(z[t])
        out[t] = r
        coef = alpha + gamma if r < 0.0 else alpha
        h = omega + coef * (r * r) + beta * h
    return out
