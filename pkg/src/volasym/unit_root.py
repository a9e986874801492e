"""Dickey-Fuller tau p-values and critical values.

Backed by the Monte-Carlo-calibrated quantile surface in _unit_root_cv
(generated and anchor-checked by scripts/gen_unit_root_cv.py). Lookup is
linear in 1/T between sample-size rows and linear in tau between ladder
points; p-values are clamped to [0.001, 0.999] and the clamp is reported.
"""

from typing import Dict, Tuple

import numpy as np

from volasym import _unit_root_cv as _cv
from volasym.errors import InvalidSpecError

_PROBS = np.asarray(_cv.PROBS)
_TGRID = np.asarray(_cv.T_GRID, dtype=np.float64)

P_MIN = 0.001
P_MAX = 0.999


def _ladder(nobs: int, deterministic: str) -> np.ndarray:
    """Quantile ladder at effective sample size nobs, interpolated in 1/T."""
    if deterministic not in _cv.TABLE:
        raise InvalidSpecError("deterministic must be 'none' or 'intercept'")
    rows = np.asarray(_cv.TABLE[deterministic])
    t = float(nobs)
    if t <= _TGRID[0]:
        return rows[0]
    if t >= _TGRID[-1]:
        return rows[-1]
    hi = int(np.searchsorted(_TGRID, t))
    lo = hi - 1
    inv_lo, inv_hi = 1.0 / _TGRID[lo], 1.0 / _TGRID[hi]
    w = (1.0 / t - inv_lo) / (inv_hi - inv_lo)
    return rows[lo] * (1.0 - w) + rows[hi] * w


def critical_values(nobs: int, deterministic: str) -> Dict[float, float]:
    """The 1%/5%/10% critical values at this sample size."""
    ladder = _ladder(nobs, deterministic)
    out = {}
    for p in (0.01, 0.05, 0.10):
        idx = int(np.nonzero(np.isclose(_PROBS, p))[0][0])
        out[p] = float(ladder[idx])
    return out


def p_value(tau: float, nobs: int, deterministic: str) -> Tuple[float, bool]:
    """Left-tail p-value of the Dickey-Fuller tau statistic.

    Returns (p, clamped); clamped is True when tau fell outside the tabulated
    ladder and p was pinned to 0.001 or 0.999.
    """
    ladder = _ladder(nobs, deterministic)
    if tau <= ladder[0]:
        return P_MIN, True
    if tau >= ladder[-1]:
        return P_MAX, True
    hi = int(np.searchsorted(ladder, tau))
    lo = hi - 1
    frac = (tau - ladder[lo]) / (ladder[hi] - ladder[lo])
    p = _PROBS[lo] + frac * (_PROBS[hi] - _PROBS[lo])
    return float(p), False
