"""Shared test utilities: direct grid construction from arrays (bypassing
CSV ingestion) and an independent reference RNG for oracle checks."""

import math
from datetime import date, timedelta

import numpy as np

from volasym.volatility import HorizonSpec, VolGrid, VolObservation

FIXDIR = "tests/fixtures"


def make_grid(iv, rv, r_prev=None, r_cur=None, r_last_day=None,
              window=22, annualization_days=365) -> VolGrid:
    """VolGrid straight from per-cell arrays; unspecified shock columns
    default to zero. r_cur defaults to r_prev shifted one cell left so the
    grid-consistency invariant holds."""
    n = len(iv)
    iv = np.asarray(iv, dtype=np.float64)
    rv = np.asarray(rv, dtype=np.float64)
    if r_prev is None:
        r_prev = np.zeros(n)
    r_prev = np.asarray(r_prev, dtype=np.float64)
    if r_cur is None:
        r_cur = np.append(r_prev[1:], 0.0)
    r_cur = np.asarray(r_cur, dtype=np.float64)
    if r_last_day is None:
        r_last_day = np.zeros(n)
    r_last_day = np.asarray(r_last_day, dtype=np.float64)
    horizon = HorizonSpec(window=window, annualization_days=annualization_days)
    base = date(2000, 1, 3)
    rows = tuple(
        VolObservation(t_index=(k + 1) * window,
                       t_date=base + timedelta(days=(k + 1) * window),
                       iv=float(iv[k]), rv=float(rv[k]),
                       r_prev=float(r_prev[k]), r_cur=float(r_cur[k]),
                       r_last_day=float(r_last_day[k]))
        for k in range(n))
    return VolGrid(horizon=horizon, rows=rows)


def reference_normals(seed: int, n: int) -> np.ndarray:
    """Gaussian draws from numpy's own generator, independent of the
    package's RNG, for tests that only need any fixed random data."""
    return np.random.default_rng(seed).standard_normal(n)


def splitmix_reference(seed: int, n: int):
    """Independent pure-int reimplementation of the counter-mode stream."""
    mask = (1 << 64) - 1

    def mix(z):
        z &= mask
        z ^= z >> 30
        z = (z * 0xBF58476D1CE4E5B9) & mask
        z ^= z >> 27
        z = (z * 0x94D049BB133111EB) & mask
        z ^= z >> 31
        return z

    base = mix(seed & mask)
    return [mix((base + (i + 1) * 0x9E3779B97F4A7C15) & mask)
            for i in range(n)]


def ols_normal_equations(y, X):
    """Brute-force reference fit: solve the normal equations directly and
    derive classical standard errors, independent of the package's QR path."""
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    xtx = X.T @ X
    coef = np.linalg.solve(xtx, X.T @ y)
    resid = y - X @ coef
    n, k = X.shape
    s2 = float(resid @ resid) / (n - k)
    se = np.sqrt(np.diag(s2 * np.linalg.inv(xtx)))
    return coef, se, resid
