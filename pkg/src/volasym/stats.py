"""Core statistical kernels: OLS with full inference, one-sample t-test,
Box-Pierce autocorrelation test, augmented Dickey-Fuller unit-root test, and
the order-statistic quantile.

Conventions fixed across the package:
- p-values are two-sided from Student-t with n-k degrees of freedom
- AIC = n*ln(e'e/n) + 2k, BIC = n*ln(e'e/n) + k*ln(n) (concentrated Gaussian
  form, constants dropped identically so model comparisons stay valid)
- autocorrelations divide by n (the convention under which the Box-Pierce
  chi-square null is standard)
"""

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from volasym import distributions as dist
from volasym import unit_root
from volasym.errors import (
    DegenerateInputError,
    InsufficientDataError,
    InvalidSpecError,
    RankDeficiencyError,
    SeriesTooShortError,
)


@dataclass(frozen=True)
class RegressionResult:
    coef: np.ndarray
    se: np.ndarray
    t_stat: np.ndarray
    p_value: np.ndarray
    residuals: np.ndarray
    n: int
    k: int
    r2: float
    aic: float
    bic: float
    column_names: tuple = ()

    def named(self) -> Mapping[str, float]:
        return dict(zip(self.column_names, self.coef.tolist()))


@dataclass(frozen=True)
class TestResult:
    name: str
    statistic: float
    p_value: float
    detail: Mapping = field(default_factory=dict)


def _as_vector(x) -> np.ndarray:
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim != 1:
        raise InvalidSpecError("expected a 1-d vector")
    return arr


def ols(y, X, intercept: bool = True, column_names: tuple = ()) -> RegressionResult:
    """Least squares with classical inference.

    X carries the slope regressors only; intercept=True prepends a ones
    column. Coefficients are ordered [intercept?, X columns...];
    column_names, when given, must already include the intercept's name.
    """
    y = _as_vector(y)
    X = np.asarray(X, dtype=np.float64)
    if X.ndim == 1:
        X = X[:, None]
    if X.shape[0] != y.shape[0]:
        raise InvalidSpecError("y and X row counts differ")
    if intercept:
        X = np.column_stack([np.ones(X.shape[0]), X])
    n, k = X.shape
    if n <= k:
        raise InsufficientDataError(
            f"need more than {k} observations for {k} regressors, got {n}")

    q, r = np.linalg.qr(X)
    diag = np.abs(np.diag(r))
    if diag.min() <= max(n, k) * np.finfo(np.float64).eps * diag.max() or diag.min() == 0.0:
        raise RankDeficiencyError("design matrix is rank deficient")
    coef = np.linalg.solve(r, q.T @ y)
    resid = y - X @ coef
    ess = float(resid @ resid)
    dof = n - k
    s2 = ess / dof
    rinv = np.linalg.inv(r)
    xtx_inv_diag = (rinv * rinv).sum(axis=1)
    se = np.sqrt(s2 * xtx_inv_diag)

    t_stat = np.full(k, np.nan)
    p_value = np.full(k, np.nan)
    nonzero = se > 0.0
    t_stat[nonzero] = coef[nonzero] / se[nonzero]
    for i in np.nonzero(nonzero)[0]:
        p_value[i] = dist.student_t_two_sided_p(float(t_stat[i]), dof)

    if intercept:
        centered = y - y.mean()
        ss_tot = float(centered @ centered)
    else:
        ss_tot = float(y @ y)
    r2 = 1.0 - ess / ss_tot if ss_tot > 0.0 else (1.0 if ess == 0.0 else 0.0)
    r2 = min(1.0, max(0.0, r2))
    if ess > 0.0:
        aic = n * math.log(ess / n) + 2.0 * k
        bic = n * math.log(ess / n) + k * math.log(n)
    else:
        aic = float("-inf")
        bic = float("-inf")
    if column_names and len(column_names) != k:
        raise InvalidSpecError(
            f"got {len(column_names)} column names for {k} coefficients")
    return RegressionResult(coef=coef, se=se, t_stat=t_stat, p_value=p_value,
                            residuals=resid, n=n, k=k, r2=r2, aic=aic, bic=bic,
                            column_names=tuple(column_names))


def t_test_zero_mean(x) -> TestResult:
    """One-sample Student-t test that the mean is zero."""
    x = _as_vector(x)
    n = len(x)
    if n < 2:
        raise SeriesTooShortError("t-test needs at least 2 observations")
    mean = float(x.mean())
    sd = float(x.std(ddof=1))
    if sd == 0.0:
        raise DegenerateInputError("t-test input has zero sample variance")
    stat = mean / (sd / math.sqrt(n))
    p = dist.student_t_two_sided_p(stat, n - 1)
    return TestResult(name="t_test_zero_mean", statistic=stat, p_value=p,
                      detail={"n": n, "mean": mean, "sd": sd})


def autocorrelations(x, lags: int) -> np.ndarray:
    """Sample autocorrelations 1..lags with the divide-by-n covariance."""
    x = _as_vector(x)
    n = len(x)
    xc = x - x.mean()
    denom = float(xc @ xc)
    if denom == 0.0:
        raise DegenerateInputError("series has zero variance")
    return np.array([float(xc[k:] @ xc[:-k]) / denom for k in range(1, lags + 1)])


def box_pierce(x, lags: int = 1) -> TestResult:
    """Portmanteau test Q = n * sum of squared autocorrelations up to `lags`."""
    x = _as_vector(x)
    n = len(x)
    if lags < 1:
        raise InvalidSpecError("box_pierce requires lags >= 1")
    if n <= lags + 1:
        raise SeriesTooShortError(
            f"box_pierce needs more than {lags + 1} observations, got {n}")
    rho = autocorrelations(x, lags)
    q = float(n * (rho @ rho))
    p = dist.chi2_sf(q, lags)
    return TestResult(name="box_pierce", statistic=q, p_value=p,
                      detail={"lags": lags, "n": n,
                              "autocorrelations": tuple(rho.tolist())})


def adf(x, lag_order: int = 0, deterministic: str = "intercept") -> TestResult:
    """Augmented Dickey-Fuller test.

    Regresses dx_t on x_{t-1}, lagged differences dx_{t-1}..dx_{t-p}, and an
    intercept when deterministic="intercept". The statistic is the t-ratio on
    the level coefficient; its p-value comes from the Monte-Carlo-calibrated
    critical-value surface in volasym.unit_root (interpolated, clamped to
    [0.001, 0.999] with the clamp flagged in detail).
    """
    x = _as_vector(x)
    if deterministic not in ("none", "intercept"):
        raise InvalidSpecError("deterministic must be 'none' or 'intercept'")
    if lag_order < 0:
        raise InvalidSpecError("lag_order must be >= 0")
    need = lag_order + 2 + (1 if deterministic == "intercept" else 0)
    if len(x) <= need:
        raise SeriesTooShortError(
            f"adf with lag {lag_order} needs more than {need} observations")
    if x.max() == x.min():
        raise DegenerateInputError("adf input is constant")
    dx = np.diff(x)
    rows = len(dx) - lag_order
    y = dx[lag_order:]
    cols = [x[lag_order:-1]]
    for i in range(1, lag_order + 1):
        cols.append(dx[lag_order - i:len(dx) - i])
    X = np.column_stack(cols)
    res = ols(y, X, intercept=(deterministic == "intercept"))
    gamma_idx = 1 if deterministic == "intercept" else 0
    tau = float(res.t_stat[gamma_idx])
    if math.isnan(tau):
        raise DegenerateInputError("adf regression produced an exact fit")
    p, clamped = unit_root.p_value(tau, rows, deterministic)
    crit = unit_root.critical_values(rows, deterministic)
    return TestResult(name="adf", statistic=tau, p_value=p,
                      detail={"lags": lag_order, "deterministic": deterministic,
                              "nobs": rows, "crit_1pct": crit[0.01],
                              "crit_5pct": crit[0.05], "crit_10pct": crit[0.10],
                              "clamped": clamped})


def quantile(x, q: float) -> float:
    """Linear-interpolation order-statistic quantile (the common type-7 rule)."""
    x = _as_vector(x)
    if len(x) == 0:
        raise InsufficientDataError("quantile of empty vector")
    if not 0.0 < q < 1.0:
        raise InvalidSpecError("q must be in (0, 1)")
    xs = np.sort(x)
    h = (len(xs) - 1) * q
    lo = int(math.floor(h))
    frac = h - lo
    if lo + 1 >= len(xs):
        return float(xs[-1])
    return float(xs[lo] + frac * (xs[lo + 1] - xs[lo]))
