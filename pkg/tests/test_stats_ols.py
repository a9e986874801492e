"""OLS against an independent normal-equations oracle and the exact-fit,
equivariance, and orthogonality properties."""

import numpy as np
import pytest

from helpers import ols_normal_equations, reference_normals
from volasym.errors import InsufficientDataError, RankDeficiencyError
from volasym.stats import ols


def test_exact_line_through_origin_with_intercept():
    x = np.arange(1.0, 11.0)
    fit = ols(2.0 * x, x, intercept=True)
    assert fit.coef == pytest.approx([0.0, 2.0], abs=1e-12)
    assert fit.r2 == 1.0
    assert np.all(np.abs(fit.residuals) < 1e-12)


def test_constant_target_loads_on_intercept():
    rng = np.random.default_rng(5)
    X = rng.standard_normal((30, 2))
    fit = ols(np.full(30, 3.25), X, intercept=True)
    assert fit.coef[0] == pytest.approx(3.25, abs=1e-10)
    assert fit.coef[1:] == pytest.approx([0.0, 0.0], abs=1e-10)


def test_random_system_matches_normal_equations():
    rng = np.random.default_rng(17)
    X = rng.standard_normal((50, 3))
    y = rng.standard_normal(50)
    fit = ols(y, X, intercept=True)
    Xi = np.column_stack([np.ones(50), X])
    coef_ref, se_ref, resid_ref = ols_normal_equations(y, Xi)
    assert fit.coef == pytest.approx(coef_ref, rel=1e-10)
    assert fit.se == pytest.approx(se_ref, rel=1e-9)
    assert fit.residuals == pytest.approx(resid_ref, abs=1e-10)


def test_inference_fields_consistent():
    rng = np.random.default_rng(23)
    X = rng.standard_normal((40, 2))
    y = X @ np.array([1.0, -2.0]) + rng.standard_normal(40)
    fit = ols(y, X, intercept=True)
    for i in range(fit.k):
        assert fit.t_stat[i] == pytest.approx(fit.coef[i] / fit.se[i],
                                              rel=1e-12)
        assert 0.0 <= fit.p_value[i] <= 1.0
    assert fit.n == 40 and fit.k == 3


def test_fitted_plus_residuals_reproduce_target():
    rng = np.random.default_rng(31)
    X = rng.standard_normal((25, 3))
    y = rng.standard_normal(25) * 7.0
    fit = ols(y, X, intercept=True)
    fitted = y - fit.residuals
    Xi = np.column_stack([np.ones(25), X])
    assert fitted == pytest.approx(Xi @ fit.coef, rel=1e-10)


def test_residuals_orthogonal_to_design():
    rng = np.random.default_rng(37)
    X = rng.standard_normal((60, 4)) * 5.0
    y = rng.standard_normal(60) * 3.0
    fit = ols(y, X, intercept=True)
    Xi = np.column_stack([np.ones(60), X])
    scale = np.abs(Xi).max() * np.abs(y).max()
    assert np.abs(Xi.T @ fit.residuals).max() < 1e-8 * scale


def test_scaling_y_scales_coef_but_not_t_stats():
    rng = np.random.default_rng(41)
    X = rng.standard_normal((35, 2))
    y = X @ np.array([0.5, 1.5]) + rng.standard_normal(35)
    base = ols(y, X, intercept=True)
    scaled = ols(100.0 * y, X, intercept=True)
    assert scaled.coef == pytest.approx(100.0 * base.coef, rel=1e-10)
    assert scaled.se == pytest.approx(100.0 * base.se, rel=1e-10)
    assert scaled.t_stat == pytest.approx(base.t_stat, rel=1e-10)
    assert scaled.p_value == pytest.approx(base.p_value, rel=1e-9)


def test_extra_column_never_raises_ess():
    rng = np.random.default_rng(43)
    X = rng.standard_normal((50, 2))
    y = rng.standard_normal(50)
    extra = rng.standard_normal(50)
    ess_small = float(ols(y, X, intercept=True).residuals @
                      ols(y, X, intercept=True).residuals)
    big = ols(y, np.column_stack([X, extra]), intercept=True)
    ess_big = float(big.residuals @ big.residuals)
    assert ess_big <= ess_small + 1e-10


def test_r2_in_unit_interval_with_intercept():
    rng = np.random.default_rng(47)
    for trial in range(20):
        X = rng.standard_normal((30, 3))
        y = rng.standard_normal(30)
        fit = ols(y, X, intercept=True)
        assert 0.0 <= fit.r2 <= 1.0


def test_no_intercept_slope():
    x = np.array([1.0, 2.0, 3.0, 4.0])
    fit = ols(2.5 * x, x, intercept=False)
    assert fit.coef == pytest.approx([2.5], abs=1e-12)
    assert fit.k == 1


def test_aic_bic_formulas():
    rng = np.random.default_rng(53)
    X = rng.standard_normal((40, 2))
    y = rng.standard_normal(40)
    fit = ols(y, X, intercept=True)
    ess = float(fit.residuals @ fit.residuals)
    assert fit.aic == pytest.approx(40 * np.log(ess / 40) + 2 * 3, rel=1e-12)
    assert fit.bic == pytest.approx(40 * np.log(ess / 40) + 3 * np.log(40),
                                    rel=1e-12)


def test_exact_fit_reports_negative_infinite_criteria():
    # a zero target is the one fit that is exact in floating point; anything
    # else leaves rounding-level residuals and finite criteria
    x = np.arange(1.0, 31.0)
    fit = ols(np.zeros(30), x, intercept=False)
    assert float(fit.residuals @ fit.residuals) == 0.0
    assert fit.aic == float("-inf") and fit.bic == float("-inf")
    assert fit.r2 == 1.0


def test_duplicate_column_raises_rank_deficiency():
    x = reference_normals(3, 30)
    with pytest.raises(RankDeficiencyError):
        ols(reference_normals(4, 30), np.column_stack([x, x]), intercept=True)


def test_too_few_rows_raises():
    with pytest.raises(InsufficientDataError):
        ols(np.ones(3), np.eye(3), intercept=True)


def test_zero_target_gives_nan_inference():
    # exact fit -> s^2 = 0 -> se = 0, and t/p are reported as NaN rather
    # than a division blowup
    x = np.arange(1.0, 21.0)
    fit = ols(np.zeros(20), x, intercept=True)
    assert (fit.se == 0.0).all()
    assert np.isnan(fit.t_stat).all()
    assert np.isnan(fit.p_value).all()


def test_column_names_round_trip():
    x = np.arange(1.0, 11.0)
    fit = ols(2.0 * x + 1.0, x, intercept=True,
              column_names=("Intercept", "x"))
    named = fit.named()
    assert named["x"] == pytest.approx(2.0, abs=1e-10)
    assert named["Intercept"] == pytest.approx(1.0, abs=1e-10)
