import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from helpers import normal_equations_oracle, random_design, rel_err
from residreg import (
    DimensionMismatch,
    InsufficientObservations,
    RankDeficient,
    RegressionData,
    SignificanceLevel,
    ZeroVariance,
    fit_ols,
    p_value_two_sided,
    r_squared_of,
)
from residreg.exceptions import DataError


def t_density(x, dof):
    logc = math.lgamma((dof + 1) / 2) - math.lgamma(dof / 2) - 0.5 * math.log(dof * math.pi)
    return math.exp(logc) * (1 + x * x / dof) ** (-(dof + 1) / 2)


def tail_by_quadrature(t, dof):
    return 2 * quad(t_density, abs(t), math.inf, args=(dof,), epsabs=1e-14, epsrel=1e-13)[0]


class TestRegressionData:
    def test_length_mismatch(self):
        with pytest.raises(DimensionMismatch):
            RegressionData([1, 2, 3], {"x": [1, 2]})

    def test_constant_column_rejected_with_intercept(self):
        with pytest.raises(DataError, match="constant"):
            RegressionData([1, 2, 3], {"x": [4, 4, 4]})
        RegressionData([1, 2, 3], {"x": [4, 4, 4]}, include_intercept=False)

    def test_empty_name(self):
        with pytest.raises(DataError):
            RegressionData([1, 2, 3], {"": [1, 2, 3]})

    def test_replace_column_keeps_position(self):
        d = RegressionData([1, 2, 3, 4], {"a": [1, 2, 3, 5], "b": [0, 1, 0, 1]})
        d2 = d.replace_column("a", [1, -1, 1, -2], "a_new")
        assert d2.column_names == ["a_new", "b"]


class TestFitOls:
    def test_exact_line(self):
        fit = fit_ols(RegressionData([1, 2, 3], {"x": [0, 1, 2]}))
        np.testing.assert_allclose(fit.coefficients, [1, 1], atol=1e-14)
        assert fit.r_squared == pytest.approx(1.0)
        np.testing.assert_allclose(fit.residuals, 0, atol=1e-14)

    def test_intercept_only_constant(self):
        fit = fit_ols(RegressionData(np.ones(5), {}))
        assert fit.coefficients[0] == pytest.approx(1.0)
        assert fit.sigma2_hat == pytest.approx(0.0, abs=1e-30)

    def test_seeded_matches_normal_equations(self):
        d = random_design(np.random.default_rng(20), n=20, k=2)
        fit = fit_ols(d)
        beta, se = normal_equations_oracle(d.design(), d.response)
        assert rel_err(fit.coefficients, beta) < 1e-9
        assert rel_err(fit.standard_errors, se) < 1e-9

    def test_insufficient_observations(self):
        with pytest.raises(InsufficientObservations):
            fit_ols(RegressionData([1, 2], {"x": [0, 1]}))

    def test_rank_deficient(self):
        x = np.arange(6.0)
        with pytest.raises(RankDeficient):
            fit_ols(RegressionData(x ** 2, {"a": x, "b": 3 * x + 1}))

    def test_invariants(self):
        d = random_design(np.random.default_rng(3), n=30, k=3)
        fit = fit_ols(d)
        np.testing.assert_allclose(fit.residuals + fit.fitted, d.response, rtol=1e-13)
        X = d.design()
        for col in X.T:
            assert abs(col @ fit.residuals) / (np.linalg.norm(col) * np.linalg.norm(fit.residuals)) < 1e-8
        np.testing.assert_allclose(fit.t_stats, fit.coefficients / fit.standard_errors)
        assert 0 <= fit.r_squared <= 1
        assert np.all((fit.p_values >= 0) & (fit.p_values <= 1))

    def test_no_intercept_uses_uncentered_r2(self):
        x = np.array([1.0, 2, 3, 4])
        y = np.array([1.1, 1.9, 3.2, 3.9])
        d = RegressionData(y, {"x": x}, include_intercept=False)
        fit = fit_ols(d)
        assert fit.coefficient_names == ["x"]
        assert fit.r_squared == pytest.approx(1 - fit.rss / (y @ y))

    def test_projection_idempotence(self):
        d = random_design(np.random.default_rng(9), n=25, k=3)
        fit = fit_ols(d)
        refit = fit_ols(d.with_response(fit.fitted))
        np.testing.assert_allclose(refit.fitted, fit.fitted, rtol=0, atol=1e-10 * np.abs(fit.fitted).max())

    def test_scale_equivariance(self):
        d = random_design(np.random.default_rng(11), n=40, k=3)
        c = -7.5
        scaled = d.replace_column("x3", d.column("x3") * c)
        f, g = fit_ols(d), fit_ols(scaled)
        i = f.index("x3")
        assert g.coefficients[i] == pytest.approx(f.coefficients[i] / c, rel=1e-9)
        assert g.standard_errors[i] == pytest.approx(f.standard_errors[i] / abs(c), rel=1e-9)
        assert g.t_stats[i] == pytest.approx(-f.t_stats[i], rel=1e-9)
        assert g.p_values[i] == pytest.approx(f.p_values[i], rel=1e-9)
        assert g.r_squared == pytest.approx(f.r_squared, rel=1e-9)
        others = [k for k in range(len(f.coefficients)) if k != i]
        np.testing.assert_allclose(g.coefficients[others], f.coefficients[others], rtol=1e-9)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 2**32 - 1))
    def test_oracle_equivalence_property(self, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(10, 51))
        k = int(rng.integers(1, 5))
        d = random_design(rng, n=n, k=k, rho=rng.uniform(-0.95, 0.95))
        fit = fit_ols(d)
        beta, _ = normal_equations_oracle(d.design(), d.response)
        scale = np.maximum(np.abs(beta), fit.standard_errors)
        assert np.all(np.abs(fit.coefficients - beta) <= 1e-8 * scale)


class TestRSquared:
    def test_perfect(self):
        d = RegressionData([1, 3, 5, 7], {"x": [0, 1, 2, 3]})
        assert r_squared_of(fit_ols(d), d) == pytest.approx(1.0)

    def test_orthogonal(self):
        d = RegressionData([1, -1, -1, 1], {"x": [-1, -1, 1, 1]})
        assert r_squared_of(fit_ols(d), d) == pytest.approx(0.0, abs=1e-15)

    def test_seeded_direct(self):
        d = random_design(np.random.default_rng(20), n=20, k=2)
        fit = fit_ols(d)
        beta, _ = normal_equations_oracle(d.design(), d.response)
        e = d.response - d.design() @ beta
        yc = d.response - d.response.mean()
        oracle = 1 - (e @ e) / (yc @ yc)
        assert r_squared_of(fit, d) == pytest.approx(oracle, abs=1e-12)
        assert fit.r_squared == pytest.approx(oracle, abs=1e-12)

    def test_constant_response(self):
        d = RegressionData(np.ones(4), {"x": [0, 1, 2, 4]})
        with pytest.raises(ZeroVariance):
            r_squared_of(fit_ols(d), d)


class TestPValue:
    def test_zero(self):
        assert p_value_two_sided(0.0, 14) == 1.0

    def test_infinite(self):
        assert p_value_two_sided(np.inf, 14) == 0.0
        assert p_value_two_sided(-np.inf, 3) == 0.0

    def test_critical_value(self):
        # quadrature of the t density gives 0.04998015182273618
        assert p_value_two_sided(2.145, 14) == pytest.approx(0.0500, abs=0.0005)
        assert p_value_two_sided(2.145, 14) == pytest.approx(0.04998015182273618, rel=1e-10)

    @pytest.mark.parametrize("t,dof", [(1.0, 1), (3.5, 5), (0.5, 30), (-2.0, 7), (6.0, 60)])
    def test_matches_quadrature(self, t, dof):
        assert p_value_two_sided(t, dof) == pytest.approx(tail_by_quadrature(t, dof), rel=1e-8)

    @given(st.floats(0, 50), st.floats(0, 50), st.integers(1, 200))
    def test_monotone(self, a, b, dof):
        lo, hi = sorted((a, b))
        assert p_value_two_sided(hi, dof) <= p_value_two_sided(lo, dof) + 1e-15

    def test_bad_dof(self):
        with pytest.raises(ValueError):
            p_value_two_sided(1.0, 0)


@pytest.mark.parametrize(
    "p,level,stars",
    [
        (0.009, SignificanceLevel.P99, "***"),
        (0.04, SignificanceLevel.P95, "**"),
        (0.09, SignificanceLevel.P90, "*"),
        (0.2, SignificanceLevel.NONE, ""),
        (0.01, SignificanceLevel.P95, "**"),
        (0.05, SignificanceLevel.P90, "*"),
        (0.10, SignificanceLevel.NONE, ""),
    ],
)
def test_significance_levels(p, level, stars):
    assert SignificanceLevel.from_p_value(p) is level
    assert level.stars == stars


def test_table1_star_anomaly_follows_p_value():
    # t ~ 10.7 sits deep in the 1% region, whatever a printed table shows
    t = 30.9317 / 2.8875
    p = p_value_two_sided(t, 17 - 3)
    assert SignificanceLevel.from_p_value(p) is SignificanceLevel.P99
