"""
OLS fits and collinearity diagnostics
=====================================

Two regressors that share a common driver: the fit is fine, but the
variance inflation factors show how much the slope variances are inflated.
"""

# %%
import numpy as np

from residreg import RegressionData, correlation, fit_ols, marginal_effects, vif_report

rng = np.random.default_rng(0)
n = 60
x3 = rng.standard_normal(n)
x2 = 0.9 * x3 + 0.3 * rng.standard_normal(n)
y = 1.0 + 2.0 * x2 - 1.0 * x3 + rng.standard_normal(n)
data = RegressionData(y, {"x2": x2, "x3": x3})

# %% the fit
fit = fit_ols(data)
for name, b, se, p in zip(fit.coefficient_names, fit.coefficients, fit.standard_errors, fit.p_values):
    print(f"{name:10s} {b: .4f} ({se:.4f})  p={p:.3g}")
print("R^2", round(fit.r_squared, 4))

# %% diagnostics: with two regressors both VIFs equal 1/(1 - r^2)
r = correlation(x2, x3)
print("corr", round(r, 4), "1/(1-r^2) =", round(1 / (1 - r * r), 3))
for e in vif_report(data).entries:
    print(e.column, round(e.vif, 3), "above 10:", e.above_10, "above 4:", e.above_4)

# %% the coefficient of x3 is not its total effect once x2 moves with it
me = marginal_effects(fit, data, "x3")
print("ceteris paribus", round(me.ceteris_paribus_effect, 4))
print("cross slopes", me.cross_slopes)
print("total effect", round(me.total_effect, 4))
