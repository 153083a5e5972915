"""
Frisch-Waugh-Lovell and residualization
=======================================

Both routes give the same slope for the target regressor. They differ in
what the rest of the model means, and the double-residual regression also
reports a different standard error because it counts degrees of freedom as
a two-parameter regression.
"""

# %%
import numpy as np

from residreg import RegressionData, fwl_coefficient, residualize

rng = np.random.default_rng(2)
n = 40
z = rng.standard_normal(n)
cols = {f"x{j}": 0.95 * z + 0.3 * rng.standard_normal(n) for j in (2, 3, 4)}
y = 1 + cols["x2"] - 2 * cols["x3"] + 0.5 * cols["x4"] + rng.standard_normal(n)
data = RegressionData(y, cols)

res = fwl_coefficient(data, "x2")
model = residualize(data, "x2")
print("direct beta   ", res.direct_coefficient, "se", res.direct_se, "dof", res.direct_fit.dof)
print("residualized  ", model.fit.coef("x2_resid"), "se", model.fit.se("x2_resid"))
print("FWL gamma     ", res.gamma_hat, "se", res.gamma_se, "dof", res.gamma_fit.dof)
print("FWL intercept ", res.gamma_intercept)
