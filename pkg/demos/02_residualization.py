"""
Residualizing a collinear regressor
===================================

Replace x2 by the part of it that x3 does not explain. The model is an exact
reparametrization of the original one: same fit, same coefficient and
standard error for the residualized column, but x3 now carries the whole of
its shared variation.
"""

# %%
import numpy as np

from residreg import RegressionData, fit_ols, recover_original, residualize, vif

rng = np.random.default_rng(1)
n = 50
x3 = rng.standard_normal(n) * 2 + 5
x2 = 0.8 * x3 + 0.4 * rng.standard_normal(n)
y = 3.0 + 1.5 * x2 + 0.5 * x3 + rng.standard_normal(n)
data = RegressionData(y, {"x2": x2, "x3": x3})

model = residualize(data, "x2")
aux = model.auxiliary
print("auxiliary: x2 = %.4f + %.4f x3 + e" % tuple(aux.alpha_hat))

# %% side by side
beta, delta = model.original_fit, model.fit
for i, (a, b) in enumerate(zip(beta.coefficient_names, delta.coefficient_names)):
    print(f"{a:8s} {beta.coefficients[i]: .4f} ({beta.standard_errors[i]:.4f})   "
          f"{b:8s} {delta.coefficients[i]: .4f} ({delta.standard_errors[i]:.4f})")
print("R^2", beta.r_squared, delta.r_squared)

# %% coefficient identities and recovery
b1, b2, b3 = beta.coefficients
a1, a2 = aux.alpha_hat
print("delta_1 = b1 + b2*a1:", np.isclose(delta.coefficients[0], b1 + b2 * a1))
print("delta_3 = b3 + b2*a2:", np.isclose(delta.coefficients[2], b3 + b2 * a2))
print("recovered:", recover_original(model), "direct:", fit_ols(data).coefficients)

# %% collinearity is gone for the residualized column
print("VIF before", vif(data, "x2")[1], "after", vif(model.transformed_data, "x2_resid")[1])
