"""
Nelson-Siegel loadings at a small decay
=======================================

With the decay fixed at 0.01 per month on a 3- to 120-month grid, the
short- and medium-term loadings are almost perfectly (negatively)
correlated. Synthetic yields show the typical symptoms in plain OLS and
what residualizing the medium-term loading changes.

Real yields can be fed in through the command line instead:

    residreg --mode ns-demo --input yields.csv
"""

# %%
import numpy as np

from residreg import correlation, fit_ols, ns_design, ns_loadings, residualize, synthetic_yields, vif
from residreg.nelson_siegel import DIEBOLD_LI_LAMBDA, TREASURY_MATURITIES

for lam in (0.01, DIEBOLD_LI_LAMBDA):
    load = ns_loadings(TREASURY_MATURITIES, lam)
    print(f"lambda={lam}: corr(short, medium) = {correlation(load.short_term, load.medium_term):.4f}")

# %%
beta = (8.0, -1.5, 15.0)
yields = synthetic_yields(TREASURY_MATURITIES, 0.01, beta, noise_sd=0.1, seed=7)
data = ns_design(TREASURY_MATURITIES, 0.01, yields)
print("VIF", round(vif(data, "short_term")[1], 2))

fit = fit_ols(data)
model = residualize(data, "medium_term")
print("true      ", np.array(beta))
print("OLS       ", fit.coefficients.round(4), "se", fit.standard_errors.round(4))
print("residual. ", model.fit.coefficients.round(4), "se", model.fit.standard_errors.round(4))
print("R^2", round(fit.r_squared, 6), round(model.fit.r_squared, 6))
