"""Shared test utilities: seeded designs and independent oracles."""

import mpmath as mp
import numpy as np

from residreg import RegressionData


def random_design(rng, n=None, k=None, rho=None, noise=None):
    """Seeded design with ``k`` regressors sharing a common factor.

    ``rho`` is the loading on the common factor, so any two regressors have
    population correlation ``rho**2``-ish in magnitude; values near 1 give
    severe collinearity.
    """
    n = int(rng.integers(10, 61)) if n is None else n
    k = int(rng.integers(2, 6)) if k is None else k
    rho = rng.uniform(-0.999, 0.999) if rho is None else rho
    z = rng.standard_normal(n)
    cols = {}
    for j in range(k):
        x = rho * z + np.sqrt(1 - rho ** 2) * rng.standard_normal(n)
        cols[f"x{j + 2}"] = x * rng.uniform(0.1, 10) + rng.uniform(-5, 5)
    b = rng.uniform(-3, 3, k + 1)
    sd = rng.uniform(0.1, 2) if noise is None else noise
    y = b[0] + sum(b[j + 1] * c for j, c in enumerate(cols.values()))
    y = y + rng.standard_normal(n) * sd
    return RegressionData(y, cols)


def normal_equations_oracle(X, y, dps=50):
    """Coefficients and standard errors from (X'X)^-1 X'y at ``dps`` digits."""
    with mp.workdps(dps):
        Xm = mp.matrix(X.tolist())
        ym = mp.matrix(y.tolist())
        XtX_inv = (Xm.T * Xm) ** -1
        beta = XtX_inv * (Xm.T * ym)
        resid = ym - Xm * beta
        n, p = X.shape
        s2 = sum(r ** 2 for r in resid) / (n - p)
        se = [mp.sqrt(s2 * XtX_inv[i, i]) for i in range(p)]
        return (np.array([float(b) for b in beta]), np.array([float(s) for s in se]))


def rel_err(a, b):
    """Elementwise relative error of ``a`` against reference ``b``, maximized."""
    a = np.atleast_1d(np.asarray(a, dtype=float))
    b = np.atleast_1d(np.asarray(b, dtype=float))
    return float(np.max(np.abs(a - b) / np.abs(b)))


def vec_rel_err(a, b):
    """Norm-wise relative error, for vectors whose entries may sit near zero."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return float(np.linalg.norm(a - b) / max(np.linalg.norm(b), np.finfo(float).tiny))


def cosine(u, v):
    return abs(float(u @ v)) / (np.linalg.norm(u) * np.linalg.norm(v))
