"""Static Nelson-Siegel factor loadings and designs.

Maturities are in months and ``lam`` is the per-month decay. The level
factor's loading is constant, so in a regression it is carried by the
intercept and only the short- and medium-term loadings become columns.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import DimensionMismatch, NonPositiveInput
from .linreg import RegressionData

TREASURY_MATURITIES = np.array(
    [3, 6, 9, 12, 15, 18, 21, 24, 30, 36, 48, 60, 72, 84, 96, 108, 120], dtype=float
)
DIEBOLD_LI_LAMBDA = 0.0609

SHORT = "short_term"
MEDIUM = "medium_term"

# below this lam*tau the loadings are taken from their Taylor series
SERIES_THRESHOLD = 1e-4


@dataclass(frozen=True)
class NsLoadingSet:
    maturities: np.ndarray
    lam: float
    long_term: np.ndarray
    short_term: np.ndarray
    medium_term: np.ndarray

    @property
    def matrix(self) -> np.ndarray:
        """Loadings as an ``(n, 3)`` array ordered long, short, medium."""
        return np.column_stack([self.long_term, self.short_term, self.medium_term])


def _check_inputs(maturities, lam):
    tau = np.atleast_1d(np.asarray(maturities, dtype=float))
    if tau.ndim != 1 or tau.size == 0:
        raise DimensionMismatch("maturities must be a non-empty 1-d vector")
    if not np.all(tau > 0):
        raise NonPositiveInput("maturities must be strictly positive")
    if not (np.isfinite(lam) and lam > 0):
        raise NonPositiveInput(f"lambda must be positive, got {lam!r}")
    return tau, float(lam)


def short_loading(x):
    """``(1 - exp(-x)) / x`` evaluated at ``x = lam * tau``."""
    x = np.asarray(x, dtype=float)
    small = x < SERIES_THRESHOLD
    xs = np.where(small, 1.0, x)
    direct = -np.expm1(-xs) / xs
    series = 1.0 - x / 2.0 + x * x / 6.0 - x ** 3 / 24.0
    return np.where(small, series, direct)


def medium_loading(x):
    """``(1 - exp(-x)) / x - exp(-x)`` evaluated at ``x = lam * tau``."""
    x = np.asarray(x, dtype=float)
    small = x < SERIES_THRESHOLD
    direct = short_loading(x) - np.exp(-x)
    series = x / 2.0 - x * x / 3.0 + x ** 3 / 8.0
    return np.where(small, series, direct)


def ns_loadings(maturities, lam: float) -> NsLoadingSet:
    tau, lam = _check_inputs(maturities, lam)
    x = lam * tau
    return NsLoadingSet(
        maturities=tau,
        lam=lam,
        long_term=np.ones_like(tau),
        short_term=short_loading(x),
        medium_term=medium_loading(x),
    )


def ns_curve(maturities, lam: float, beta) -> np.ndarray:
    """Yields implied by level, short and medium factors ``beta``."""
    beta = np.asarray(beta, dtype=float)
    if beta.shape != (3,):
        raise DimensionMismatch("beta must have exactly three entries")
    return ns_loadings(maturities, lam).matrix @ beta


def ns_design(maturities, lam: float, yields) -> RegressionData:
    load = ns_loadings(maturities, lam)
    y = np.asarray(yields, dtype=float)
    if y.shape != load.maturities.shape:
        raise DimensionMismatch(
            f"{y.size} yields supplied for {load.maturities.size} maturities"
        )
    return RegressionData(
        y, {SHORT: load.short_term, MEDIUM: load.medium_term}, include_intercept=True
    )


def synthetic_yields(maturities, lam: float, beta, noise_sd: float = 0.0,
                     seed: int = 0) -> np.ndarray:
    """Noise-perturbed Nelson-Siegel yields.

    Noise is drawn from a Philox counter-based generator keyed by ``seed``,
    so a given seed gives identical output on every platform.
    """
    if noise_sd < 0:
        raise NonPositiveInput("noise_sd must be non-negative")
    y = ns_curve(maturities, lam, beta)
    if noise_sd == 0:
        return y
    rng = np.random.Generator(np.random.Philox(seed))
    return y + rng.normal(0.0, noise_sd, size=y.shape)
