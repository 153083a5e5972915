"""Near-multicollinearity diagnostics.

Variance inflation factors from auxiliary regressions, Pearson correlations,
and the total marginal effect of a regressor once its co-movement with the
other regressors is accounted for.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import ColumnNotFound, PerfectCollinearity, ResidRegError, ZeroVariance
from .linreg import INTERCEPT, OlsFit, RegressionData, fit_ols

VIF_THRESHOLDS = (10.0, 4.0)


@dataclass(frozen=True)
class VifEntry:
    column: str
    r2_aux: float
    vif: float

    @property
    def above_10(self) -> bool:
        return self.vif > 10.0

    @property
    def above_4(self) -> bool:
        return self.vif > 4.0


@dataclass(frozen=True)
class VifReport:
    entries: list[VifEntry]

    @property
    def threshold_flags(self) -> list[tuple[bool, bool]]:
        return [(e.above_10, e.above_4) for e in self.entries]

    def __getitem__(self, column: str) -> VifEntry:
        for e in self.entries:
            if e.column == column:
                return e
        raise ColumnNotFound(f"no VIF entry for {column!r}")


@dataclass(frozen=True)
class MarginalEffectReport:
    target_column: str
    ceteris_paribus_effect: float
    cross_slopes: list[tuple[str, float]]
    total_effect: float


def _check_regressor(data, column):
    if column == INTERCEPT:
        raise ColumnNotFound("the intercept has no VIF or marginal effect")
    return data.column(column)


def vif(data: RegressionData, column: str) -> tuple[float, float]:
    """Auxiliary R-squared and variance inflation factor of ``column``.

    The column is regressed on every other regressor plus an intercept and
    ``vif = 1 / (1 - r2_aux)``.
    """
    target = _check_regressor(data, column)
    others = {k: v for k, v in data.columns.items() if k != column}
    aux = fit_ols(RegressionData(target, others, include_intercept=True))
    r2 = aux.r_squared
    if r2 >= 1.0 - 1e-12:
        raise PerfectCollinearity(
            f"column {column!r} is an exact linear combination of the others"
        )
    return r2, 1.0 / (1.0 - r2)


def vif_report(data: RegressionData) -> VifReport:
    if len(data.columns) < 2:
        raise ValueError("a VIF report needs at least two regressors")
    entries = []
    for name in data.columns:
        try:
            r2, v = vif(data, name)
        except ResidRegError as exc:
            raise type(exc)(f"VIF of column {name!r}: {exc}") from exc
        entries.append(VifEntry(name, r2, v))
    return VifReport(entries)


def correlation(x, y) -> float:
    """Pearson correlation using the (n-1)-divisor sample covariance."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1 or x.size < 2:
        raise ValueError("correlation needs two 1-d vectors of equal length >= 2")
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = dx @ dx
    syy = dy @ dy
    if sxx == 0 or syy == 0:
        raise ZeroVariance("correlation is undefined for a constant vector")
    r = (dx @ dy) / np.sqrt(sxx * syy)
    return float(np.clip(r, -1.0, 1.0))


def correlation_matrix(data: RegressionData) -> list[tuple[str, str, float]]:
    names = data.column_names
    out = []
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            out.append((a, b, correlation(data.columns[a], data.columns[b])))
    return out


def _slope(y, x):
    return fit_ols(RegressionData(y, {"x": x}, include_intercept=True)).coefficients[1]


def marginal_effects(fit: OlsFit, data: RegressionData, target: str) -> MarginalEffectReport:
    """Total effect of ``target`` on the response when the other regressors co-move.

    Each ``dX_h/dX_target`` is estimated by the OLS slope of ``X_h`` on
    ``X_target`` (with intercept), and the total effect is
    ``beta_target + sum_h beta_h * slope_h``.
    """
    x = _check_regressor(data, target)
    own = fit.coef(target)
    cross = []
    total = own
    for name, values in data.columns.items():
        if name == target:
            continue
        s = float(_slope(values, x))
        cross.append((name, s))
        total += fit.coef(name) * s
    return MarginalEffectReport(target, own, cross, total)
