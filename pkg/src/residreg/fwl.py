"""Frisch-Waugh-Lovell double-residual regression."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import ColumnNotFound, DataError, ZeroResidualVariance
from .linreg import INTERCEPT, OlsFit, RegressionData, fit_ols


@dataclass(frozen=True)
class FwlResult:
    """Outcome of partialling the controls out of both response and target.

    ``gamma_fit`` is the regression of ``ey`` on ``ej`` with an intercept;
    its inference uses ``n - 2`` degrees of freedom, so ``gamma_se`` differs
    from ``direct_se`` whenever there are controls.
    """

    target_column: str
    control_columns: list[str]
    ey: np.ndarray
    ej: np.ndarray
    control_fit: OlsFit
    gamma_fit: OlsFit
    direct_fit: OlsFit

    @property
    def gamma_hat(self) -> float:
        return float(self.gamma_fit.coefficients[1])

    @property
    def gamma_intercept(self) -> float:
        return float(self.gamma_fit.coefficients[0])

    @property
    def gamma_se(self) -> float:
        return float(self.gamma_fit.standard_errors[1])

    @property
    def direct_coefficient(self) -> float:
        return self.direct_fit.coef(self.target_column)

    @property
    def direct_se(self) -> float:
        return self.direct_fit.se(self.target_column)


def fwl_coefficient(data: RegressionData, target: str) -> FwlResult:
    if not data.include_intercept:
        raise DataError("the FWL regression is defined for models with an intercept")
    if target == INTERCEPT:
        raise ColumnNotFound("the intercept cannot be the FWL target")
    x = data.column(target)
    controls = {k: v for k, v in data.columns.items() if k != target}

    control_fit = fit_ols(RegressionData(data.response, controls))
    target_fit = fit_ols(RegressionData(x, controls))
    ey = control_fit.residuals
    ej = target_fit.residuals

    xc = x - x.mean()
    if np.sqrt(ej @ ej) <= 1e-12 * max(np.sqrt(xc @ xc), np.finfo(float).tiny):
        raise ZeroResidualVariance(
            f"{target!r} is perfectly explained by the controls"
        )
    direct = fit_ols(data)
    gamma_fit = fit_ols(RegressionData(ey, {target + "_partial": ej}))
    return FwlResult(
        target_column=target,
        control_columns=list(controls),
        ey=ey,
        ej=ej,
        control_fit=control_fit,
        gamma_fit=gamma_fit,
        direct_fit=direct,
    )
