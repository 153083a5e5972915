"""Residualization of a regressor.

One regressor is replaced by the residuals of its auxiliary regression on
(a subset of) the remaining regressors. The new model spans the same column
space as the original, so it is an exact reparametrization: the coefficient
and standard error of the residualized column equal those of the original
column, and the other coefficients shift by ``beta_target * alpha_hat``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import ColumnNotFound, DataError, IdentityViolation
from .linreg import INTERCEPT, OlsFit, RegressionData, fit_ols

RESID_SUFFIX = "_resid"

IDENTITY_TOL = 1e-8


@dataclass(frozen=True)
class AuxiliaryFit:
    target_column: str
    predictor_columns: list[str]
    alpha_hat: np.ndarray  # intercept first
    residuals: np.ndarray
    r2_aux: float
    fit: OlsFit

    @property
    def predicted(self) -> np.ndarray:
        return self.fit.fitted

    def alpha(self, name: str) -> float:
        return self.fit.coef(name)


@dataclass(frozen=True)
class ResidualizedModel:
    auxiliary: AuxiliaryFit
    transformed_data: RegressionData
    fit: OlsFit
    original_fit: OlsFit
    residualized_column: str
    recovery: np.ndarray
    """Matrix mapping the residualized-model coefficients back to the original ones."""

    @property
    def target_column(self) -> str:
        return self.auxiliary.target_column


def fit_auxiliary(data: RegressionData, target: str, predictors=None) -> AuxiliaryFit:
    """Regress column ``target`` on ``predictors`` plus an intercept.

    ``predictors`` defaults to every other regressor in ``data``.
    """
    if target == INTERCEPT:
        raise ColumnNotFound("the intercept cannot be residualized")
    x = data.column(target)
    if predictors is None:
        predictors = [k for k in data.columns if k != target]
    predictors = list(predictors)
    if not predictors:
        raise DataError("the auxiliary regression needs at least one predictor")
    if target in predictors:
        raise DataError(f"{target!r} cannot predict itself")
    if len(set(predictors)) != len(predictors):
        raise DataError("duplicate auxiliary predictors")
    cols = {name: data.column(name) for name in predictors}
    fit = fit_ols(RegressionData(x, cols, include_intercept=True))
    return AuxiliaryFit(
        target_column=target,
        predictor_columns=predictors,
        alpha_hat=fit.coefficients,
        residuals=fit.residuals,
        r2_aux=fit.r_squared,
        fit=fit,
    )


def _recovery_matrix(names, target, aux):
    """Linear map ``beta = M @ delta`` implied by the auxiliary coefficients."""
    p = len(names)
    M = np.eye(p)
    t = names.index(target)
    M[0, t] = -aux.alpha(INTERCEPT)
    for h in aux.predictor_columns:
        M[names.index(h), t] = -aux.alpha(h)
    return M


def residualize(data: RegressionData, target: str, predictors=None,
                suffix: str = RESID_SUFFIX) -> ResidualizedModel:
    """Substitute ``target`` by its auxiliary residuals and refit.

    The residualized column keeps its position in the design and is renamed
    with ``suffix`` (unless its name already carries it).

    Raises
    ------
    IdentityViolation
        If the residualized coefficient or its standard error departs from
        the original by more than ``IDENTITY_TOL`` times the larger of the
        original coefficient and its standard error.
    """
    if not data.include_intercept:
        raise DataError("residualization requires a model with an intercept")
    original = fit_ols(data)
    aux = fit_auxiliary(data, target, predictors)
    new_name = target if target.endswith(suffix) else target + suffix
    transformed = data.replace_column(target, aux.residuals, new_name)
    fit = fit_ols(transformed)

    i = original.index(target)
    b, d = original.coefficients[i], fit.coefficients[i]
    se_b, se_d = original.standard_errors[i], fit.standard_errors[i]
    scale = max(abs(b), se_b, np.finfo(float).tiny)
    if abs(d - b) > IDENTITY_TOL * scale or abs(se_d - se_b) > IDENTITY_TOL * scale:
        raise IdentityViolation(
            f"residualized coefficient {d!r} (se {se_d!r}) does not reproduce "
            f"original {b!r} (se {se_b!r}); the design is numerically rank deficient"
        )

    recovery = _recovery_matrix(original.coefficient_names, target, aux)
    return ResidualizedModel(
        auxiliary=aux,
        transformed_data=transformed,
        fit=fit,
        original_fit=original,
        residualized_column=new_name,
        recovery=recovery,
    )


def recover_original(model: ResidualizedModel) -> np.ndarray:
    """Rebuild the original coefficients from the residualized ones.

    ``beta_target = delta_target``, ``beta_1 = delta_1 - delta_target * alpha_1``
    and ``beta_h = delta_h - delta_target * alpha_h`` for every auxiliary
    predictor ``h``.
    """
    return model.recovery @ model.fit.coefficients
