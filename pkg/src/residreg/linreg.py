"""Ordinary least squares with single-coefficient inference.

The design matrix is factorized with a Householder QR decomposition, never
through the normal equations, since the designs of interest here are nearly
collinear.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np
from scipy import special
from scipy.linalg import solve_triangular

from .exceptions import (
    ColumnNotFound,
    DataError,
    DimensionMismatch,
    InsufficientObservations,
    RankDeficient,
    ZeroVariance,
)

INTERCEPT = "intercept"

# smallest/largest singular value below this means no unique solution
RANK_TOL = 1e-10


@dataclass(frozen=True)
class RegressionData:
    """Response vector plus named regressor columns.

    Parameters
    ----------
    response : array_like, shape (n,)
    columns : mapping of str to array_like
        Regressors in design order. The intercept is not listed here; it is
        controlled by ``include_intercept`` and always occupies the first
        design column.
    include_intercept : bool
    """

    response: np.ndarray
    columns: dict[str, np.ndarray]
    include_intercept: bool = True

    def __post_init__(self):
        y = np.asarray(self.response, dtype=float)
        if y.ndim != 1 or y.size < 1:
            raise DimensionMismatch("response must be a non-empty 1-d vector")
        cols = {}
        for name, values in dict(self.columns).items():
            if not isinstance(name, str) or not name:
                raise DataError("column names must be non-empty strings")
            if name == INTERCEPT and self.include_intercept:
                raise DataError(f"column name {INTERCEPT!r} is reserved")
            v = np.asarray(values, dtype=float)
            if v.shape != y.shape:
                raise DimensionMismatch(
                    f"column {name!r} has shape {v.shape}, response has {y.shape}"
                )
            if self.include_intercept and y.size > 1 and np.all(v == v[0]):
                raise DataError(f"column {name!r} is constant and aliases the intercept")
            v.setflags(write=False)
            cols[name] = v
        y.setflags(write=False)
        object.__setattr__(self, "response", y)
        object.__setattr__(self, "columns", cols)

    @property
    def n(self) -> int:
        return self.response.size

    @property
    def column_names(self) -> list[str]:
        return list(self.columns)

    @property
    def coefficient_names(self) -> list[str]:
        names = list(self.columns)
        return [INTERCEPT] + names if self.include_intercept else names

    def column(self, name: str) -> np.ndarray:
        try:
            return self.columns[name]
        except KeyError:
            raise ColumnNotFound(f"no column named {name!r}") from None

    def design(self) -> np.ndarray:
        parts = [np.ones(self.n)] if self.include_intercept else []
        parts.extend(self.columns.values())
        if not parts:
            return np.empty((self.n, 0))
        return np.column_stack(parts)

    def replace_column(self, name: str, values, new_name: str | None = None):
        """Return a copy with ``name`` swapped for ``values``, keeping its position."""
        self.column(name)
        new_name = name if new_name is None else new_name
        cols = {}
        for k, v in self.columns.items():
            if k == name:
                cols[new_name] = values
            elif k == new_name:
                raise DataError(f"column {new_name!r} already exists")
            else:
                cols[k] = v
        return RegressionData(self.response, cols, self.include_intercept)

    def with_response(self, values, columns=None):
        cols = self.columns if columns is None else columns
        return RegressionData(values, cols, self.include_intercept)


class SignificanceLevel(enum.Enum):
    NONE = None
    P90 = 90
    P95 = 95
    P99 = 99

    @classmethod
    def from_p_value(cls, p: float) -> "SignificanceLevel":
        if p < 0.01:
            return cls.P99
        if p < 0.05:
            return cls.P95
        if p < 0.10:
            return cls.P90
        return cls.NONE

    @property
    def stars(self) -> str:
        return {None: "", 90: "*", 95: "**", 99: "***"}[self.value]


@dataclass(frozen=True)
class OlsFit:
    coefficients: np.ndarray
    standard_errors: np.ndarray
    t_stats: np.ndarray
    p_values: np.ndarray
    residuals: np.ndarray
    fitted: np.ndarray
    r_squared: float
    sigma2_hat: float
    dof: int
    coefficient_names: list[str]
    has_intercept: bool = True
    cov_unscaled: np.ndarray = field(default=None, repr=False)

    def index(self, name: str) -> int:
        try:
            return self.coefficient_names.index(name)
        except ValueError:
            raise ColumnNotFound(f"no coefficient named {name!r}") from None

    def coef(self, name: str) -> float:
        return float(self.coefficients[self.index(name)])

    def se(self, name: str) -> float:
        return float(self.standard_errors[self.index(name)])

    @property
    def significance(self) -> list[SignificanceLevel]:
        return [SignificanceLevel.from_p_value(p) for p in self.p_values]

    @property
    def rss(self) -> float:
        return float(self.residuals @ self.residuals)


def p_value_two_sided(t, dof):
    """Two-sided Student-t tail probability ``2 P(T_dof > |t|)``.

    Uses the identity ``P(|T| > |t|) = I_x(dof/2, 1/2)`` with
    ``x = dof / (dof + t**2)``, where ``I`` is the regularized incomplete
    beta function.
    """
    if dof < 1:
        raise ValueError("dof must be >= 1")
    t = np.asarray(t, dtype=float)
    with np.errstate(over="ignore", invalid="ignore"):
        x = dof / (dof + t * t)
    x = np.where(np.isinf(t), 0.0, x)
    p = special.betainc(0.5 * dof, 0.5, x)
    p = np.clip(p, 0.0, 1.0)
    return float(p) if p.ndim == 0 else p


def _centered_tss(y):
    d = y - y.mean()
    return float(d @ d)


def fit_ols(data: RegressionData) -> OlsFit:
    """Least-squares fit of ``data.response`` on the design of ``data``.

    Raises
    ------
    InsufficientObservations
        If ``n <= p``.
    RankDeficient
        If the design's singular value ratio falls below ``RANK_TOL``.
    """
    X = data.design()
    y = data.response
    n, p = X.shape
    if p == 0:
        raise DataError("design has no columns")
    if n <= p:
        raise InsufficientObservations(f"n={n} observations for p={p} coefficients")

    sv = np.linalg.svd(X, compute_uv=False)
    if sv[0] == 0 or sv[-1] / sv[0] < RANK_TOL:
        ratio = 0.0 if sv[0] == 0 else sv[-1] / sv[0]
        raise RankDeficient(
            f"design matrix is rank deficient (singular value ratio {ratio:.3e})"
        )

    Q, R = np.linalg.qr(X, mode="reduced")
    beta = solve_triangular(R, Q.T @ y)
    fitted = X @ beta
    resid = y - fitted
    dof = n - p
    rss = float(resid @ resid)
    sigma2 = rss / dof

    # (X'X)^-1 = R^-1 R^-T
    r_inv = solve_triangular(R, np.eye(p))
    cov_unscaled = r_inv @ r_inv.T
    se = np.sqrt(sigma2 * np.einsum("ij,ij->i", r_inv, r_inv))

    with np.errstate(divide="ignore", invalid="ignore"):
        t = np.where(se > 0, beta / se, np.copysign(np.inf, beta))
    t = np.where((se == 0) & (beta == 0), 0.0, t)
    pv = np.atleast_1d(p_value_two_sided(t, dof))

    tss = _centered_tss(y) if data.include_intercept else float(y @ y)
    r2 = 1.0 - rss / tss if tss > 0 else float("nan")
    if data.include_intercept and tss > 0:
        r2 = min(max(r2, 0.0), 1.0)

    return OlsFit(
        coefficients=beta,
        standard_errors=se,
        t_stats=t,
        p_values=pv,
        residuals=resid,
        fitted=fitted,
        r_squared=r2,
        sigma2_hat=sigma2,
        dof=dof,
        coefficient_names=data.coefficient_names,
        has_intercept=data.include_intercept,
        cov_unscaled=cov_unscaled,
    )


def r_squared_of(fit: OlsFit, data: RegressionData) -> float:
    """``1 - RSS/TSS``, with TSS centered when the model has an intercept."""
    y = data.response
    tss = _centered_tss(y) if data.include_intercept else float(y @ y)
    if tss == 0:
        raise ZeroVariance("response has zero variance; R-squared is undefined")
    resid = y - fit.fitted
    return 1.0 - float(resid @ resid) / tss
