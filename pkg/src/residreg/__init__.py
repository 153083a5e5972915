"""Residualization of multicollinear linear regressions.

OLS with t-based inference, VIF diagnostics, auxiliary-regression
residualization with exact coefficient recovery, Frisch-Waugh-Lovell
partial regression, and Nelson-Siegel loading designs.
"""

from .collinearity import (
    MarginalEffectReport,
    VifEntry,
    VifReport,
    correlation,
    correlation_matrix,
    marginal_effects,
    vif,
    vif_report,
)
from .exceptions import (
    ColumnNotFound,
    DataError,
    DimensionMismatch,
    DuplicateHeader,
    EmptyData,
    IdentityViolation,
    InsufficientObservations,
    NonPositiveInput,
    NumericalError,
    ParseError,
    PerfectCollinearity,
    RankDeficient,
    ResidRegError,
    ZeroResidualVariance,
    ZeroVariance,
)
from .fwl import FwlResult, fwl_coefficient
from .linreg import (
    INTERCEPT,
    OlsFit,
    RegressionData,
    SignificanceLevel,
    fit_ols,
    p_value_two_sided,
    r_squared_of,
)
from .nelson_siegel import (
    TREASURY_MATURITIES,
    NsLoadingSet,
    ns_curve,
    ns_design,
    ns_loadings,
    synthetic_yields,
)
from .residualize import AuxiliaryFit, ResidualizedModel, fit_auxiliary, recover_original, residualize

__version__ = "0.1.0"
