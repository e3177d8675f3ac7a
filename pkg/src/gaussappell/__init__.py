"""Exact Gauss-Appell polynomials: construction, evaluation, verification.

Public API
----------

Series core (`exact`):
    Rational, PowerSeries, exp_neg_half_t_squared, as_rational,
    binomial_convolution,
    DivisionByZeroSeries, PoleAtOrigin, OrderUnderflow

Hypergeometric coefficients (`hypergeom`):
    HypergeomParams, GaussCoefficients, pochhammer, gauss_coefficients,
    shift_params, gauss_2f1_series_in_t, sample_parameter_triples,
    InvalidParameterC

Appell families (`appell`):
    AppellFamily, AppellNumbers, builtin_family, custom_family,
    appell_numbers, beta_coefficients, UnknownFamily, NotStrictAppell

Polynomial construction (`gauss_appell`):
    Polynomial, BivariatePolynomial, gap_explicit, gap_explicit_flipped,
    gap_from_generating, gap_by_recurrence, gap_evaluate,
    gap_x_derivative, derivative_identity_check, gap_argument_shift_check,
    chi_shift_identity_check, bivariate_gap, ZeroShiftBase

Umbral operator model (`umbral`):
    UmbralState, ProjectionContext, binomial_state, project,
    op_D_u, op_D_v, op_mul_u, op_chi, raising_u, raising_v,
    ode_residual, OrderExceeded

The `cli` module exposes the same functionality on the command line as
`gauss-appell gen|eval|verify|plot|numbers`.
"""

from .appell import (
    AppellFamily,
    AppellNumbers,
    NotStrictAppell,
    UnknownFamily,
    appell_numbers,
    beta_coefficients,
    builtin_family,
    custom_family,
)
from .exact import (
    DivisionByZeroSeries,
    OrderUnderflow,
    PoleAtOrigin,
    PowerSeries,
    Rational,
    as_rational,
    binomial_convolution,
    exp_neg_half_t_squared,
)
from .gauss_appell import (
    BivariatePolynomial,
    Polynomial,
    ZeroShiftBase,
    bivariate_gap,
    chi_shift_identity_check,
    derivative_identity_check,
    gap_argument_shift_check,
    gap_by_recurrence,
    gap_evaluate,
    gap_explicit,
    gap_explicit_flipped,
    gap_from_generating,
    gap_x_derivative,
)
from .hypergeom import (
    GaussCoefficients,
    HypergeomParams,
    InvalidParameterC,
    gauss_2f1_series_in_t,
    gauss_coefficients,
    pochhammer,
    sample_parameter_triples,
    shift_params,
)
from .umbral import (
    OrderExceeded,
    ProjectionContext,
    UmbralState,
    binomial_state,
    ode_residual,
    op_D_u,
    op_D_v,
    op_chi,
    op_mul_u,
    project,
    raising_u,
    raising_v,
)

__version__ = "0.1.0"

__all__ = [
    "AppellFamily",
    "AppellNumbers",
    "BivariatePolynomial",
    "DivisionByZeroSeries",
    "GaussCoefficients",
    "HypergeomParams",
    "InvalidParameterC",
    "NotStrictAppell",
    "OrderExceeded",
    "OrderUnderflow",
    "PoleAtOrigin",
    "Polynomial",
    "PowerSeries",
    "ProjectionContext",
    "Rational",
    "UmbralState",
    "UnknownFamily",
    "ZeroShiftBase",
    "appell_numbers",
    "as_rational",
    "beta_coefficients",
    "binomial_convolution",
    "binomial_state",
    "bivariate_gap",
    "builtin_family",
    "chi_shift_identity_check",
    "custom_family",
    "derivative_identity_check",
    "exp_neg_half_t_squared",
    "gap_argument_shift_check",
    "gap_by_recurrence",
    "gap_evaluate",
    "gap_explicit",
    "gap_explicit_flipped",
    "gap_from_generating",
    "gap_x_derivative",
    "gauss_2f1_series_in_t",
    "gauss_coefficients",
    "ode_residual",
    "op_D_u",
    "op_D_v",
    "op_chi",
    "op_mul_u",
    "pochhammer",
    "project",
    "raising_u",
    "raising_v",
    "sample_parameter_triples",
    "shift_params",
]
