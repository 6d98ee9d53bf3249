"""Bivariate Mittag-Leffler functions and fractional operators with ML kernels."""

import json as _json

from ._core import (
    ConvergenceError,
    DomainError,
    EvalResult,
    bivariate,
    bound_constant,
    caputo,
    caputo_correction,
    caputo_fde_residual,
    derivative,
    integral,
    laguerre,
    laguerre_generating,
    laplace,
    laplace_numeric,
    prabhakar,
    presets,
    rl_derivative,
    rl_fde_residual,
    rl_integral,
    suite_names,
    univariate,
    univariate_contour,
)
from ._core import verify as _verify

__version__ = "0.1.0"


def verify(suite="all"):
    """Run property suites and return the parsed report (a list of dicts)."""
    return _json.loads(_verify(suite))


__all__ = [
    "ConvergenceError",
    "DomainError",
    "EvalResult",
    "bivariate",
    "bound_constant",
    "caputo",
    "caputo_correction",
    "caputo_fde_residual",
    "derivative",
    "integral",
    "laguerre",
    "laguerre_generating",
    "laplace",
    "laplace_numeric",
    "prabhakar",
    "presets",
    "rl_derivative",
    "rl_fde_residual",
    "rl_integral",
    "suite_names",
    "univariate",
    "univariate_contour",
    "verify",
]
