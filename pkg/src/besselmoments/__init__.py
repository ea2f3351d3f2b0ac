"""Verification laboratory for Bessel moment sum rules.

Exact univariate computer algebra (differential operators, truncated
log-series, q-expansions of eta quotients) combined with an
arbitrary-precision numerical kernel (Bessel evaluators, doubly-exponential
and oscillatory quadrature, L-values, PSLQ) to certify a catalog of
identities between Bessel moments, Vanhove-type operators and cusp-form
L-values.
"""

__version__ = "0.1.0"

from .exact.poly import Poly, LaurentPoly, RationalFunc
from .exact.diffop import DiffOp, bmw_operator, formal_adjoint
from .exact.series import LogSeries, frobenius_solutions, apply_to_log_series
from .exact.besselpair import BesselPairExpr, apply_to_bessel_pair

__all__ = [
    "Poly",
    "LaurentPoly",
    "RationalFunc",
    "DiffOp",
    "bmw_operator",
    "formal_adjoint",
    "LogSeries",
    "frobenius_solutions",
    "apply_to_log_series",
    "BesselPairExpr",
    "apply_to_bessel_pair",
    "__version__",
]
