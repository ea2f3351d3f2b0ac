"""Exact q-expansions of eta quotients, half-plane evaluation, L-values,
weight integrals and the Legendre-function base change."""

from .qseries import QSeries
from .eta import eta_qseries, modular_objects
from .evalmod import HalfPlanePoint, eval_modular
from .lvalues import lvalue_f66, modular_weight_integral, cusp_form_z_integral
from .legendre import legendre_Pm13, cz_basechange_check

__all__ = [
    "QSeries",
    "eta_qseries",
    "modular_objects",
    "HalfPlanePoint",
    "eval_modular",
    "lvalue_f66",
    "modular_weight_integral",
    "cusp_form_z_integral",
    "legendre_Pm13",
    "cz_basechange_check",
]
