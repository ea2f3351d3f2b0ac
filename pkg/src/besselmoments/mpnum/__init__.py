"""Arbitrary-precision numerical kernel: Bessel evaluators, quadrature,
moment integrals, constants and integer-relation detection."""

from .bessel import bessel_eval
from .constants import constants
from .moments import MomentSpec, ikm, ikmh443, kluyver_p, offshell_moment
from .relations import integer_relation

__all__ = [
    "bessel_eval",
    "constants",
    "MomentSpec",
    "ikm",
    "ikmh443",
    "kluyver_p",
    "offshell_moment",
    "integer_relation",
]
