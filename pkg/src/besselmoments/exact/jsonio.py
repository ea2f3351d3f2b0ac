"""Canonical JSON forms for exact objects (golden files, certificates).

Rational coefficients are rendered as decimal strings, "num" or "num/den",
so files stay exact and diff-stable.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import LaurentPoly, Poly, Q
from .diffop import DiffOp


def frac_to_str(c: Fraction) -> str:
    c = Q(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def frac_from_str(s: str) -> Fraction:
    return Fraction(s)


def poly_to_json(p: Poly) -> dict:
    return {
        "variable": p.var,
        "min_exp": 0,
        "coefficients": [frac_to_str(c) for c in p.coeffs],
    }


def laurent_to_json(p: LaurentPoly) -> dict:
    if p.is_zero():
        return {"variable": p.var, "min_exp": 0, "coefficients": []}
    lo, hi = p.min_exp(), p.max_exp()
    return {
        "variable": p.var,
        "min_exp": lo,
        "coefficients": [frac_to_str(p[e]) for e in range(lo, hi + 1)],
    }


def laurent_from_json(d: dict) -> LaurentPoly:
    lo = int(d["min_exp"])
    return LaurentPoly(
        d["variable"],
        {lo + i: frac_from_str(s) for i, s in enumerate(d["coefficients"])},
    )


def poly_from_json(d: dict) -> Poly:
    lp = laurent_from_json(d)
    return lp.to_poly()


def diffop_to_json(op: DiffOp) -> dict:
    return {
        "variable": op.var,
        "order": op.order,
        "coeffs": [laurent_to_json(c) for c in op.coeffs],
    }


def diffop_from_json(d: dict) -> DiffOp:
    return DiffOp(d["variable"], [laurent_from_json(c) for c in d["coeffs"]])
