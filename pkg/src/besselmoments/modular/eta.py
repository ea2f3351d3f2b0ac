"""Eta factors and the derived exact q-objects on level 6.

``modular_objects`` assembles, with exact integer/rational coefficients:

* X63  -- the Hauptmodul [eta(2z)eta(6z)/(eta(z)eta(3z))]^6, leading q^1;
* Z63  -- the weight-2 form [eta(z)eta(3z)]^4/[eta(2z)eta(6z)]^2, leading q^0;
* f66  -- the weight-6 cusp form, both as the eta-quotient sum and as
          Z63^2 * q dX63/dq, cross-checked coefficientwise;
* alpha3 -- the cubic invariant (eta(z)^12/(27 eta(3z)^12) + 1)^(-1),
          leading q^1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict

from .qseries import QSeries

Q = Fraction

_OBJ_CACHE: Dict[int, dict] = {}


def eta_qseries(scale: int, nterms: int) -> QSeries:
    """eta(scale*z) as a QSeries: leading exponent scale/24, and the
    pentagonal-number expansion of prod_n (1 - q^(scale*n)) on the slots."""
    if scale < 1 or nterms < 1:
        raise ValueError("need scale >= 1 and nterms >= 1")
    coeffs = [Q(0)] * nterms
    coeffs[0] = Q(1)
    j = 1
    while True:
        placed = False
        for g in (j * (3 * j - 1) // 2, j * (3 * j + 1) // 2):
            e = scale * g
            if e < nterms:
                coeffs[e] += Q(-1) ** j
                placed = True
        if not placed:
            break
        j += 1
    return QSeries(Q(scale, 24), coeffs)


def modular_objects(nterms: int = 200) -> dict:
    """All four exact q-objects, cross-checked; cached per truncation."""
    if nterms < 20:
        raise ValueError("truncation order must be >= 20")
    if nterms in _OBJ_CACHE:
        return _OBJ_CACHE[nterms]
    e1 = eta_qseries(1, nterms)
    e2 = eta_qseries(2, nterms)
    e3 = eta_qseries(3, nterms)
    e6 = eta_qseries(6, nterms)

    x63 = (e2 * e6) ** 6 * ((e1 * e3) ** 6).inverse()
    z63 = (e1 * e3) ** 4 * ((e2 * e6) ** 2).inverse()
    f66 = (e2 * e3) ** 9 * ((e1 * e6) ** 3).inverse() + (e1 * e6) ** 9 * (
        (e2 * e3) ** 3
    ).inverse()
    f66_alt = z63 * z63 * x63.qdq()
    if not f66 == f66_alt:
        raise RuntimeError("weight-6 form: defining formulas disagree")

    alpha3 = (e1**12 * (e3**12).inverse() * Q(1, 27) + 1).inverse()
    if alpha3.leading != 1 or x63.leading != 1 or z63.leading != 0 or f66.leading != 1:
        raise RuntimeError("unexpected leading exponents in q-objects")

    out = {"X63": x63, "Z63": z63, "f66": f66, "alpha3": alpha3, "nterms": nterms}
    _OBJ_CACHE[nterms] = out
    return out
