"""L-values of the weight-6 form and modular weight integrals.

Integrals along the imaginary axis split at the inversion fixed point
y0 = 1/sqrt(6); the lower piece maps to the upper one through
z -> -1/(6z) with the weight-6 law f66(-1/(6z)) = -216 z^6 f66(z), which
is derived from the Hauptmodul/weight-2 transformation laws and verified
numerically at three points before first use.  The upper pieces are
summed termwise against the exact q-expansions; each term is an
elementary incomplete-gamma integral

    int_{y0}^inf e^{-2 pi m y} y^p dy = Gamma(p+1, 2 pi m y0) / (2 pi m)^{p+1}

with integer p >= 0, so the only error is the q-series truncation.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

import mpmath as mp

from .eta import modular_objects
from .evalmod import eval_modular

Q = Fraction

_FRICKE_OK = set()


def _check_fricke_law(prec: int, nterms: int):
    """Verify f66(-1/(6z)) = -216 z^6 f66(z) at three axis points."""
    key = (prec // 64, nterms)
    if key in _FRICKE_OK:
        return
    with mp.workprec(prec + 32):
        for y in ("0.45", "0.6", "0.8"):
            z = mp.mpf(y) * 1j
            lhs = eval_modular("f66", -1 / (6 * z), prec, nterms)
            rhs = -216 * z**6 * eval_modular("f66", z, prec, nterms)
            if abs(lhs - rhs) > mp.mpf(2) ** (-prec // 2) * max(1, abs(rhs)):
                raise RuntimeError("weight-6 inversion law failed self-test")
    _FRICKE_OK.add(key)


def _gamma_upper_int(p: int, x, wp: int):
    """Gamma(p+1, x) for integer p >= 0: p! e^-x sum_{i<=p} x^i/i!."""
    with mp.workprec(wp):
        s = mp.mpf(0)
        term = mp.mpf(1)
        for i in range(p + 1):
            if i:
                term = term * x / i
            s += term
        return factorial(p) * mp.exp(-x) * s


def _axis_moment(series, p: int, prec: int):
    """int_{y0}^inf S(e^{-2 pi y}) y^p dy for an integer-grid q-series."""
    wp = prec + 32
    with mp.workprec(wp):
        y0 = 1 / mp.sqrt(6)
        total = mp.mpf(0)
        lead = int(series.leading)
        for i, c in enumerate(series.coeffs):
            if not c:
                continue
            m = lead + i
            if m <= 0:
                raise ValueError("axis moment needs a cuspidal series")
            mu = 2 * mp.pi * m
            total += (
                mp.mpf(c.numerator)
                / c.denominator
                * _gamma_upper_int(p, mu * y0, wp)
                / mu ** (p + 1)
            )
        return total


def lvalue_f66(s: int, prec: int = 384, nterms: int = 200):
    """L-value of the weight-6 form at s in {1, 2, 3}.

    (1/Gamma(s)) int_0^inf f66(iy) (2 pi y)^s dy/y, the lower arc folded
    through the inversion; everything reduces to incomplete gammas against
    the exact coefficients.
    """
    if s not in (1, 2, 3):
        raise ValueError("s must be 1, 2 or 3")
    _check_fricke_law(min(prec, 256), nterms)
    f66 = modular_objects(nterms)["f66"]
    wp = prec + 32
    with mp.workprec(wp):
        up = _axis_moment(f66, s - 1, prec)
        down = _axis_moment(f66, 5 - s, prec)
        val = ((2 * mp.pi) ** s * up + 216 * (2 * mp.pi / 6) ** s * down) / factorial(
            s - 1
        )
    with mp.workprec(prec):
        return +val


def _phi_chi_series(nterms: int):
    """Exact q-series of phi66 + chi66 and of its inversion image.

    phi66 = f66 [ 2/(U-4)^2 + 1/(3(U-4)) ],  U = -64 X63,
    chi66 = f66 [ 8/(U-16)^2 + 2/(3(U-16)) ];
    under z -> -1/(6z) the sum maps to -216 z^6 f66 R(U) with
    R(U) = U^2/(8(U-16)^2) - U/(12(U-16)) + U^2/(32(U-4)^2) - U/(24(U-4)).
    """
    objs = modular_objects(nterms)
    f66, x63 = objs["f66"], objs["X63"]
    u = x63 * Q(-64)
    um4 = (u - 4).inverse()
    um16 = (u - 16).inverse()
    direct = f66 * (
        um4 * um4 * 2 + um4 * Q(1, 3) + um16 * um16 * 8 + um16 * Q(2, 3)
    )
    mapped = (
        f66
        * Q(-216)
        * (
            u * u * um16 * um16 * Q(1, 8)
            - u * um16 * Q(1, 12)
            + u * u * um4 * um4 * Q(1, 32)
            - u * um4 * Q(1, 24)
        )
    )
    return direct, mapped


def modular_weight_integral(k: int, prec: int = 384, nterms: int = 200):
    """int_0^{i inf} [phi66 + chi66](z) z^k dz for k in {0, 1, 2}.

    Split at i/sqrt(6); the lower piece is folded by the inversion, whose
    integrand stays an exact q-series times an integer power of z, so both
    pieces are incomplete-gamma sums.  Returns a complex value.
    """
    if k not in (0, 1, 2):
        raise ValueError("k must be 0, 1 or 2")
    direct, mapped = _phi_chi_series(nterms)
    wp = prec + 32
    with mp.workprec(wp):
        up = _axis_moment(direct, k, prec) * mp.mpc(1j) ** (k + 1)
        dn = (
            _axis_moment(mapped, 4 - k, prec)
            * mp.mpc(1j) ** (4 - k + 1)
            * (-1) ** k
            / mp.mpf(6) ** (k + 1)
        )
        val = up - dn
    with mp.workprec(prec):
        return +val


def cusp_form_z_integral(k: int, prec: int = 384, nterms: int = 200):
    """int_0^{i inf} f66(z) z^k dz, same folding as the weight integrals."""
    f66 = modular_objects(nterms)["f66"]
    wp = prec + 32
    with mp.workprec(wp):
        up = _axis_moment(f66, k, prec) * mp.mpc(1j) ** (k + 1)
        dn = (
            _axis_moment(f66 * Q(-216), 4 - k, prec)
            * mp.mpc(1j) ** (4 - k + 1)
            * (-1) ** k
            / mp.mpf(6) ** (k + 1)
        )
        val = up - dn
    with mp.workprec(prec):
        return +val
