"""Degree -1/3 Legendre function and the cubic base-change checks.

P_{-1/3}(x) = 2F1(1/3, 2/3; 1; (1-x)/2).  For arguments near -1 the
hypergeometric argument approaches 1 (the logarithmic case), so the
series is swapped for the standard log-bearing transformation whose
coefficients are digamma differences; both branches then converge at
geometric rate <= 1/2 everywhere on (-1, 1].
"""

from __future__ import annotations

import time

import mpmath as mp
from mpmath import mpf

from .eta import modular_objects
from .evalmod import eval_modular


def legendre_Pm13(x, prec: int = 384):
    """Legendre function of degree -1/3 on (-1, 1]."""
    wp = prec + 24
    with mp.workprec(wp):
        if not isinstance(x, mp.mpf):
            x = mpf(x)
        # exact endpoint distances: quadrature nodes sit exponentially close
        # to +-1 and the gap must survive (the function has a log(1+x) part)
        w2 = mp.fsub(1, x, exact=True)
        v2 = mp.fadd(1, x, exact=True)
        if v2 <= 0 or w2 < 0:
            raise ValueError("argument must lie in (-1, 1]")
        if w2 == 0:
            res = mpf(1)
        else:
            w = w2 / 2
            a, b = mpf(1) / 3, mpf(2) / 3
            if w <= 0.5:
                term = mpf(1)
                s = term
                k = 0
                while True:
                    term = term * (a + k) * (b + k) / ((k + 1) * (k + 1)) * w
                    s += term
                    k += 1
                    if abs(term) < abs(s) * mp.eps:
                        break
                res = s
            else:
                # log case at unit argument: coefficients are digamma sums
                v = v2 / 2         # = (1+x)/2 <= 1/2
                lg = mp.log(v)
                c = mpf(1)
                A = 2 * mp.digamma(1) - mp.digamma(a) - mp.digamma(b)
                s = c * (A - lg)
                k = 0
                while True:
                    c = c * (a + k) * (b + k) / ((k + 1) * (k + 1)) * v
                    A = A + 2 / mpf(k + 1) - 1 / (a + k) - 1 / (b + k)
                    term = c * (A - lg)
                    s += term
                    k += 1
                    if abs(term) < abs(s) * mp.eps and k > 4:
                        break
                res = s * mp.sqrt(3) / (2 * mp.pi)
    with mp.workprec(prec):
        return +res


def legendre_product_integral(p_plus: int, p_minus: int, prec: int = 256):
    """int_{-1}^{1} x P(x)^p_plus P(-x)^p_minus dx."""
    from ..mpnum import quadrature as qd

    wp = prec + 16

    def f(x):
        return x * legendre_Pm13(x, wp) ** p_plus * legendre_Pm13(-x, wp) ** p_minus

    val, err, _ = qd.quad_finite(f, -1, 1, wp, max_level=8)
    with mp.workprec(prec):
        return +val


def _alpha3_eval(z, prec: int, nterms: int):
    from .evalmod import eval_qseries_checked

    a3 = modular_objects(nterms)["alpha3"]
    with mp.workprec(prec + 16):
        q = mp.exp(2j * mp.pi * mp.mpmathify(z))
        val, _ = eval_qseries_checked(a3, q, prec)
        return val


def _alpha3_slope(z, prec: int, nterms: int):
    """d alpha3/dz = 2 pi i q d(alpha3)/dq at z."""
    from .evalmod import eval_qseries_checked

    a3d = modular_objects(nterms)["alpha3"].qdq()
    with mp.workprec(prec + 16):
        q = mp.exp(2j * mp.pi * mp.mpmathify(z))
        val, _ = eval_qseries_checked(a3d, q, prec)
        return 2j * mp.pi * val


def cz_basechange_check(y, prec: int = 256, nterms: int = 200):
    """Residuals of the cubic base-change identities at z = iy.

    Checks, at one axis point: the z-alpha3 inversion relation
    z = i P(2a-1) / (sqrt(3) P(1-2a)) with a = alpha3(z); the weight-6
    identity pairing 2^4 3^4 phi66 with [P(1-2a)]^4 (1-2a) a'(z)/(pi i);
    and its companion with the doubled argument and (3^3/2) f66 added.
    Returns a dict of absolute residuals.
    """
    t0 = time.time()
    wp = prec + 32
    with mp.workprec(wp):
        z = mp.mpf(y) * 1j
        a = _alpha3_eval(z, wp, nterms)
        a2 = _alpha3_eval(2 * z, wp, nterms)
        da = _alpha3_slope(z, wp, nterms)
        da2 = _alpha3_slope(2 * z, wp, nterms)
        p_plus = legendre_Pm13(mp.re(1 - 2 * a), wp)
        p_minus = legendre_Pm13(mp.re(2 * a - 1), wp)
        z_residual = abs(z - 1j * p_minus / (mp.sqrt(3) * p_plus))

        f66v = eval_modular("f66", z, wp, nterms)
        x63v = eval_modular("X63", z, wp, nterms)
        u = -64 * x63v
        phi = f66v * (2 / (u - 4) ** 2 + 1 / (3 * (u - 4)))
        chi = f66v * (8 / (u - 16) ** 2 + 2 / (3 * (u - 16)))
        lhs_phi = mpf(2) ** 4 * mpf(3) ** 4 * phi
        rhs_phi = p_plus**4 * (1 - 2 * a) / (mp.pi * 1j) * da
        phi_residual = abs(lhs_phi - rhs_phi)

        p2_plus = legendre_Pm13(mp.re(1 - 2 * a2), wp)
        lhs_chi = mpf(3) ** 3 / 2 * f66v + mpf(2) ** 4 * mpf(3) ** 4 * chi
        # the right side differentiates the composed map z -> alpha3(2z)
        rhs_chi = -(p2_plus**4) * (1 - 2 * a2) / (mp.pi * 1j) * (2 * da2)
        chi_residual = abs(lhs_chi - rhs_chi)
    return {
        "z_alpha3": z_residual,
        "phi_identity": phi_residual,
        "chi_identity": chi_residual,
        "seconds": time.time() - t0,
    }
