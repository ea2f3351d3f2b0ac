"""On- and off-shell Bessel moment evaluators.

The standard on-shell moments share one canonical node grid per precision
bucket, so I0/K0 values are computed once per node and reused by every
moment, power combination and polynomial weight.  Power-law cases (equal
I and K counts) use the exact asymptotic product series of I0*K0 for an
analytically integrated tail; oscillatory kernels go through the
zero-partition machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

import mpmath as mp
from mpmath import mpf

from . import quadrature as qd
from .bessel import bessel_eval

_BESSEL_VALUE_CACHE = {}
_MOMENT_CACHE = {}


def reset_caches():
    _BESSEL_VALUE_CACHE.clear()
    _MOMENT_CACHE.clear()


def cached_bessel(kind: str, t, wp: int):
    key = (kind, qd._prec_bucket(wp), t._mpf_)
    v = _BESSEL_VALUE_CACHE.get(key)
    if v is None:
        v = bessel_eval(kind, t, qd._prec_bucket(wp))
        _BESSEL_VALUE_CACHE[key] = v
    return v


def bessel_product_factory(a: int, b: int, wp: int) -> Callable:
    """Callable t -> I0(t)^a * K0(t)^b with cached evaluations."""

    def w(t):
        r = mpf(1)
        if a:
            r *= cached_bessel("I0", t, wp) ** a
        if b:
            r *= cached_bessel("K0", t, wp) ** b
        return r

    return w


@dataclass(frozen=True)
class MomentSpec:
    """One moment integral  int_0^inf kernel(t) I0^a K0^b t^tpow dt.

    kernel "none" has no extra factor; "I" and "K" mean I0(sqrt(u) t) /
    K0(sqrt(u) t) with param = u; "J" and "Y" mean J0(x t) / Y0(x t) with
    param = x.  ``subtract`` enables the product-tail subtraction needed
    for the conditionally convergent honorary case.
    """

    kernel: str = "none"
    a: int = 0
    b: int = 0
    tpow: int = 1
    param: object = None
    subtract: bool = False

    def validate(self):
        if self.kernel not in ("none", "I", "K", "J", "Y"):
            raise ValueError(f"unknown kernel {self.kernel}")
        if self.a < 0 or self.b < 0 or self.tpow < 0:
            raise ValueError("negative exponents")
        if self.kernel == "none":
            if self.b > self.a:
                return
            if self.b == self.a and self.tpow <= 2 * self.a - 2:
                return
            raise ValueError(f"divergent on-shell moment ({self.a},{self.b};{self.tpow})")
        if self.kernel == "I":
            u = float(self.param)
            if u < 0:
                return  # rerouted to a J kernel
            if u ** 0.5 >= self.b - self.a:
                raise ValueError("I-kernel moment diverges: sqrt(u) >= b - a")
        if self.kernel == "K":
            if float(self.param) <= 0:
                raise ValueError("K kernel needs u > 0")
            if self.a > self.b:
                raise ValueError("K-kernel moment diverges: a > b")
        if self.kernel in ("J", "Y"):
            if self.b < self.a:
                raise ValueError("oscillatory moment needs b >= a")


# ---------------------------------------------------------------------------
# exact asymptotic product series of I0*K0, for power-law tails
# ---------------------------------------------------------------------------

def _expansion_coeffs(nterms: int):
    """a_k(0) magnitudes A_k = ((2k-1)!!)^2/(k! 8^k) as Fractions."""
    A = [Fraction(1)]
    for k in range(1, nterms + 1):
        A.append(A[-1] * Fraction((2 * k - 1) ** 2, 8 * k))
    return A


def i0k0_product_series(nterms: int):
    """e_k with I0(t) K0(t) = (1/(2t)) (1 + sum_k e_k / t^{2k})."""
    A = _expansion_coeffs(2 * nterms)
    e = []
    for k in range(1, nterms + 1):
        m = 2 * k
        s = Fraction(0)
        for i in range(m + 1):
            s += A[i] * A[m - i] * (-1) ** (m - i)
        e.append(s)
    return e


def _poly_mul_trunc(p, q, n):
    out = [Fraction(0)] * n
    for i, a in enumerate(p):
        if a and i < n:
            for j, b in enumerate(q):
                if i + j < n and b:
                    out[i + j] += a * b
    return out


def _product_power_series(m: int, nterms: int):
    """Coefficients of E^m in x = 1/t^2, where I0 K0 = (1/2t) E(x)."""
    e = [Fraction(1)] + i0k0_product_series(nterms)
    out = [Fraction(1)] + [Fraction(0)] * nterms
    for _ in range(m):
        out = _poly_mul_trunc(out, e, nterms + 1)
    return out


def _tail_model_equal_powers(m: int, tpow: int, prec: int) -> qd.TailModel:
    """Tail of [I0 K0]^m t^tpow for t >= cut."""
    cut = max(40, int(0.36 * (prec + 24)) + 1)
    nterms = 26 if prec <= 512 else 40
    em = _product_power_series(m, nterms)
    terms = []
    for k, c in enumerate(em):
        if c:
            terms.append((m - tpow + 2 * k, c / Fraction(2**m)))
    return qd.TailModel(cut=cut, terms=terms)


def _tail_model_honorary(prec: int) -> qd.TailModel:
    """Tail of [I0K0]^2 ([I0K0]^2 - 1/(4t^2)) t^3 = E^2(E^2-1)/(16 t)."""
    cut = max(40, int(0.36 * (prec + 24)) + 1)
    nterms = 26 if prec <= 512 else 40
    e2 = _product_power_series(2, nterms)
    e2m1 = list(e2)
    e2m1[0] -= 1
    g = _poly_mul_trunc(e2, e2m1, nterms + 1)
    terms = [(2 * k + 1, c / Fraction(16)) for k, c in enumerate(g) if c]
    return qd.TailModel(cut=cut, terms=terms)


# ---------------------------------------------------------------------------
# moment evaluators
# ---------------------------------------------------------------------------

def ikm(a: int, b: int, c: int, prec: int = 384):
    """On-shell moment int_0^inf I0^a K0^b t^c dt at ``prec`` bits (cached)."""
    key = (a, b, c, prec)
    v = _MOMENT_CACHE.get(key)
    if v is not None:
        return v
    MomentSpec(kernel="none", a=a, b=b, tpow=c).validate()
    wp = prec + 24
    w = bessel_product_factory(a, b, wp)

    def integrand(t):
        return w(t) * t**c

    if b > a:
        val, _ = qd.quad_moment(integrand, prec, decay_rate=b - a)
    else:
        tail = _tail_model_equal_powers(a, c, prec)
        val, _ = qd.quad_moment_power_tail(integrand, prec, tail)
    with mp.workprec(prec):
        val = +val
    _MOMENT_CACHE[key] = val
    return val


def weighted_moment(a: int, b: int, poly_xi, prec: int = 384):
    """int_0^inf I0^a K0^b t * f(t^2) dt for a polynomial f, one quadrature."""
    if b <= a:
        raise ValueError("weighted moment needs b > a")
    wp = prec + 24
    w = bessel_product_factory(a, b, wp)
    with mp.workprec(wp):
        coeffs = [mpf(c.numerator) / c.denominator for c in poly_xi.coeffs]

    def integrand(t):
        t2 = t * t
        acc = mpf(0)
        for c in reversed(coeffs):
            acc = acc * t2 + c
        return w(t) * t * acc

    val, _ = qd.quad_moment(integrand, prec, decay_rate=b - a)
    with mp.workprec(prec):
        return +val


def ikmh443(prec: int = 384):
    """Honorary moment int [I0K0]^2 { [I0K0]^2 - 1/(4t^2) } t^3 dt.

    The unsubtracted t^3 moment diverges; the subtraction leaves an
    integrand falling off like 1/(64 t^3), handled by the exact product
    tail model.
    """
    key = ("h443", prec)
    v = _MOMENT_CACHE.get(key)
    if v is not None:
        return v
    wp = prec + 24

    def integrand(t):
        p = cached_bessel("I0", t, wp) * cached_bessel("K0", t, wp)
        p2 = p * p
        return p2 * (p2 - 1 / (4 * t * t)) * t**3

    tail = _tail_model_honorary(prec)
    val, _ = qd.quad_moment_power_tail(integrand, prec, tail)
    with mp.workprec(prec):
        val = +val
    _MOMENT_CACHE[key] = val
    return val


def offshell_moment(spec: MomentSpec, prec: int = 384):
    """Evaluate a kernel moment per its MomentSpec."""
    spec.validate()
    wp = prec + 24
    if spec.kernel == "none":
        if spec.subtract:
            return ikmh443(prec)
        return ikm(spec.a, spec.b, spec.tpow, prec)

    if spec.kernel == "I" and float(spec.param) < 0:
        with mp.workprec(wp):
            x = mp.sqrt(-mpf(spec.param))
        spec = MomentSpec(kernel="J", a=spec.a, b=spec.b, tpow=spec.tpow, param=x)

    w = bessel_product_factory(spec.a, spec.b, wp)
    c = spec.tpow

    if spec.kernel in ("I", "K"):
        with mp.workprec(wp):
            u = mpf(spec.param) if not isinstance(spec.param, Fraction) else (
                mpf(spec.param.numerator) / spec.param.denominator
            )
            v = mp.sqrt(u)
        kind = "I0" if spec.kernel == "I" else "K0"

        def integrand(t):
            return cached_bessel(kind, v * t, wp) * w(t) * t**c

        rate = spec.b - spec.a + (float(v) if spec.kernel == "K" else -float(v))
        val, _ = qd.quad_moment(integrand, prec, decay_rate=max(rate, 1e-4))
        with mp.workprec(prec):
            return +val

    # oscillatory kernels
    with mp.workprec(wp):
        x = mpf(spec.param) if not isinstance(spec.param, Fraction) else (
            mpf(spec.param.numerator) / spec.param.denominator
        )
    kind = "J0" if spec.kernel == "J" else "Y0"

    # conditional convergence caps the achievable accuracy near 1e-10;
    # run the panels at matching precision
    osc_prec = min(prec, 128)
    w_osc = bessel_product_factory(spec.a, spec.b, osc_prec + 24)

    def integrand(t):
        return cached_bessel(kind, x * t, osc_prec + 24) * w_osc(t) * t**c

    val, _ = qd.quad_oscillatory(integrand, x, spec.kernel, osc_prec)
    with mp.workprec(prec):
        return +val


def kluyver_p(n: int, x, prec: int = 256, method: str = "auto"):
    """Distance density after n unit steps in the plane.

    method "ik": modified-Bessel representation (n = 3 or 7, 0 <= x <= 1);
    method "direct": oscillatory J0(xt) J0(t)^n x t integral for any x >= 0.
    """
    with mp.workprec(prec + 16):
        x = mpf(x)
    if method == "auto":
        method = "ik" if n in (3, 7) and 0 <= x <= 1 else "direct"
    if method == "ik":
        if n not in (3, 7):
            raise ValueError("modified-Bessel representation covers n in {3, 7}")
        if not 0 <= x <= 1:
            raise ValueError("representation valid for 0 <= x <= 1")
        if x == 0:
            with mp.workprec(prec):
                return mpf(0)
        with mp.workprec(prec + 16):
            if n == 3:
                if x == 1:
                    raise ValueError("p3 via this route needs x < 1")
                m = _ikernel_moment(x, 1, 2, 1, prec)
                val = 6 / mp.pi**2 * x * m
            else:
                if x == 1:
                    m1 = ikm(2, 6, 1, prec)
                    m2 = ikm(4, 4, 1, prec)
                else:
                    m1 = _ikernel_moment(x, 1, 6, 1, prec)
                    m2 = _ikernel_moment(x, 3, 4, 1, prec)
                val = 35 * x * (4 / mp.pi**6 * m1 - 2 / mp.pi**4 * m2)
        with mp.workprec(prec):
            return +val
    if method == "direct":
        if x == 0:
            with mp.workprec(prec):
                return mp.mpf(0)
        osc_prec = min(prec, 128)
        wp = osc_prec + 24

        def integrand(t):
            return (
                cached_bessel("J0", x * t, wp)
                * cached_bessel("J0", t, wp) ** n
                * x
                * t
            )

        factors = [("J", 1)] if x == 1 else [("J", 1), ("J", x)]
        val, _ = qd.quad_oscillatory(
            integrand, 1, "J", osc_prec, n_panels=64, factors=factors
        )
        with mp.workprec(prec):
            return +val
    raise ValueError(f"unknown method {method}")


def _ikernel_moment(x, a, b, c, prec):
    """int I0(x t) I0^a K0^b t^c dt with scalar kernel argument x (not u)."""
    wp = prec + 24
    w = bessel_product_factory(a, b, wp)

    def integrand(t):
        return cached_bessel("I0", x * t, wp) * w(t) * t**c

    rate = b - a - float(x)
    if rate <= 0:
        raise ValueError("divergent I-kernel moment")
    val, _ = qd.quad_moment(integrand, prec, decay_rate=rate)
    return val


def kluyver_p_derivative_integrand(x, prec: int = 256):
    """d/dx of p7(x)/(35 x) via the modified-Bessel route, for 0 < x < 1."""
    wp = prec + 24
    with mp.workprec(wp):
        x = mpf(x)
    w1 = bessel_product_factory(1, 6, wp)
    w2 = bessel_product_factory(3, 4, wp)

    def g1(t):
        return cached_bessel("I1", x * t, wp) * w1(t) * t**2

    def g2(t):
        return cached_bessel("I1", x * t, wp) * w2(t) * t**2

    v1, _ = qd.quad_moment(g1, prec, decay_rate=5 - float(x))
    v2, _ = qd.quad_moment(g2, prec, decay_rate=1 - float(x))
    with mp.workprec(prec + 16):
        return 4 / mp.pi**6 * v1 - 2 / mp.pi**4 * v2


def kluyver_limit_functional(x, prec: int = 192):
    """p3(x)/(12 pi^2 x) + (d^2/dx^2)(p7(x)/(35x)) for 0 < x < 1.

    The two pieces diverge logarithmically as x -> 1- but their sum stays
    finite; evaluated from the modified-Bessel representations with the
    radial Laplacian split off the second derivative.
    """
    wp = prec + 24
    with mp.workprec(wp):
        x = mpf(x)
        w16 = bessel_product_factory(1, 6, wp)
        w34 = bessel_product_factory(3, 4, wp)
        w12 = bessel_product_factory(1, 2, wp)

        def lap1(t):
            return cached_bessel("I0", x * t, wp) * w16(t) * t**3

        def lap2(t):
            return cached_bessel("I0", x * t, wp) * w34(t) * t**3

        def p3i(t):
            return cached_bessel("I0", x * t, wp) * w12(t) * t

        rate2 = 1 - float(x)
        l1, _ = qd.quad_moment(lap1, prec, decay_rate=5 - float(x))
        l2, _ = qd.quad_moment(lap2, prec, decay_rate=rate2)
        p3v, _ = qd.quad_moment(p3i, prec, decay_rate=rate2)
        laplacian = 4 / mp.pi**6 * l1 - 2 / mp.pi**4 * l2
        slope = kluyver_p_derivative_integrand(x, prec)
        # (d^2/dx^2 + (1/x) d/dx) F = laplacian  =>  F'' = laplacian - F'/x
        second = laplacian - slope / x
        return p3v / (2 * mp.pi**4) + second
