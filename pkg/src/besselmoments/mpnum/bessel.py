"""Multiprecision Bessel evaluators for the seven kinds used by moments.

Two regimes per kind.  Ascending series always converge; for the
cancellation-prone kinds (K and the oscillatory J/Y families) the working
precision is boosted by the cancellation budget (about 2t/ln2 bits for K,
t/ln2 for J/Y) so the final value keeps full accuracy.  The large-argument
asymptotic expansions are used only once their rigorously bounded
truncation error (first omitted term, with the optimal-truncation floor
around exp(-2t)) meets the target; otherwise the boosted series is used,
so the two regimes overlap and can be cross-checked.
"""

from __future__ import annotations

import mpmath as mp
from mpmath import mpf

KINDS = ("I0", "I1", "K0", "K1", "J0", "J1", "Y0")

_LN2 = 0.6931471805599453


def _asym_ok(t: float, wp: int) -> bool:
    # optimal truncation of the modified/oscillatory expansions stalls at
    # a relative error of order exp(-2t)
    return 2.0 * t >= (wp + 16) * _LN2


def _i_series(t, order: int):
    """Ascending series of I0 or I1 at current working precision."""
    t2 = t * t / 4
    if order == 0:
        term = mpf(1)
        s = term
        k = 1
        while True:
            term = term * t2 / (k * k)
            s += term
            if term < s * mp.eps:
                return s
            k += 1
    term = t / 2
    s = term
    k = 1
    while True:
        term = term * t2 / (k * (k + 1))
        s += term
        if term < s * mp.eps:
            return s
        k += 1


def _k_series(t, order: int):
    """Ascending series of K0 or K1; caller supplies boosted precision."""
    t2 = t * t / 4
    lg = mp.log(t / 2)
    if order == 0:
        # K0 = -(log(t/2) + gamma) I0 + sum_{k>=1} H_k (t^2/4)^k / (k!)^2
        term = mpf(1)
        s0 = term
        h = mpf(0)
        s1 = mpf(0)
        k = 1
        while True:
            term = term * t2 / (k * k)
            h += mpf(1) / k
            s0 += term
            s1 += term * h
            if term * (h + 1) < (abs(s1) + abs(s0)) * mp.eps:
                break
            k += 1
        return -(lg + mp.euler) * s0 + s1
    # K1 = 1/t + log(t/2) I1 - (t/4) sum_k (psi(k+1)+psi(k+2)) c_k,
    # c_k = (t^2/4)^k / (k!(k+1)!), psi(k+1) = -gamma + H_k
    term = mpf(1)
    i1 = term
    h = mpf(0)       # H_k
    h2 = mpf(1)      # H_{k+1}
    s = term * (h + h2 - 2 * mp.euler)
    k = 1
    while True:
        term = term * t2 / (k * (k + 1))
        h += mpf(1) / k
        h2 += mpf(1) / (k + 1)
        i1 += term
        s += term * (h + h2 - 2 * mp.euler)
        if term * (h + h2 + 1) < (abs(s) + abs(i1)) * mp.eps:
            break
        k += 1
    return 1 / t + lg * (t / 2) * i1 - (t / 4) * s


def _j_series(t, order: int):
    t2 = t * t / 4
    if order == 0:
        term = mpf(1)
        s = term
        k = 1
        while True:
            term = -term * t2 / (k * k)
            s += term
            if abs(term) < mp.eps:
                return s
            k += 1
    term = t / 2
    s = term
    k = 1
    while True:
        term = -term * t2 / (k * (k + 1))
        s += term
        if abs(term) < mp.eps * (1 + abs(t)):
            return s
        k += 1


def _y_series(t, order: int):
    lg = mp.log(t / 2)
    t2 = t * t / 4
    if order == 0:
        # Y0 = (2/pi)[(log(t/2)+gamma) J0 + sum_{k>=1} (-1)^{k+1} H_k c_k]
        term = mpf(1)
        j0 = term
        h = mpf(0)
        s = mpf(0)
        k = 1
        while True:
            term = -term * t2 / (k * k)
            h += mpf(1) / k
            j0 += term
            s -= term * h
            if abs(term) * (h + 1) < mp.eps:
                break
            k += 1
        return 2 / mp.pi * ((lg + mp.euler) * j0 + s)
    # Y1 = (2/pi)[log(t/2) J1 - 1/t - (t/4) sum_k (-1)^k (psi(k+1)+psi(k+2)) c_k]
    term = mpf(1)
    j1 = term
    h = mpf(0)
    h2 = mpf(1)
    s = term * (h + h2 - 2 * mp.euler)
    k = 1
    sgn = 1
    while True:
        term = term * t2 / (k * (k + 1))
        sgn = -sgn
        h += mpf(1) / k
        h2 += mpf(1) / (k + 1)
        j1 += sgn * term
        s += sgn * term * (h + h2 - 2 * mp.euler)
        if term * (h + h2 + 1) < mp.eps:
            break
        k += 1
    return 2 / mp.pi * (lg * (t / 2) * j1 - 1 / t - (t / 4) * s)


class _AsymFail(Exception):
    pass


def _ik_asym(t, nu: int, sign: int, target_eps):
    """Poincare expansion factor sum_k (sign)^k a_k(nu) / t^k with the
    first-omitted-term bound; raises if the bound cannot meet target_eps.

    sign=+1 gives the K-type factor, sign=-1 the I-type factor.
    """
    mu = 4 * nu * nu
    term = mpf(1)
    s = term
    k = 1
    prev = abs(term)
    while True:
        term = term * (mu - (2 * k - 1) ** 2) * sign / (8 * k) / t
        mag = abs(term)
        if mag >= prev:
            raise _AsymFail("expansion stalled above target")
        s += term
        if mag < target_eps:
            return s
        prev = mag
        k += 1


def _pq_asym(t, nu: int, target_eps):
    """Hankel P and Q factor series at argument t."""
    mu = 4 * nu * nu
    # a_k sequence with alternation folded in: a_k = a_{k-1}(mu-(2k-1)^2)/(8k t)
    a = mpf(1)
    p = mpf(1)
    q = mpf(0)
    k = 1
    prev = mpf("inf")
    while True:
        a = a * (mu - (2 * k - 1) ** 2) / (8 * k * t)
        mag = abs(a)
        if mag >= prev:
            raise _AsymFail("expansion stalled above target")
        if k % 4 == 1:
            q += a
        elif k % 4 == 2:
            p -= a
        elif k % 4 == 3:
            q -= a
        else:
            p += a
        if mag < target_eps:
            return p, q
        prev = mag
        k += 1


def bessel_eval(kind: str, t, prec: int = 53):
    """Evaluate one Bessel kind at t > 0 to ``prec`` bits (relative).

    J0 also accepts t = 0.  K and Y kinds require t > 0.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    with mp.workprec(prec + 8):
        t = mpf(t)
    if t < 0 or (t == 0 and kind in ("K0", "K1", "Y0")):
        raise ValueError(f"{kind} requires a positive argument")
    if t == 0:
        with mp.workprec(prec):
            return mpf(1) if kind in ("I0", "J0") else mpf(0)
    tf = float(t)
    wp = prec + 16

    if kind in ("I0", "I1", "K0", "K1"):
        if _asym_ok(tf, wp):
            try:
                with mp.workprec(wp + 8):
                    eps = mpf(2) ** (-wp - 1)
                    if kind in ("K0", "K1"):
                        nu = 0 if kind == "K0" else 1
                        fac = _ik_asym(t, nu, 1, eps)
                        val = mp.sqrt(mp.pi / (2 * t)) * mp.exp(-t) * fac
                    else:
                        nu = 0 if kind == "I0" else 1
                        fac = _ik_asym(t, nu, -1, eps)
                        val = mp.exp(t) / mp.sqrt(2 * mp.pi * t) * fac
                with mp.workprec(prec):
                    return +val
            except _AsymFail:
                pass
        boost = int(2.886 * tf) + 24 if kind in ("K0", "K1") else 8
        with mp.workprec(wp + boost):
            if kind == "I0":
                val = _i_series(t, 0)
            elif kind == "I1":
                val = _i_series(t, 1)
            elif kind == "K0":
                val = _k_series(t, 0)
            else:
                val = _k_series(t, 1)
        with mp.workprec(prec):
            return +val

    # oscillatory kinds
    internal = {"J0": ("J", 0), "J1": ("J", 1), "Y0": ("Y", 0)}[kind]
    return _jy_eval(internal[0], internal[1], t, prec)


def _jy_eval(family: str, nu: int, t, prec: int):
    tf = float(t)
    wp = prec + 16
    if tf > 1 and _asym_ok(tf, wp):
        try:
            with mp.workprec(wp + 8):
                eps = mpf(2) ** (-wp)
                p, q = _pq_asym(t, nu, eps)
                w = t - (2 * nu + 1) * mp.pi / 4
                amp = mp.sqrt(2 / (mp.pi * t))
                if family == "J":
                    val = amp * (p * mp.cos(w) - q * mp.sin(w))
                else:
                    val = amp * (p * mp.sin(w) + q * mp.cos(w))
            with mp.workprec(prec):
                return +val
        except _AsymFail:
            pass
    boost = int(1.4427 * tf) + 24
    with mp.workprec(wp + boost):
        t_b = mpf(t)
        if family == "J":
            val = _j_series(t_b, nu)
        else:
            val = _y_series(t_b, nu)
    with mp.workprec(prec):
        return +val


def bessel_y1(t, prec: int = 53):
    """Internal Y1 (used for polishing Y0 zeros); same contract as bessel_eval."""
    return _jy_eval("Y", 1, t, prec)
