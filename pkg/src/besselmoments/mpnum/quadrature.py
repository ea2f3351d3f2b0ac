"""Quadrature engine for the moment integrals.

Three regimes, matching the integrands that actually occur:

* finite smooth or endpoint-singular pieces: tanh-sinh (doubly
  exponential) with level doubling; nodes carry the distance to the
  nearest endpoint so log-type singularities lose no precision;
* semi-infinite exponentially decaying pieces: the substitution
  t = a - log(v) reduces to a finite doubly-exponential integral;
* semi-infinite power-law tails: an explicit asymptotic model,
  integrated in closed form beyond a cut T;
* oscillatory kernels: partition at the kernel's zeros, integrate each
  panel, and accelerate the panel sums (alternating acceleration when the
  signs alternate strictly, Richardson extrapolation otherwise).

The reported error estimate of a level-doubling integral is at least
|result(level L) - result(level L-1)|, which is what tests assert.
Node tables are cached per (precision bucket, level) and shared by every
integral in the process; all evaluation is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

import mpmath as mp
from mpmath import mpf

_NODE_CACHE = {}


def _prec_bucket(wp: int) -> int:
    return ((wp + 63) // 64) * 64


def to_mpf(c):
    """mpf from int, float, mpf or Fraction at the ambient precision."""
    from fractions import Fraction

    if isinstance(c, Fraction):
        return mpf(c.numerator) / c.denominator
    return mpf(c)


def _ts_level_nodes(wp: int, level: int):
    """Tanh-sinh nodes for one level (odd indices only for level >= 1).

    Returns a list of (delta, weight) with delta the distance from the node
    to the endpoint x=1 (nodes come in symmetric pairs; delta < 1 for all).
    The j=0 node (x=0, delta=1) appears only at level 0.
    """
    key = (_prec_bucket(wp), level)
    if key in _NODE_CACHE:
        return _NODE_CACHE[key]
    with mp.workprec(_prec_bucket(wp) + 32):
        nodes = []
        h = mpf(2) ** (-level)
        piq = mp.pi / 2
        floor = mpf(2) ** (-(_prec_bucket(wp) + 24))
        j = 1 if level == 0 else 1
        if level == 0:
            nodes.append((mpf(1), piq * h))  # x = 0 node: delta = 1, w = h*pi/2
        step = 1 if level == 0 else 2
        while True:
            u = h * j
            c = piq * mp.sinh(u)
            e = mp.exp(-2 * c)
            delta = 2 * e / (1 + e)            # 1 - tanh(c), computed stably
            if delta < floor:
                break
            w = h * piq * mp.cosh(u) * (4 * e / (1 + e) ** 2)  # h pi/2 cosh / cosh^2
            nodes.append((delta, w))
            j += step
        _NODE_CACHE[key] = nodes
        return nodes


def quad_finite(
    f: Callable,
    a,
    b,
    wp: int,
    rel_eps=None,
    max_level: int = 10,
    min_level: int = 3,
):
    """Doubly-exponential integral of f over (a, b).

    Endpoint-singular integrands are fine as long as they are integrable;
    f is never called at a or b exactly.  Returns (value, error_estimate,
    levels_used); the estimate is the last level-to-level difference.
    """
    with mp.workprec(_prec_bucket(wp) + 48):
        a = mpf(a)
        b = mpf(b)
        if rel_eps is None:
            rel_eps = mpf(2) ** (-(wp + 4))
        half = (b - a) / 2
        total = None
        prev = None
        err = mp.inf
        for level in range(0, max_level + 1):
            s = mpf(0)
            for delta, w in _ts_level_nodes(wp, level):
                dl = half * delta
                if delta == 1:
                    s += w * f(a + half)
                    continue
                fr = f(b - dl)
                fl = f(a + dl)
                s += w * (fr + fl)
            total = s * half if level == 0 else total / 2 + s * half
            if prev is not None:
                err = abs(total - prev)
                scale = max(abs(total), mpf(1) * 0)
                if level >= min_level and err <= rel_eps * max(scale, mpf(2) ** (-wp)):
                    break
            prev = total
        return +total, +err, level


def quad_exp_tail(
    f: Callable, a, wp: int, rel_eps=None, max_level: int = 10, rate: float = 1.0
):
    """Integral of an exponentially decaying f over (a, inf).

    Substitutes t = a - log(v)/rate, v in (0,1); the doubly-exponential
    rule absorbs the endpoint behavior.  ``rate`` should underestimate the
    true exponential decay so the node range covers the integrand's
    support; slowly decaying kernels pass their actual rate, everything
    with rate >= 3/4 shares the canonical unit-rate node grid (which keeps
    the Bessel value cache hot across different moments).
    """
    with mp.workprec(wp + 24):
        a = mpf(a)
        r = mpf(1) if rate >= 0.75 else mpf(rate)

        def g(v):
            return f(a - mp.log(v) / r) / (v * r)

        return quad_finite(g, 0, 1, wp, rel_eps=rel_eps, max_level=max_level)


def quad_moment(
    integrand: Callable,
    prec: int,
    decay_rate: float = 1.0,
    split=1,
    max_level: int = 10,
):
    """Standard split for Bessel-moment integrands on (0, inf):
    a doubly-exponential pass on (0, split] plus an exponential-tail pass
    on [split, inf).  Returns (value, error_estimate)."""
    wp = prec + 24
    v1, e1, _ = quad_finite(integrand, 0, split, wp)
    v2, e2, _ = quad_exp_tail(
        integrand, split, wp, max_level=max_level, rate=decay_rate
    )
    with mp.workprec(wp):
        return v1 + v2, e1 + e2


@dataclass
class TailModel:
    """Asymptotic tail  integrand(t) ~ sum_i coeff_i * t**(-power_i)  for t >= cut."""

    cut: int
    terms: Sequence[Tuple[int, object]]  # (power, coefficient)

    def integral_beyond(self, wp: int):
        with mp.workprec(wp):
            s = mpf(0)
            for p, c in self.terms:
                if p <= 1:
                    raise ValueError("non-integrable tail term")
                s += to_mpf(c) * mpf(self.cut) ** (1 - p) / (p - 1)
            return s


def quad_moment_power_tail(integrand: Callable, prec: int, tail: TailModel):
    """(0,1] + [1,cut] + analytic tail for power-law integrands."""
    wp = prec + 24
    v1, e1, _ = quad_finite(integrand, 0, 1, wp)
    with mp.workprec(wp + 24):
        lo, hi = mpf(1), mpf(tail.cut)

        def g(s):
            t = mp.exp(s)
            return integrand(t) * t

        v2, e2, _ = quad_finite(g, 0, mp.log(hi), wp)
        v3 = tail.integral_beyond(wp)
        # crude bound for the dropped model remainder: magnitude of the last
        # kept term at the cut, integrated
        p_last, c_last = tail.terms[-1]
        e3 = abs(to_mpf(c_last)) * hi ** (1 - p_last) / (p_last - 1)
        return v1 + v2 + v3, e1 + e2 + e3 * mpf(2) ** (-8)


def cvz_alternating_sum(terms: Sequence) -> mpf:
    """Cohen-Villegas-Zagier acceleration of sum_k (-1)^k a_k, a_k = terms[k] > 0."""
    n = len(terms)
    with mp.workprec(mp.mp.prec + 10 + int(1.6 * n)):
        d = (3 + mp.sqrt(8)) ** n
        d = (d + 1 / d) / 2
        b = mpf(-1)
        c = -d
        s = mpf(0)
        for k in range(n):
            c = b - c
            s += c * terms[k]
            b = b * (k + n) * (k - n) / ((k + mpf(1) / 2) * (k + 1))
        return s / d


def richardson_limit(partial: Sequence) -> Tuple[mpf, mpf]:
    """Richardson extrapolation of a sequence of partial sums."""
    v, _ = mp.richardson(list(partial))
    v2, _ = mp.richardson(list(partial[:-2])) if len(partial) > 6 else (v, None)
    return v, abs(v - v2)


def geometric_log_limit(vals: Sequence) -> Tuple[mpf, mpf]:
    """Limit of S_j = L + sum_p h^p (a_p j + b_p) with h = 2^-j.

    Sampled on a geometric left-approach sequence, each power p carries a
    log factor (the index j); eliminating with weight 2^p twice per power
    removes both the j-linear and the plain h^p parts.
    """
    s = [mp.mpf(v) for v in vals]
    levels = [(1, 2), (2, 3), (3, 2)]
    for p, reps in levels:
        w = mp.mpf(2) ** p
        for _ in range(reps):
            if len(s) < 3:
                break
            s = [(w * s[i + 1] - s[i]) / (w - 1) for i in range(len(s) - 1)]
    est = s[-1]
    err = abs(s[-1] - s[-2]) if len(s) > 1 else mp.mpf("inf")
    return est, err


def _kernel_zero(kind: str, k: int, wp: int):
    """k-th positive zero of J0, Y0 or J1 (Newton-polished McMahon)."""
    from .bessel import bessel_eval, bessel_y1

    with mp.workprec(wp + 16):
        off = {"J": mpf(1) / 4, "Y": mpf(3) / 4, "J1": -mpf(1) / 4}[kind]
        beta = (k - off) * mp.pi
        if kind == "J1":
            x = beta - 3 / (8 * beta)
        else:
            x = beta + 1 / (8 * beta) - 124 / (3 * (8 * beta) ** 3)
        for _ in range(3 if wp > 64 else 2):
            if kind == "J":
                fx = bessel_eval("J0", x, wp)
                dfx = -bessel_eval("J1", x, wp)
            elif kind == "J1":
                fx = bessel_eval("J1", x, wp)
                dfx = bessel_eval("J0", x, wp) - fx / x
            else:
                fx = bessel_eval("Y0", x, wp)
                dfx = -bessel_y1(x, wp)
            x = x - fx / dfx
        return +x


def _merged_zero_grid(factors, n_points: int, wp: int):
    """Sorted union of scaled kernel zeros for a product of oscillatory
    factors [(kind, omega), ...]; consecutive points bound single-sign
    panels of the product."""
    grids = []
    for kind, omega in factors:
        zs = []
        k = 1
        while len(zs) < n_points + 2:
            zs.append(_kernel_zero(kind, k, wp) / omega)
            k += 1
        grids.append(zs)
    merged = sorted(set().union(*[set(g) for g in grids]))
    # drop near-coincident points (commensurate frequencies)
    out = []
    for z in merged:
        if not out or z - out[-1] > mpf(10) ** (-6):
            out.append(z)
    return out[: n_points + 2]


def quad_oscillatory(
    f: Callable,
    omega,
    kernel: str,
    prec: int,
    n_panels: int = 36,
    max_level: int = 7,
    factors=None,
):
    """Integral over (0, inf) of a smoothly enveloped oscillatory integrand
    f (f includes all kernel factors).

    Partitions at the kernel zeros -- for a product of oscillatory factors,
    pass them all via ``factors`` so the merged grid bounds single-sign
    panels -- integrates panels by the doubly-exponential rule, then
    accelerates: strictly alternating panel sums go through the
    alternating-series accelerator, anything else through Richardson
    extrapolation of the partial sums.  Accuracy is deliberately capped
    (conditional convergence); returns (value, error).
    """
    wp = prec + 16
    with mp.workprec(wp + 16):
        omega = mpf(omega)
        if factors is None:
            factors = [(kernel, omega)]
        zeros = _merged_zero_grid(factors, n_panels, wp)
        # head piece (0, z_1): split log-wise when the first zero is far out
        z1 = zeros[0]
        if z1 > 8:
            vh1, eh1, _ = quad_finite(f, 0, 1, wp, max_level=max_level + 2)

            def g(s):
                t = mp.exp(s)
                return f(t) * t

            vh2, eh2, _ = quad_finite(g, 0, mp.log(z1), wp, max_level=max_level + 2)
            head, ehead = vh1 + vh2, eh1 + eh2
        else:
            head, ehead, _ = quad_finite(f, 0, z1, wp, max_level=max_level + 2)
        panels = []
        run = mpf(0)
        floor_eps = mpf(2) ** (-(prec + 8))
        tiny_streak = 0
        for k in range(len(zeros) - 1):
            v, _, _ = quad_finite(
                f, zeros[k], zeros[k + 1], wp, max_level=max_level, min_level=2
            )
            panels.append(v)
            run += v
            scale = max(abs(head), abs(run))
            if abs(v) < floor_eps * max(scale, floor_eps):
                tiny_streak += 1
                if tiny_streak >= 3:
                    # envelope decays fast enough that the plain sum converged
                    return head + run, ehead + abs(v)
            else:
                tiny_streak = 0
        alternating = all(
            panels[i] * panels[i + 1] < 0 for i in range(len(panels) - 1)
        ) and all(p != 0 for p in panels)
        if alternating:
            sgn = 1 if panels[0] > 0 else -1
            mags = [abs(p) for p in panels]
            full = cvz_alternating_sum(mags) * sgn
            shorter = cvz_alternating_sum(mags[:-2]) * sgn
            tail_err = abs(full - shorter)
            return head + full, ehead + tail_err
        partial = []
        s = mpf(0)
        for p in panels:
            s += p
            partial.append(s)
        v, err = richardson_limit(partial)
        return head + v, ehead + err
