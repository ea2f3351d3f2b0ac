"""Named constants at explicit precision."""

from __future__ import annotations

import mpmath as mp

_NAMES = ("pi", "euler_gamma", "log2", "bologna")


def constants(name: str, prec: int = 384):
    """pi, euler_gamma, log2, or the Gamma-product constant

        bologna = Gamma(1/15) Gamma(2/15) Gamma(4/15) Gamma(8/15)
                  / (240 sqrt(5) pi^2),

    correctly rounded to ``prec`` bits."""
    if name not in _NAMES:
        raise ValueError(f"unknown constant {name!r}")
    with mp.workprec(prec + 16):
        if name == "pi":
            v = +mp.pi
        elif name == "euler_gamma":
            v = +mp.euler
        elif name == "log2":
            v = mp.log(2)
        else:
            g = mp.mpf(1)
            for k in (1, 2, 4, 8):
                g *= mp.gamma(mp.mpf(k) / 15)
            v = g / (240 * mp.sqrt(5) * mp.pi**2)
    with mp.workprec(prec):
        return +v
