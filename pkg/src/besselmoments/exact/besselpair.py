"""Closed symbolic combinations of a modified-Bessel pair {B0, B1}.

The derivative rules close the pair under d/dt:

    I-pair:  I0' = I1,          I1' = I0 - I1/t
    K-pair:  K0' = -K1,         K1' = -K0 - K1/t

so any expression c0(t)*B0 + c1(t)*B1 with Laurent-polynomial coefficients
stays in the same shape under differentiation and under application of a
differential operator.  A bivariate variant with kernels B0(v*t), B1(v*t)
supports both d/dt and d/dv and is the workhorse for the off-shell
operator identities.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Tuple

from .poly import LaurentPoly, Q
from .diffop import DiffOp

I_PAIR = "I"
K_PAIR = "K"


class BesselPairExpr:
    """c0(t) * B0(t) + c1(t) * B1(t) with a fixed flavor I or K."""

    __slots__ = ("flavor", "c0", "c1")

    def __init__(self, flavor: str, c0: LaurentPoly, c1: LaurentPoly):
        if flavor not in (I_PAIR, K_PAIR):
            raise ValueError("flavor must be 'I' or 'K'")
        if c0.var != c1.var:
            raise ValueError("coefficient variables differ")
        self.flavor = flavor
        self.c0 = c0
        self.c1 = c1

    @classmethod
    def b0(cls, flavor: str, var: str = "t") -> "BesselPairExpr":
        return cls(flavor, LaurentPoly(var, {0: 1}), LaurentPoly(var))

    @property
    def var(self) -> str:
        return self.c0.var

    def _check(self, other: "BesselPairExpr"):
        if self.flavor != other.flavor or self.var != other.var:
            raise ValueError("flavor/variable mismatch")

    def __add__(self, other: "BesselPairExpr") -> "BesselPairExpr":
        self._check(other)
        return BesselPairExpr(self.flavor, self.c0 + other.c0, self.c1 + other.c1)

    def __neg__(self):
        return BesselPairExpr(self.flavor, -self.c0, -self.c1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "BesselPairExpr":
        return BesselPairExpr(self.flavor, self.c0 * c, self.c1 * c)

    def mul_laurent(self, p: LaurentPoly) -> "BesselPairExpr":
        return BesselPairExpr(self.flavor, self.c0 * p, self.c1 * p)

    def derivative(self) -> "BesselPairExpr":
        tinv = LaurentPoly.monomial(self.var, -1)
        if self.flavor == I_PAIR:
            d0 = self.c0.derivative() + self.c1
            d1 = self.c0 + self.c1.derivative() - self.c1 * tinv
        else:
            d0 = self.c0.derivative() - self.c1
            d1 = -self.c0 + self.c1.derivative() - self.c1 * tinv
        return BesselPairExpr(self.flavor, d0, d1)

    def __eq__(self, other):
        return (
            isinstance(other, BesselPairExpr)
            and self.flavor == other.flavor
            and self.c0 == other.c0
            and self.c1 == other.c1
        )

    def __repr__(self):
        b = "I" if self.flavor == I_PAIR else "K"
        return f"({self.c0!r})*{b}0 + ({self.c1!r})*{b}1"


def apply_to_bessel_pair(op: DiffOp, e: BesselPairExpr) -> BesselPairExpr:
    """Apply sum_k c_k(t) d^k/dt^k to a pair expression, exactly."""
    if op.var != e.var:
        raise ValueError("operator and expression variable differ")
    derivs = [e]
    for _ in range(op.order):
        derivs.append(derivs[-1].derivative())
    out = BesselPairExpr(e.flavor, LaurentPoly(e.var), LaurentPoly(e.var))
    for k, c in enumerate(op.coeffs):
        if not c.is_zero():
            out = out + derivs[k].mul_laurent(c)
    return out


class KernelPairExpr:
    """c0(v,t) * B0(v t) + c1(v,t) * B1(v t), coefficients Laurent in v and t.

    Closed under both d/dt and d/dv:

        d/dt B0(vt) = +- v B1(vt)
        d/dt B1(vt) = +- v B0(vt) - B1(vt)/t
        d/dv B0(vt) = +- t B1(vt)
        d/dv B1(vt) = +- t B0(vt) - B1(vt)/v

    with upper signs for the I-pair and lower signs for the K-pair.
    Coefficients are dicts (v-exponent, t-exponent) -> Fraction.
    """

    __slots__ = ("flavor", "c0", "c1")

    def __init__(self, flavor: str, c0: Dict[Tuple[int, int], Fraction], c1=None):
        if flavor not in (I_PAIR, K_PAIR):
            raise ValueError("flavor must be 'I' or 'K'")
        self.flavor = flavor
        self.c0 = {k: Q(v) for k, v in (c0 or {}).items() if v}
        self.c1 = {k: Q(v) for k, v in (c1 or {}).items() if v}

    @classmethod
    def b0(cls, flavor: str) -> "KernelPairExpr":
        return cls(flavor, {(0, 0): Q(1)})

    @staticmethod
    def _add(a, b, s=1):
        out = dict(a)
        for k, v in b.items():
            out[k] = out.get(k, Q(0)) + s * v
            if not out[k]:
                del out[k]
        return out

    @staticmethod
    def _mul_mono(c, dv, dt, s):
        return {(i + dv, j + dt): v * s for (i, j), v in c.items()}

    @staticmethod
    def _d(c, wrt):
        out = {}
        for (i, j), v in c.items():
            e = i if wrt == "v" else j
            if e:
                key = (i - 1, j) if wrt == "v" else (i, j - 1)
                out[key] = out.get(key, Q(0)) + e * v
        return out

    def __add__(self, other: "KernelPairExpr") -> "KernelPairExpr":
        if self.flavor != other.flavor:
            raise ValueError("flavor mismatch")
        return KernelPairExpr(
            self.flavor, self._add(self.c0, other.c0), self._add(self.c1, other.c1)
        )

    def scale_mono(self, dv: int, dt: int, s) -> "KernelPairExpr":
        s = Q(s)
        return KernelPairExpr(
            self.flavor,
            self._mul_mono(self.c0, dv, dt, s),
            self._mul_mono(self.c1, dv, dt, s),
        )

    def d_t(self) -> "KernelPairExpr":
        sgn = 1 if self.flavor == I_PAIR else -1
        d0 = self._add(self._d(self.c0, "t"), self._mul_mono(self.c1, 1, 0, sgn))
        d1 = self._add(
            self._add(self._d(self.c1, "t"), self._mul_mono(self.c0, 1, 0, sgn)),
            self._mul_mono(self.c1, 0, -1, 1),
            s=-1,
        )
        return KernelPairExpr(self.flavor, d0, d1)

    def d_v(self) -> "KernelPairExpr":
        sgn = 1 if self.flavor == I_PAIR else -1
        d0 = self._add(self._d(self.c0, "v"), self._mul_mono(self.c1, 0, 1, sgn))
        d1 = self._add(
            self._add(self._d(self.c1, "v"), self._mul_mono(self.c0, 0, 1, sgn)),
            self._mul_mono(self.c1, -1, 0, 1),
            s=-1,
        )
        return KernelPairExpr(self.flavor, d0, d1)

    def d_u(self) -> "KernelPairExpr":
        """d/du with u = v^2, i.e. (1/(2v)) d/dv."""
        return self.d_v().scale_mono(-1, 0, Q(1, 2))

    def __eq__(self, other):
        return (
            isinstance(other, KernelPairExpr)
            and self.flavor == other.flavor
            and self.c0 == other.c0
            and self.c1 == other.c1
        )

    def is_zero(self):
        return not self.c0 and not self.c1

    def __repr__(self):
        def fmt(c):
            return " + ".join(
                f"{val}*v^{i}*t^{j}" for (i, j), val in sorted(c.items())
            ) or "0"

        b = self.flavor
        return f"[{fmt(self.c0)}]*{b}0(vt) + [{fmt(self.c1)}]*{b}1(vt)"
