"""Linear differential operators with exact Laurent-polynomial coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Sequence, Union

from .poly import LaurentPoly, Poly, Q

CoeffLike = Union[Poly, LaurentPoly, int, Fraction]


def _laurent(var: str, c: CoeffLike) -> LaurentPoly:
    if isinstance(c, LaurentPoly):
        return c
    if isinstance(c, Poly):
        return LaurentPoly.from_poly(c)
    return LaurentPoly(var, {0: c})


class DiffOp:
    """Operator sum_k c_k(x) * d^k/dx^k; ``coeffs[k]`` is a LaurentPoly.

    Values are immutable; composition and addition are exact.
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, var: str, coeffs: Sequence[CoeffLike] = ()):
        cs = [_laurent(var, c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.var = var
        self.coeffs = tuple(cs)

    @classmethod
    def identity(cls, var: str) -> "DiffOp":
        return cls(var, [1])

    @classmethod
    def d(cls, var: str, k: int = 1) -> "DiffOp":
        """The k-th derivative operator."""
        return cls(var, [0] * k + [1])

    @classmethod
    def mul_by(cls, var: str, p: CoeffLike) -> "DiffOp":
        return cls(var, [p])

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> LaurentPoly:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return LaurentPoly(self.var)

    def _check(self, other: "DiffOp"):
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")

    def __add__(self, other: "DiffOp") -> "DiffOp":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return DiffOp(self.var, [self.coeff(k) + other.coeff(k) for k in range(n)])

    def __neg__(self) -> "DiffOp":
        return DiffOp(self.var, [-c for c in self.coeffs])

    def __sub__(self, other: "DiffOp") -> "DiffOp":
        return self + (-other)

    def __rmul__(self, s):
        if isinstance(s, (int, Fraction)):
            return DiffOp(self.var, [c * s for c in self.coeffs])
        return NotImplemented

    def __mul__(self, other):
        """Operator composition self after other (apply ``other`` first)."""
        if isinstance(other, (int, Fraction)):
            return self.__rmul__(other)
        self._check(other)
        out = {}
        for k, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero():
                    continue
                # d^k (b * d^j f) = sum_i C(k,i) b^{(k-i)} d^{i+j} f
                bd = b
                derivs = [bd]
                for _ in range(k):
                    bd = bd.derivative()
                    derivs.append(bd)
                for i in range(k + 1):
                    c = a * derivs[k - i] * comb(k, i)
                    m = i + j
                    out[m] = out.get(m, LaurentPoly(self.var)) + c
        n = max(out) + 1 if out else 0
        return DiffOp(self.var, [out.get(k, LaurentPoly(self.var)) for k in range(n)])

    def __eq__(self, other):
        return (
            isinstance(other, DiffOp)
            and self.var == other.var
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def map_coeffs(self, f) -> "DiffOp":
        return DiffOp(self.var, [f(c) for c in self.coeffs])

    def __repr__(self):
        if self.is_zero():
            return "0"
        return " + ".join(
            f"({c!r})*D^{k}" for k, c in enumerate(self.coeffs) if not c.is_zero()
        )


def formal_adjoint(op: DiffOp) -> DiffOp:
    """Formal adjoint sum_k (-1)^k (d/dx)^k (c_k . ), expanded to standard form.

    An exact involution: ``formal_adjoint(formal_adjoint(op)) == op``.
    """
    out = {}
    var = op.var
    for k, c in enumerate(op.coeffs):
        if c.is_zero():
            continue
        derivs = [c]
        for _ in range(k):
            derivs.append(derivs[-1].derivative())
        sign = -1 if k % 2 else 1
        for i in range(k + 1):
            term = derivs[k - i] * (sign * comb(k, i))
            out[i] = out.get(i, LaurentPoly(var)) + term
    n = max(out) + 1 if out else 0
    return DiffOp(var, [out.get(k, LaurentPoly(var)) for k in range(n)])


def bmw_operator(m: int, var: str = "t") -> DiffOp:
    """Order-(m+1) operator annihilating all products of m solutions of the
    modified Bessel equation, built by the Bronstein-Mulders-Weil recursion

        L_{k+1} = (t*d/dt) L_k - k*(m+1-k) * t^2 * L_{k-1},   k = 1..m,

    seeded with L_0 = 1, L_1 = t*d/dt.  Coefficients are integer polynomials.
    """
    if m < 1:
        raise ValueError("factor count must be >= 1")
    t = LaurentPoly.monomial(var, 1)
    t2 = LaurentPoly.monomial(var, 2)
    tD = DiffOp(var, [0, t])
    prev = DiffOp.identity(var)
    cur = tD
    for k in range(1, m + 1):
        nxt = tD * cur - Q(k * (m + 1 - k)) * (DiffOp.mul_by(var, t2) * prev)
        prev, cur = cur, nxt
    return cur
