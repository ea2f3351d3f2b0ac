"""Dense univariate polynomials and sparse Laurent polynomials over Q.

Coefficients are `fractions.Fraction` throughout; arithmetic never rounds.
The variable name is ordinary data, so the same machinery serves operators
in ``t`` (Bessel argument), ``u`` (off-shell parameter) and ``xi``
(sum-rule variable).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Q = Fraction
Scalar = Union[int, Fraction]


def _q(x: Scalar) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Poly:
    """Dense polynomial; ``coeffs[k]`` is the coefficient of ``var**k``.

    Trailing zeros are trimmed on construction.  ``degree()`` of the zero
    polynomial is the sentinel -1.
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, var: str, coeffs: Iterable[Scalar] = ()):
        cs = [_q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.var = var
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, var: str, c: Scalar) -> "Poly":
        return cls(var, [c])

    @classmethod
    def x(cls, var: str) -> "Poly":
        return cls(var, [0, 1])

    @classmethod
    def monomial(cls, var: str, k: int, c: Scalar = 1) -> "Poly":
        return cls(var, [0] * k + [c])

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Q(0)

    def _check(self, other: "Poly"):
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.var, other)
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.var, [self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.var, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, Poly) else Poly.const(self.var, -_q(other)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(self.var, [c * other for c in self.coeffs])
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly(self.var)
        out = [Q(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(self.var, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        r = Poly.const(self.var, 1)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.var, other)
        return isinstance(other, Poly) and self.var == other.var and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def derivative(self) -> "Poly":
        return Poly(self.var, [k * c for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        """Horner evaluation; works for Fraction, int, mpf, mpc inputs."""
        r = 0
        for c in reversed(self.coeffs):
            r = r * x + c
        return r

    def map_exponents(self, factor: int) -> "Poly":
        """Return p(var**factor) as a polynomial in var."""
        out = [Q(0)] * (factor * self.degree() + 1) if self.coeffs else []
        for k, c in enumerate(self.coeffs):
            if c:
                out[factor * k] = c
        return Poly(self.var, out)

    def content(self) -> Fraction:
        """Positive rational c with self/c having coprime integer coefficients."""
        from math import gcd

        if self.is_zero():
            return Q(1)
        num = 0
        den = 1
        for c in self.coeffs:
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        return Q(num, den)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return Poly(self.var, [c / lead for c in self.coeffs])

    def divmod(self, other: "Poly"):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(self.var), self
        quo = [Q(0)] * (dq + 1)
        oc = other.coeffs
        for k in range(dq, -1, -1):
            if len(rem) == k + len(oc):
                c = rem[-1] / oc[-1]
                quo[k] = c
                for i, b in enumerate(oc):
                    rem[k + i] -= c * b
                while rem and rem[-1] == 0:
                    rem.pop()
        return Poly(self.var, quo), Poly(self.var, rem)

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*{self.var}")
            else:
                parts.append(f"{c}*{self.var}^{k}")
        return " + ".join(parts)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q via the Euclidean algorithm."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


class LaurentPoly:
    """Sparse Laurent polynomial: map exponent (any integer) -> coefficient."""

    __slots__ = ("var", "terms")

    def __init__(self, var: str, terms=None):
        self.var = var
        t = {}
        if terms:
            for e, c in (terms.items() if isinstance(terms, dict) else terms):
                c = _q(c)
                if c:
                    t[int(e)] = t.get(int(e), Q(0)) + c
        self.terms = {e: c for e, c in t.items() if c}

    @classmethod
    def monomial(cls, var: str, e: int, c: Scalar = 1) -> "LaurentPoly":
        return cls(var, {e: c})

    @classmethod
    def from_poly(cls, p: Poly) -> "LaurentPoly":
        return cls(p.var, {k: c for k, c in enumerate(p.coeffs)})

    def is_zero(self) -> bool:
        return not self.terms

    def min_exp(self) -> int:
        return min(self.terms) if self.terms else 0

    def max_exp(self) -> int:
        return max(self.terms) if self.terms else 0

    def __getitem__(self, e: int) -> Fraction:
        return self.terms.get(e, Q(0))

    def _check(self, other):
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly(self.var, {0: other})
        self._check(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, Q(0)) + c
        return LaurentPoly(self.var, t)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.var, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly(self.var, {0: other})
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly(self.var, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                t[e] = t.get(e, Q(0)) + c1 * c2
        return LaurentPoly(self.var, t)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly(self.var, {0: other})
        return (
            isinstance(other, LaurentPoly)
            and self.var == other.var
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.var, tuple(sorted(self.terms.items()))))

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly(self.var, {e - 1: e * c for e, c in self.terms.items() if e})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by var**k."""
        return LaurentPoly(self.var, {e + k: c for e, c in self.terms.items()})

    def to_poly(self) -> Poly:
        if self.terms and self.min_exp() < 0:
            raise ValueError("negative exponents present")
        out = [Q(0)] * (self.max_exp() + 1) if self.terms else []
        for e, c in self.terms.items():
            out[e] = c
        return Poly(self.var, out)

    def __call__(self, x):
        r = 0
        for e, c in sorted(self.terms.items()):
            r += c * x**e
        return r

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"{c}*{self.var}^{e}" for e, c in sorted(self.terms.items())
        )


class RationalFunc:
    """Rational function num/den over Q with a monic, gcd-reduced denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = None):
        if den is None:
            den = Poly.const(num.var, 1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not num.is_zero():
            g = poly_gcd(num, den)
            if g.degree() > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
        lead = den.coeffs[-1]
        self.num = num * (1 / lead)
        self.den = den * (1 / lead)

    @classmethod
    def const(cls, var: str, c: Scalar) -> "RationalFunc":
        return cls(Poly.const(var, c))

    @property
    def var(self):
        return self.num.var

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFunc.const(self.var, other)
        return RationalFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunc(-self.num, self.den)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFunc.const(self.var, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalFunc(self.num * other, self.den)
        if isinstance(other, Poly):
            other = RationalFunc(other)
        return RationalFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalFunc(self.num, self.den * other)
        if isinstance(other, Poly):
            other = RationalFunc(other)
        return RationalFunc(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = RationalFunc(other if isinstance(other, Poly) else Poly.const(self.var, other))
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def derivative(self) -> "RationalFunc":
        return RationalFunc(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def __repr__(self):
        return f"({self.num!r})/({self.den!r})"
