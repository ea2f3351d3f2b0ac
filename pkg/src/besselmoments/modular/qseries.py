"""Truncated Laurent q-expansions with exact rational coefficients.

A QSeries stores coefficients on an integer-step grid starting at a
(possibly fractional) leading exponent: coeffs[i] multiplies
q**(leading + i).  Eta factors start at scale/24; every derived object
used here (Hauptmodul, weight-2 and weight-6 forms, the cubic invariant)
lands on an integer grid after assembly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List

import mpmath as mp

Q = Fraction


class QSeries:
    __slots__ = ("leading", "coeffs")

    def __init__(self, leading, coeffs):
        self.leading = Q(leading)
        cs = [Q(c) for c in coeffs]
        self.coeffs = cs

    @classmethod
    def const(cls, c, nslots: int) -> "QSeries":
        return cls(0, [c] + [0] * (nslots - 1))

    def nslots(self) -> int:
        return len(self.coeffs)

    def copy_trunc(self, n: int) -> "QSeries":
        return QSeries(self.leading, self.coeffs[:n])

    def coefficient(self, exponent) -> Fraction:
        """Coefficient of q**exponent (absolute exponent)."""
        i = Q(exponent) - self.leading
        if i.denominator != 1:
            return Q(0)
        i = int(i)
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        if i < 0:
            return Q(0)
        raise ValueError(f"exponent {exponent} beyond truncation")

    def _aligned(self, other: "QSeries"):
        d = other.leading - self.leading
        if d.denominator != 1:
            raise ValueError("incompatible exponent grids")
        return int(d)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QSeries.const(other, len(self.coeffs))
        d = self._aligned(other)
        if d < 0:
            return other + self
        # other starts d slots later
        n = min(len(self.coeffs), d + len(other.coeffs))
        out = list(self.coeffs[:n])
        for i, c in enumerate(other.coeffs):
            j = i + d
            if j < n:
                out[j] += c
        return QSeries(self.leading, out)

    __radd__ = __add__

    def __neg__(self):
        return QSeries(self.leading, [-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QSeries.const(other, len(self.coeffs))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QSeries(self.leading, [c * other for c in self.coeffs])
        n = min(len(self.coeffs), len(other.coeffs))
        out = [Q(0)] * n
        for i, a in enumerate(self.coeffs):
            if a and i < n:
                bmax = n - i
                for j, b in enumerate(other.coeffs[:bmax]):
                    if b:
                        out[i + j] += a * b
        return QSeries(self.leading + other.leading, out)

    __rmul__ = __mul__

    def inverse(self) -> "QSeries":
        if not self.coeffs or self.coeffs[0] == 0:
            raise ValueError("inverse needs a nonzero first coefficient")
        n = len(self.coeffs)
        a0 = self.coeffs[0]
        out = [Q(0)] * n
        out[0] = 1 / a0
        for k in range(1, n):
            s = Q(0)
            for i in range(1, k + 1):
                if self.coeffs[i]:
                    s += self.coeffs[i] * out[k - i]
            out[k] = -s / a0
        return QSeries(-self.leading, out)

    def __pow__(self, n: int) -> "QSeries":
        if n < 0:
            return self.inverse() ** (-n)
        r = QSeries.const(1, len(self.coeffs))
        b = self
        while n:
            if n & 1:
                r = r * b
            n >>= 1
            if n:
                b = b * b
        return r

    def qdq(self) -> "QSeries":
        """q d/dq, i.e. (1/(2 pi i)) d/dz on the half-plane."""
        return QSeries(
            self.leading,
            [(self.leading + i) * c for i, c in enumerate(self.coeffs)],
        )

    def rescale(self, m: int) -> "QSeries":
        """Substitute q -> q^m (m >= 1); the slot count is preserved, so the
        valid exponent range grows by the factor m."""
        if m < 1:
            raise ValueError("rescale factor must be >= 1")
        n = len(self.coeffs)
        out = [Q(0)] * n
        for i, c in enumerate(self.coeffs):
            if c:
                j = i * m
                if j < n:
                    out[j] = c
                elif c:
                    break
        return QSeries(self.leading * m, out)

    def max_abs_coeff(self) -> Fraction:
        m = Q(0)
        for c in self.coeffs:
            if abs(c) > m:
                m = abs(c)
        return m

    def growth_rate(self) -> float:
        """Per-slot geometric growth of |c_n|, averaged across the last
        quarter window; robust to sign changes and isolated zeros."""
        import math

        n = len(self.coeffs)
        w = max(n // 4, 4)
        lo = [abs(c) for c in self.coeffs[n - 2 * w : n - w]]
        hi = [abs(c) for c in self.coeffs[n - w :]]
        b1 = max(lo) if lo else Q(0)
        b2 = max(hi) if hi else Q(0)
        if not b1 or not b2:
            return 1.05
        return max(math.exp(math.log(float(b2 / b1)) / w), 1.02)

    def eval(self, q, prec: int):
        """Horner evaluation at a numeric q (mpf or mpc), integer grids only."""
        if self.leading.denominator != 1:
            raise ValueError("evaluation requires an integer exponent grid")
        with mp.workprec(prec + 16):
            q = mp.mpmathify(q)
            acc = mp.mpf(0)
            for c in reversed(self.coeffs):
                acc = acc * q
                if c:
                    acc = acc + mp.mpf(c.numerator) / c.denominator
            lead = int(self.leading)
            return acc * q**lead if lead else +acc

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(len(self.coeffs), len(other.coeffs))
        d = other.leading - self.leading
        if d.denominator != 1:
            return False
        d = int(d)
        a = self.coeffs
        b = [Q(0)] * d + list(other.coeffs) if d >= 0 else None
        if b is None:
            return other == self
        n = min(len(a), len(b))
        return a[:n] == b[:n]

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:8])
        return f"QSeries(q^{self.leading} * [{head}, ...], {len(self.coeffs)} slots)"
