"""Truncated series in t with log(t) powers, over Q.

A LogSeries represents  sum_l log(t)^l * S_l(t)  where each S_l is a
truncated series.  Coefficient lists share a common integer exponent
offset ``base`` (normally 0; differentiation can push it below zero
transiently, e.g. (y*log t)' contains y/t).  Every value carries its own
valid truncation order ``trunc``: coefficients of t^n are correct for
n < trunc and unknown beyond.  Operations propagate the sharpest valid
order, and tests must assert against the carried order, never a global
constant.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List

from .poly import Q
from .diffop import DiffOp


class LogSeries:
    __slots__ = ("var", "trunc", "base", "entries")

    def __init__(self, var, trunc, entries=None, base=0):
        self.var = var
        self.trunc = int(trunc)
        base = int(base)
        es: Dict[int, List[Fraction]] = {}
        if entries:
            n = self.trunc - base
            for l, cs in entries.items():
                cs = [Q(c) for c in cs[:n]]
                while cs and cs[-1] == 0:
                    cs.pop()
                if cs:
                    es[int(l)] = cs
        # drop all-zero leading columns so base is the true representation floor
        while es and all(cs[0] == 0 for cs in es.values() if cs):
            for l in list(es):
                es[l] = es[l][1:]
                if not es[l]:
                    del es[l]
            base += 1
        self.base = base if es else min(base, self.trunc)
        self.entries = es

    @classmethod
    def zero(cls, var: str, trunc: int) -> "LogSeries":
        return cls(var, trunc)

    @classmethod
    def from_coeffs(cls, var, trunc, coeffs, logpow=0, base=0) -> "LogSeries":
        return cls(var, trunc, {logpow: list(coeffs)}, base=base)

    def is_zero(self) -> bool:
        return not self.entries

    def coeff(self, n: int, logpow: int = 0) -> Fraction:
        """Coefficient of t^n log^logpow; n must lie below the valid order."""
        if n >= self.trunc:
            raise ValueError(f"order {n} beyond valid order {self.trunc}")
        cs = self.entries.get(logpow, [])
        i = n - self.base
        return cs[i] if 0 <= i < len(cs) else Q(0)

    def max_logpow(self) -> int:
        return max(self.entries) if self.entries else 0

    def valuation(self) -> int:
        """Smallest exponent with a nonzero coefficient; trunc if none."""
        v = None
        for cs in self.entries.values():
            for k, c in enumerate(cs):
                if c:
                    v = k if v is None else min(v, k)
                    break
        return self.trunc if v is None else self.base + v

    def _check(self, other: "LogSeries"):
        if self.var != other.var:
            raise ValueError("variable mismatch")

    def __add__(self, other: "LogSeries") -> "LogSeries":
        self._check(other)
        trunc = min(self.trunc, other.trunc)
        base = min(self.base, other.base)
        n = trunc - base
        es: Dict[int, List[Fraction]] = {}
        for l in set(self.entries) | set(other.entries):
            row = [Q(0)] * n
            for src in (self, other):
                cs = src.entries.get(l)
                if cs:
                    off = src.base - base
                    for k, c in enumerate(cs):
                        if 0 <= off + k < n:
                            row[off + k] += c
            es[l] = row
        return LogSeries(self.var, trunc, es, base=base)

    def __neg__(self) -> "LogSeries":
        return LogSeries(
            self.var,
            self.trunc,
            {l: [-c for c in cs] for l, cs in self.entries.items()},
            base=self.base,
        )

    def __sub__(self, other: "LogSeries") -> "LogSeries":
        return self + (-other)

    def scale(self, c) -> "LogSeries":
        c = Q(c)
        if not c:
            return LogSeries.zero(self.var, self.trunc)
        return LogSeries(
            self.var,
            self.trunc,
            {l: [c * x for x in cs] for l, cs in self.entries.items()},
            base=self.base,
        )

    def __mul__(self, other: "LogSeries") -> "LogSeries":
        self._check(other)
        v1, v2 = self.valuation(), other.valuation()
        trunc = min(self.trunc + v2, other.trunc + v1)
        if self.is_zero() or other.is_zero():
            return LogSeries.zero(self.var, trunc)
        base = self.base + other.base
        n = trunc - base
        es: Dict[int, List[Fraction]] = {}
        for l1, a in self.entries.items():
            for l2, b in other.entries.items():
                row = es.setdefault(l1 + l2, [Q(0)] * n)
                for i, ca in enumerate(a):
                    if not ca or i >= n:
                        continue
                    jmax = min(len(b), n - i)
                    for j in range(jmax):
                        if b[j]:
                            row[i + j] += ca * b[j]
        return LogSeries(self.var, trunc, es, base=base)

    def __pow__(self, n: int) -> "LogSeries":
        if n < 0:
            raise ValueError("negative power")
        if n == 0:
            return LogSeries.from_coeffs(self.var, self.trunc, [1])
        r = self
        for _ in range(n - 1):
            r = r * self
        return r

    def derivative(self) -> "LogSeries":
        """d/dt; the valid order drops by one."""
        trunc = self.trunc - 1
        base = self.base - 1
        n = trunc - base
        es: Dict[int, List[Fraction]] = {}

        def row(l):
            return es.setdefault(l, [Q(0)] * n)

        for l, cs in self.entries.items():
            # d/dt [t^e log^l] = e t^{e-1} log^l + l t^{e-1} log^{l-1}
            for k, c in enumerate(cs):
                if not c:
                    continue
                e = self.base + k
                if e - 1 >= trunc:
                    continue
                i = e - 1 - base
                if e:
                    row(l)[i] += e * c
                if l:
                    row(l - 1)[i] += l * c
        return LogSeries(self.var, trunc, es, base=base)

    def shift(self, j: int) -> "LogSeries":
        """Multiply by t**j; valid order moves with the exponents."""
        return LogSeries(
            self.var, self.trunc + j, dict(self.entries), base=self.base + j
        )

    def __eq__(self, other):
        return (
            isinstance(other, LogSeries)
            and self.var == other.var
            and self.trunc == other.trunc
            and self.base == other.base
            and self.entries == other.entries
        )

    def __repr__(self):
        if self.is_zero():
            return f"O({self.var}^{self.trunc})"
        bits = []
        for l in sorted(self.entries):
            head = ", ".join(str(c) for c in self.entries[l][:6])
            bits.append(f"log^{l}*{self.var}^{self.base}*[{head}, ...]")
        return " + ".join(bits) + f" + O({self.var}^{self.trunc})"


def apply_to_log_series(op: DiffOp, s: LogSeries) -> LogSeries:
    """Apply a differential operator to a LogSeries, exactly.

    The valid order of the result follows from the per-monomial bookkeeping
    (each c*t^j*D^k term is valid to input order - k + j); an error is
    raised if the combined order falls below 1.
    """
    if op.var != s.var:
        raise ValueError("operator and series variable differ")
    derivs = [s]
    for _ in range(op.order):
        derivs.append(derivs[-1].derivative())
    out = None
    for k, c in enumerate(op.coeffs):
        if c.is_zero():
            continue
        for e, coef in sorted(c.terms.items()):
            term = derivs[k].shift(e).scale(coef)
            out = term if out is None else out + term
    if out is None:
        return LogSeries.zero(s.var, s.trunc)
    if out.trunc < 1:
        raise ValueError("truncation order exhausted by operator application")
    return out


def frobenius_solutions(trunc: int, var: str = "t"):
    """Frobenius basis of the modified Bessel equation t^2 y'' + t y' - t^2 y = 0.

    Returns (y1, y2) with y1 = sum_k (t/2)^{2k} / (k!)^2 and
    y2 = y1*log(t) + S(t), where the correction series
    S = -sum_{k>=1} H_k (t/2)^{2k} / (k!)^2 has zero constant term.  Both
    satisfy the equation up to the carried truncation order.
    """
    if trunc < 4:
        raise ValueError("truncation order must be >= 4")
    y1 = [Q(0)] * trunc
    s = [Q(0)] * trunc
    c = Q(1)
    h = Q(0)
    y1[0] = c
    k = 1
    while 2 * k < trunc:
        c = c / (4 * k * k)
        h += Q(1, k)
        y1[2 * k] = c
        s[2 * k] = -h * c
        k += 1
    ser1 = LogSeries.from_coeffs(var, trunc, y1)
    ser2 = LogSeries(var, trunc, {1: y1, 0: s})
    return ser1, ser2
