"""Sum-rule polynomials and moment recurrences for products of Bessel factors.

Construction route for the weight polynomial making
``int_0^inf K0^{n+2} t f_n(t^2) dt = (n+1)!`` (and the companion integrals
with I0 factors vanish): apply the formal adjoint of the order-(n+4)
annihilator to I0/t, read off the two reduced coefficient polynomials, and
rescale.  Everything here is exact; numerical verification lives in
``verify_sumrule``.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import List, Optional, Tuple

from .exact.besselpair import BesselPairExpr, I_PAIR, K_PAIR, apply_to_bessel_pair
from .exact.diffop import bmw_operator, formal_adjoint
from .exact.poly import LaurentPoly, Poly, Q


class InternalShapeError(RuntimeError):
    """The adjoint image failed a structural assertion; indicates a bug."""


@dataclass(frozen=True)
class SumRulePoly:
    n: int
    f: Poly                  # polynomial in xi = t^2
    scale_denominator: int   # (n+4) * f has integer coefficients

    def __post_init__(self):
        if self.f.degree() > (self.n + 1) // 2:
            raise InternalShapeError(f"degree bound violated for n={self.n}")
        for c in (self.f * self.scale_denominator).coeffs:
            if c.denominator != 1:
                raise InternalShapeError(f"integrality violated for n={self.n}")


@dataclass(frozen=True)
class MomentRecurrence:
    """sum_j  c_j(s) * M(s+j) = 0  for moments M(s) of annihilated products."""

    factor_count: int
    terms: Tuple[Tuple[int, Poly], ...]  # (shift, coefficient polynomial in s)

    def shifts(self) -> List[int]:
        return [j for j, _ in self.terms]

    def coeff(self, shift: int) -> Poly:
        for j, p in self.terms:
            if j == shift:
                return p
        return Poly("s")

    def residual(self, moment, s):
        """sum_j c_j(s) * moment(s + j) with a caller-supplied moment function."""
        return sum(p(Q(s)) * moment(s + j) for j, p in self.terms)


def derive_AB(n: int) -> Tuple[Poly, Poly]:
    """Reduce the adjoint annihilator applied to I0/t to the (A, B) pair.

    For n >= 3 the image of (1/t) I0 under the adjoint of the order-(n+1)
    operator collapses to

        (n-1) * [ t A(t^2) I0(t) + t^2 B(t^2) I1(t) ],

    with A, B integer polynomials of degree <= floor((n-1)/2) and
    floor((n-2)/2).  The K-pair route must produce the same A and B with
    the sign pattern (+A, -B); both routes are computed and compared.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    adj = formal_adjoint(bmw_operator(n))
    tinv = LaurentPoly.monomial("t", -1)
    zero = LaurentPoly("t")

    r_i = apply_to_bessel_pair(adj, BesselPairExpr(I_PAIR, tinv, zero))
    r_k = apply_to_bessel_pair(adj, BesselPairExpr(K_PAIR, tinv, zero))

    A = _extract_scaled(r_i.c0, n, parity=0, label="A")
    B = _extract_scaled(r_i.c1, n, parity=1, label="B")
    A_k = _extract_scaled(r_k.c0, n, parity=0, label="A(K-route)")
    B_k = _extract_scaled(-r_k.c1, n, parity=1, label="B(K-route)")
    if A != A_k or B != B_k:
        raise InternalShapeError(f"I-route and K-route disagree at n={n}")
    if A.degree() > (n - 1) // 2 or B.degree() > (n - 2) // 2:
        raise InternalShapeError(f"degree bounds violated at n={n}")
    return A, B


def _extract_scaled(c: LaurentPoly, n: int, parity: int, label: str) -> Poly:
    """Read (n-1) * t^{parity+1} * P(t^2) off a Laurent coefficient."""
    out = {}
    for e, v in c.terms.items():
        if e < 1 + parity or (e - 1 - parity) % 2:
            raise InternalShapeError(f"{label}: stray exponent {e} at n={n}")
        w = v / (n - 1)
        if w.denominator != 1:
            raise InternalShapeError(f"{label}: non-integer content at n={n}")
        out[(e - 1 - parity) // 2] = w
    deg = max(out) if out else -1
    return Poly("xi", [out.get(k, Q(0)) for k in range(deg + 1)])


def sumrule_poly(n: int) -> SumRulePoly:
    """Weight polynomial f_n with integral target (n+1)!.

    Built as (-1)^(n+3) / (n+4) times the B-polynomial of ``derive_AB(n+3)``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    _, B = derive_AB(n + 3)
    f = B * Fraction((-1) ** (n + 3), n + 4)
    return SumRulePoly(n=n, f=f, scale_denominator=n + 4)


def moment_recurrence(m: int) -> MomentRecurrence:
    """Mellin-transform the order-(m+1) annihilator into a moment recurrence.

    Each operator monomial c * t^j * D^k contributes
    c * (-1)^k * (s+j)(s+j-1)...(s+j-k+1) * M(s+j-k); boundary terms vanish
    for rapidly decaying solution products.  Terms are normalized to integer
    content 1 with the highest-shift coefficient's leading coefficient
    positive.
    """
    if m < 1:
        raise ValueError("factor count must be >= 1")
    op = bmw_operator(m)
    s = Poly.x("s")
    acc = {}
    for k, c in enumerate(op.coeffs):
        if c.is_zero():
            continue
        for j, coef in c.terms.items():
            ff = Poly.const("s", 1)
            for i in range(k):
                ff = ff * (s + (j - i))
            sign = -1 if k % 2 else 1
            term = ff * (coef * sign)
            d = j - k
            acc[d] = acc.get(d, Poly("s")) + term
    terms = sorted((d, p) for d, p in acc.items() if not p.is_zero())
    # normalize: integer content 1, positive lead on the highest shift
    from math import gcd

    num = 0
    den = 1
    for _, p in terms:
        c = p.content()
        num = gcd(num, c.numerator)
        den = den * c.denominator // gcd(den, c.denominator)
    content = Q(num, den)
    if terms and terms[-1][1].coeffs[-1] < 0:
        content = -content
    terms = [(d, p * (1 / content)) for d, p in terms]
    return MomentRecurrence(factor_count=m, terms=tuple(terms))


# Reference coefficient families for the 5- and 6-factor recursions,
# indexed by the shift 2j; polynomials in the recursion argument x.
P5_FAMILY = (
    Poly("x", [0, 0, 0, 0, 0, 0, 1]),          # x^6
    Poly("x", [3, 0, 42, 0, 35]),               # 35x^4 + 42x^2 + 3
    Poly("x", [104, 0, 259]),                   # 259x^2 + 104
    Poly("x", [225]),
)
P6_FAMILY = (
    Poly("x", [0, 0, 0, 0, 0, 0, 0, 1]),        # x^7
    Poly("x", [0, 24, 0, 112, 0, 56]),          # x(56x^4 + 112x^2 + 24)
    Poly("x", [0, 944, 0, 784]),                # x(784x^2 + 944)
    Poly("x", [0, 2304]),                       # 2304x
)


def match_reference_family(
    rec: MomentRecurrence,
) -> Optional[Tuple[int, Fraction]]:
    """Match a derived recurrence against the published 4-term family.

    Searches affine substitutions x = s + j + sigma (sigma in 0..2) and a
    single rational proportionality kappa such that

        c_{2j}(s) = kappa * (-1)^j * p_j(s + j + sigma)   for all j.

    Returns (sigma, kappa) on success, None otherwise.  Only defined for
    factor counts 5 and 6.
    """
    family = {5: P5_FAMILY, 6: P6_FAMILY}.get(rec.factor_count)
    if family is None:
        return None
    shifts = rec.shifts()
    if shifts != [2 * j for j in range(len(family))]:
        return None
    s = Poly.x("s")
    for sigma in (0, 1, 2):
        kappa = None
        ok = True
        for j, p in enumerate(family):
            base = s + (j + sigma)
            expect = Poly("s")
            for k, c in enumerate(p.coeffs):
                if c:
                    expect = expect + base**k * c
            expect = expect * ((-1) ** j)
            got = rec.coeff(2 * j)
            if expect.is_zero() or got.is_zero():
                ok = False
                break
            ratio = got.coeffs[-1] / expect.coeffs[-1]
            if kappa is None:
                kappa = ratio
            if ratio != kappa or got != expect * kappa:
                ok = False
                break
        if ok and kappa is not None:
            return sigma, kappa
    return None


def load_reference_table() -> dict:
    """The ten published weight polynomials, as exact integer data."""
    with resources.files("besselmoments.data").joinpath("table1.json").open() as fh:
        return json.load(fh)


def reference_poly(n: int) -> Poly:
    """f_n from the golden table, as a Poly in xi."""
    data = load_reference_table()
    entry = data[str(n)]
    pref = Fraction(entry["prefactor"])
    return Poly("xi", [pref * Fraction(c) for c in entry["coeffs"]])


def verify_sumrule(n: int, a: int, precision_bits: int = 384):
    """Numerically certify one sum rule at the given precision.

    a = 0 checks the inhomogeneous rule with target (n+1)!, while
    1 <= a < (n+2)/2 checks the homogeneous rule with target 0.  The
    weighted integral runs as a single quadrature.
    """
    from .certificates import make_certificate
    from .mpnum.moments import weighted_moment

    if a != 0 and not (1 <= a < (n + 2) / 2):
        raise ValueError(f"divergent parameter combination: n={n}, a={a}")
    t0 = time.time()
    f = sumrule_poly(n).f
    b = n + 2 - a
    val = weighted_moment(a, b, f, precision_bits)
    import math

    target = math.factorial(n + 1) if a == 0 else 0
    return make_certificate(
        f"sum-rule-n{n}-a{a}",
        val,
        target,
        tolerance="1e-20",
        relative=(a == 0),
        precision_bits=precision_bits,
        provenance=[f"weighted vacuum integral, {b} K-factors" if a == 0
                    else f"weighted non-vacuum integral, I^{a} K^{b}"],
        started=t0,
    )
