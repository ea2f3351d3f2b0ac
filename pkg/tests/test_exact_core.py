import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from besselmoments.exact.poly import LaurentPoly, Poly, RationalFunc, poly_gcd
from besselmoments.exact.diffop import DiffOp, bmw_operator, formal_adjoint
from besselmoments.exact.series import (
    LogSeries,
    apply_to_log_series,
    frobenius_solutions,
)
from besselmoments.exact.besselpair import (
    BesselPairExpr,
    I_PAIR,
    K_PAIR,
    KernelPairExpr,
    apply_to_bessel_pair,
)
from besselmoments.exact import jsonio

Q = Fraction


def rand_poly(rng, var="t", deg=4, scale=6):
    return Poly(var, [Q(rng.randint(-scale, scale), rng.randint(1, 3)) for _ in range(deg + 1)])


def rand_op(rng, var="t", order=3, deg=3):
    return DiffOp(var, [rand_poly(rng, var, deg) for _ in range(order + 1)])


class TestPoly:
    def test_degree_sentinel(self):
        assert Poly("x").degree() == -1
        assert Poly("x", [0, 0]).degree() == -1
        assert Poly("x", [1, 2]).degree() == 1

    def test_arith(self):
        x = Poly.x("x")
        p = (x + 1) * (x - 1)
        assert p == x * x - 1
        assert p(Q(3)) == 8

    def test_divmod_and_gcd(self):
        x = Poly.x("x")
        a = (x + 1) ** 2 * (x - 2)
        b = (x + 1) * (x + 3)
        g = poly_gcd(a, b)
        assert g == x + 1
        q, r = a.divmod(x + 1)
        assert r.is_zero()
        assert q == (x + 1) * (x - 2)

    def test_variable_mismatch(self):
        with pytest.raises(ValueError):
            Poly.x("x") + Poly.x("y")


class TestLaurent:
    def test_negative_exponents(self):
        t = LaurentPoly.monomial("t", -2, 3)
        assert t[-2] == 3
        assert (t * LaurentPoly.monomial("t", 2)).terms == {0: Q(3)}

    def test_derivative(self):
        p = LaurentPoly("t", {-1: 1, 2: 5})
        assert p.derivative() == LaurentPoly("t", {-2: -1, 1: 10})


class TestRationalFunc:
    def test_normalization(self):
        x = Poly.x("u")
        r = RationalFunc(x * 2, (x + 1) * 2)
        assert r.den.coeffs[-1] == 1
        assert r == RationalFunc(x, x + 1)

    def test_derivative_quotient_rule(self):
        x = Poly.x("u")
        r = RationalFunc(Poly.const("u", 1), x)  # 1/u
        assert r.derivative() == RationalFunc(Poly.const("u", -1), x * x)


class TestDiffOp:
    def test_bmw_m1_is_bessel_operator(self):
        op = bmw_operator(1)
        t = LaurentPoly.monomial("t", 1)
        t2 = LaurentPoly.monomial("t", 2)
        assert op == DiffOp("t", [-1 * t2, t, t2])

    def test_bmw_rejects_bad_m(self):
        with pytest.raises(ValueError):
            bmw_operator(0)

    def test_adjoint_first_order(self):
        # t d/dt -> -(t d/dt) - 1
        op = DiffOp("t", [0, LaurentPoly.monomial("t", 1)])
        adj = formal_adjoint(op)
        assert adj == DiffOp("t", [-1, LaurentPoly("t", {1: -1})])

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10**6))
    def test_adjoint_involution(self, seed):
        rng = random.Random(seed)
        op = rand_op(rng, order=rng.randint(1, 6), deg=rng.randint(0, 6))
        assert formal_adjoint(formal_adjoint(op)) == op

    @settings(max_examples=15, deadline=None)
    @given(st.integers(0, 10**6))
    def test_composition_against_series(self, seed):
        rng = random.Random(seed)
        a = rand_op(rng, order=2, deg=2)
        b = rand_op(rng, order=2, deg=2)
        s = LogSeries("t", 25, {0: [Q(rng.randint(-3, 3)) for _ in range(12)],
                                1: [Q(rng.randint(-3, 3)) for _ in range(12)]})
        lhs = apply_to_log_series(a * b, s)
        rhs = apply_to_log_series(a, apply_to_log_series(b, s))
        n = min(lhs.trunc, rhs.trunc)
        for l in range(3):
            for k in range(-4, n):
                assert lhs.coeff(k, l) == rhs.coeff(k, l)


class TestLogSeries:
    def test_truncation_is_carried(self):
        s = LogSeries.from_coeffs("t", 10, [1, 2, 3])
        d = s.derivative()
        assert d.trunc == 9
        assert d.coeff(0) == 2
        with pytest.raises(ValueError):
            d.coeff(9)

    def test_mul_valuation_sharpens_trunc(self):
        a = LogSeries.from_coeffs("t", 10, [0, 0, 1], base=0)  # t^2 + O(t^10)
        b = LogSeries.from_coeffs("t", 10, [1, 1])             # 1 + t + O(t^10)
        # unknowns of a enter at 10 + val(b) = 10; of b at 10 + val(a) = 12
        assert (a * b).trunc == 10
        c = LogSeries.from_coeffs("t", 10, [0, 0, 0, 2], base=0)  # 2 t^3
        assert (a * c).trunc == 12

    def test_apply_exhaustion_error(self):
        s = LogSeries.from_coeffs("t", 3, [1, 1, 1])
        op = DiffOp.d("t", 3)
        with pytest.raises(ValueError):
            apply_to_log_series(op, s)

    def test_identity_operator(self):
        s = LogSeries("t", 8, {1: [1, 2], 0: [0, 1]})
        assert apply_to_log_series(DiffOp.identity("t"), s) == s


class TestFrobenius:
    def test_y1_leading_coefficients(self):
        y1, _ = frobenius_solutions(12)
        assert [y1.coeff(k) for k in (0, 2, 4)] == [1, Q(1, 4), Q(1, 64)]

    def test_bessel_equation_annihilates_pair(self):
        y1, y2 = frobenius_solutions(30)
        op = bmw_operator(1)
        assert apply_to_log_series(op, y1).is_zero()
        assert apply_to_log_series(op, y2).is_zero()

    def test_companion_has_zero_constant_correction(self):
        _, y2 = frobenius_solutions(12)
        assert y2.coeff(0, 0) == 0
        assert y2.coeff(0, 1) == 1

    def test_symmetric_power_annihilation(self):
        y1, y2 = frobenius_solutions(24)
        op3 = bmw_operator(3)
        assert apply_to_log_series(op3, y1 * y1 * y2).is_zero()

    def test_minimum_truncation(self):
        with pytest.raises(ValueError):
            frobenius_solutions(3)

    def test_td_on_y1(self):
        y1, _ = frobenius_solutions(12)
        td = DiffOp("t", [0, LaurentPoly.monomial("t", 1)])
        r = apply_to_log_series(td, y1)
        assert r.coeff(2) == Q(1, 2)
        assert r.coeff(4) == Q(1, 16)


class TestBesselPair:
    def test_k_pair_closure(self):
        e = BesselPairExpr.b0(K_PAIR)     # K0
        d = e.derivative()                 # -K1
        assert d.c0.is_zero()
        assert d.c1 == LaurentPoly("t", {0: -1})

    def test_i_pair_t_times_i1(self):
        # d/dt [t I1] = t I0  (the m=0 derivative identity)
        e = BesselPairExpr(I_PAIR, LaurentPoly("t"), LaurentPoly.monomial("t", 1))
        d = e.derivative()
        assert d.c0 == LaurentPoly.monomial("t", 1)
        assert d.c1.is_zero()

    def test_product_rule_consistency(self):
        # differentiate c0*B0 two ways: closure table vs Leibniz on c0 * (B0)
        rng = random.Random(7)
        c0 = LaurentPoly("t", {rng.randint(-3, 3): Q(rng.randint(1, 5)) for _ in range(3)})
        for flavor in (I_PAIR, K_PAIR):
            e = BesselPairExpr(flavor, c0, LaurentPoly("t"))
            d1 = e.derivative()
            base = BesselPairExpr.b0(flavor).derivative()
            d2 = BesselPairExpr(flavor, c0.derivative(), LaurentPoly("t")) + base.mul_laurent(c0)
            assert d1 == d2

    def test_apply_operator(self):
        e = BesselPairExpr.b0(I_PAIR)
        op = bmw_operator(1)
        r = apply_to_bessel_pair(op, e)
        # t^2 I0'' + t I0' - t^2 I0 = 0 by the defining equation
        assert r.c0.is_zero() and r.c1.is_zero()


class TestKernelPair:
    def test_du_matches_closed_form(self):
        # D_u^2 B0(vt) = t^2/(4v^2) B0 - t/(2v^3) B1  (I-kernel)
        e = KernelPairExpr.b0(I_PAIR).d_u().d_u()
        assert e.c0 == {(-2, 2): Q(1, 4)}
        assert e.c1 == {(-3, 1): Q(-1, 2)}

    def test_dt_dv_commute(self):
        for flavor in (I_PAIR, K_PAIR):
            e = KernelPairExpr(flavor, {(1, 2): Q(3)}, {(-1, 0): Q(2)})
            assert e.d_t().d_v() == e.d_v().d_t()


class TestJsonIO:
    def test_poly_roundtrip(self):
        p = Poly("xi", [Q(1, 3), 0, -2])
        assert jsonio.poly_from_json(jsonio.poly_to_json(p)) == p

    def test_diffop_roundtrip(self):
        op = bmw_operator(3)
        d = jsonio.diffop_to_json(op)
        assert jsonio.diffop_from_json(d) == op
        assert d["order"] == 4

    def test_laurent_roundtrip(self):
        p = LaurentPoly("t", {-2: Q(5, 7), 3: -1})
        assert jsonio.laurent_from_json(jsonio.laurent_to_json(p)) == p
