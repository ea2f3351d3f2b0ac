from fractions import Fraction

import mpmath as mp
import pytest

from besselmoments.mpnum.constants import constants
from besselmoments.mpnum.moments import (
    MomentSpec,
    i0k0_product_series,
    ikm,
    ikmh443,
    kluyver_p,
    offshell_moment,
    weighted_moment,
)

PREC = 256


class TestConvergencePredicate:
    def test_on_shell_needs_more_k(self):
        with pytest.raises(ValueError):
            MomentSpec(kernel="none", a=3, b=2, tpow=1).validate()

    def test_equal_powers_need_low_moment(self):
        MomentSpec(kernel="none", a=4, b=4, tpow=1).validate()
        with pytest.raises(ValueError):
            MomentSpec(kernel="none", a=4, b=4, tpow=7).validate()

    def test_i_kernel_threshold(self):
        MomentSpec(kernel="I", a=1, b=3, tpow=1, param=3.9).validate()
        with pytest.raises(ValueError):
            MomentSpec(kernel="I", a=1, b=3, tpow=1, param=4.0).validate()

    def test_k_kernel(self):
        MomentSpec(kernel="K", a=2, b=2, tpow=1, param=0.5).validate()
        with pytest.raises(ValueError):
            MomentSpec(kernel="K", a=3, b=2, tpow=1, param=0.5).validate()


class TestOnShell:
    def test_single_k_moment(self):
        # int_0^inf K0 t dt = 1
        assert abs(ikm(0, 1, 1, PREC) - 1) < mp.mpf(2) ** (-(PREC - 20))

    def test_two_k_moment(self):
        # int K0^2 t dt = 1/2
        assert abs(ikm(0, 2, 1, PREC) - mp.mpf(1) / 2) < mp.mpf(2) ** (-(PREC - 20))

    def test_pi2_over_16(self):
        with mp.workprec(PREC + 16):
            assert abs(ikm(1, 3, 1, PREC) - mp.pi**2 / 16) < mp.mpf(2) ** (-(PREC - 20))

    def test_bologna_relations(self):
        with mp.workprec(PREC + 16):
            C = constants("bologna", PREC + 16)
            assert abs(ikm(2, 3, 1, PREC) - mp.sqrt(15) * mp.pi / 2 * C) < mp.mpf(10) ** -70
            assert abs(ikm(1, 4, 1, PREC) - mp.pi**2 * C) < mp.mpf(10) ** -70

    def test_determinism(self):
        a = ikm(1, 4, 3, PREC)
        from besselmoments.mpnum.moments import reset_caches

        reset_caches()
        b = ikm(1, 4, 3, PREC)
        assert a == b

    def test_doubling_precision_agrees(self):
        v1 = ikm(0, 5, 1, 128)
        v2 = ikm(0, 5, 1, 256)
        assert abs(v1 - v2) < abs(v2) * mp.mpf(2) ** (-120)


class TestPowerTail:
    def test_product_series_leading_terms(self):
        e = i0k0_product_series(8)
        assert e[0] == Fraction(1, 8)
        # cross-check numerically: I0 K0 ~ (1/2t)(1 + e1/t^2 + e2/t^4 + ...)
        with mp.workprec(200):
            t = mp.mpf(60)
            lhs = mp.besseli(0, t) * mp.besselk(0, t) * 2 * t - 1
            model = sum(
                mp.mpf(c.numerator) / c.denominator / t ** (2 * (k + 1))
                for k, c in enumerate(e)
            )
            assert abs(lhs - model) < mp.mpf(10) ** -18

    def test_equal_power_moment(self):
        # IKM(4,4;1) against an independent mpmath quadrature on [0, 60]
        # plus its own tail: agreement to well below the model remainder
        v = ikm(4, 4, 1, 192)
        with mp.workprec(260):
            f = lambda t: (mp.besseli(0, t) * mp.besselk(0, t)) ** 4 * t
            head = mp.quad(f, [0, 1, 8, 60])
            tail = mp.quad(f, [60, 120, mp.inf])
            assert abs(v - head - tail) < mp.mpf(10) ** -40

    def test_honorary_moment(self):
        h = ikmh443(192)
        with mp.workprec(260):
            f = lambda t: (mp.besseli(0, t) * mp.besselk(0, t)) ** 2 * (
                (mp.besseli(0, t) * mp.besselk(0, t)) ** 2 - 1 / (4 * t * t)
            ) * t**3
            ref = mp.quad(f, [0, 1, 10, 60, 200, mp.inf])
            assert abs(h - ref) < mp.mpf(10) ** -35


class TestOffShell:
    def test_reduces_to_on_shell_at_unit(self):
        spec = MomentSpec(kernel="K", a=2, b=2, tpow=1, param=1)
        v = offshell_moment(spec, 192)
        assert abs(v - ikm(2, 3, 1, 192)) < mp.mpf(10) ** -50

    def test_i_kernel_against_mpmath(self):
        spec = MomentSpec(kernel="I", a=1, b=3, tpow=1, param=Fraction(1, 2))
        v = offshell_moment(spec, 160)
        with mp.workprec(220):
            s = mp.sqrt(mp.mpf("0.5"))
            ref = mp.quad(
                lambda t: mp.besseli(0, s * t)
                * mp.besseli(0, t)
                * mp.besselk(0, t) ** 3
                * t,
                [0, 1, mp.inf],
            )
            assert abs(v - ref) < mp.mpf(10) ** -40

    def test_negative_parameter_reroutes_to_oscillatory(self):
        spec = MomentSpec(kernel="I", a=1, b=3, tpow=1, param=-1)
        v = offshell_moment(spec, 128)
        with mp.workprec(160):
            ref = mp.quad(
                lambda t: mp.besselj(0, t)
                * mp.besseli(0, t)
                * mp.besselk(0, t) ** 3
                * t,
                [0, 1, mp.inf],
            )
            assert abs(v - ref) < mp.mpf(10) ** -11


class TestWeighted:
    def test_matches_moment_combination(self):
        from besselmoments.exact.poly import Poly

        f = Poly("xi", [2, -3])
        with mp.workprec(230):
            v = weighted_moment(1, 4, f, 192)
            ref = 2 * ikm(1, 4, 1, 192) - 3 * ikm(1, 4, 3, 192)
            assert abs(v - ref) < mp.mpf(10) ** -50

    def test_requires_decay(self):
        from besselmoments.exact.poly import Poly

        with pytest.raises(ValueError):
            weighted_moment(4, 4, Poly("xi", [1]), 128)


class TestKluyver:
    def test_p3_at_origin(self):
        assert kluyver_p(3, 0, 128) == 0

    def test_p3_direct_vs_ik(self):
        x = mp.mpf("0.5")
        a = kluyver_p(3, x, 128, method="ik")
        b = kluyver_p(3, x, 128, method="direct")
        assert abs(a - b) < mp.mpf(10) ** -9

    def test_x_range_enforced(self):
        with pytest.raises(ValueError):
            kluyver_p(7, mp.mpf("1.5"), 128, method="ik")

    def test_n_range_enforced(self):
        with pytest.raises(ValueError):
            kluyver_p(5, mp.mpf("0.5"), 128, method="ik")
