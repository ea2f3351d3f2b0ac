import mpmath as mp
import pytest

from besselmoments.modular.legendre import (
    cz_basechange_check,
    legendre_Pm13,
    legendre_product_integral,
)


@pytest.mark.parametrize("x", ["-0.97", "-0.6", "-0.01", "0.2", "0.55", "0.99"])
def test_against_mpmath_oracle(x):
    prec = 192
    with mp.workprec(prec + 40):
        xv = mp.mpf(x)
        got = legendre_Pm13(xv, prec)
        want = mp.legenp(mp.mpf(-1) / 3, 0, xv)
        assert abs(got - want) < abs(want) * mp.mpf(2) ** (-(prec - 12))


def test_value_at_one():
    assert legendre_Pm13(1, 128) == 1


def test_domain_guard():
    with pytest.raises(ValueError):
        legendre_Pm13(-1, 128)
    with pytest.raises(ValueError):
        legendre_Pm13(mp.mpf("1.5"), 128)


def test_log_blowup_near_minus_one():
    # P(-1 + d) ~ (sqrt(3)/(2 pi)) * (-log(d/2) + const): check the slope in d
    prec = 160
    with mp.workprec(prec + 30):
        d1 = mp.mpf(2) ** -40
        d2 = mp.mpf(2) ** -80
        v1 = legendre_Pm13(-1 + d1, prec)
        v2 = legendre_Pm13(-1 + d2, prec)
        slope = (v2 - v1) / (mp.log(d2) - mp.log(d1))
        assert abs(slope + mp.sqrt(3) / (2 * mp.pi)) < mp.mpf(10) ** -10


def test_cubic_moment_value():
    with mp.workprec(230):
        v = legendre_product_integral(3, 1, 160)
        assert abs(v + 9 * mp.sqrt(3) / (4 * mp.pi)) < mp.mpf(10) ** -40


def test_even_moment_vanishes():
    v = legendre_product_integral(2, 2, 128)
    assert abs(v) < mp.mpf(10) ** -30


@pytest.mark.parametrize("y", ["1.0", "0.5"])
def test_basechange_residuals(y):
    r = cz_basechange_check(y, 192)
    assert r["z_alpha3"] < mp.mpf(10) ** -40
    assert r["phi_identity"] < mp.mpf(10) ** -40
    assert r["chi_identity"] < mp.mpf(10) ** -40
