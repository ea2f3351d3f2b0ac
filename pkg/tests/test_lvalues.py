import mpmath as mp
import pytest

from besselmoments.modular.evalmod import eval_modular
from besselmoments.modular.lvalues import (
    cusp_form_z_integral,
    lvalue_f66,
    modular_weight_integral,
)


def test_lvalue_against_direct_quadrature():
    # independent route: integrate f66(iy)(2 pi y)^s dy/y by quadrature from
    # a small height (the integrand falls off like exp(-pi/(3y)) below the
    # inversion point, so 0.008 leaves only ~1e-35 of mass behind)
    prec = 128
    with mp.workprec(prec + 40):
        for s in (1, 2, 3):
            want = lvalue_f66(s, prec)

            def f(y):
                return eval_modular("f66", mp.mpc(0, y), prec + 24).real * (
                    2 * mp.pi * y
                ) ** s / y

            got = mp.quad(
                f, [mp.mpf("0.008"), mp.mpf("0.05"), mp.mpf("0.4"), 1, 3]
            ) / mp.factorial(s - 1)
            assert abs(got - want) < mp.mpf(10) ** -22


def test_lvalue_input_range():
    with pytest.raises(ValueError):
        lvalue_f66(4, 128)


def test_weight_integral_against_direct_quadrature():
    prec = 128
    with mp.workprec(prec + 40):
        def phichi(z):
            f = eval_modular("f66", z, prec + 24)
            u = -64 * eval_modular("X63", z, prec + 24)
            return f * (
                2 / (u - 4) ** 2 + 1 / (3 * (u - 4)) + 8 / (u - 16) ** 2 + 2 / (3 * (u - 16))
            )

        for k in (0, 1, 2):
            want = modular_weight_integral(k, prec)
            got = mp.quad(
                lambda y: phichi(mp.mpc(0, y)) * mp.mpc(0, y) ** k * 1j,
                [mp.mpf("0.012"), mp.mpf("0.1"), mp.mpf("0.408"), 1, 4],
            )
            assert abs(got - want) < mp.mpf(10) ** -18


def test_cusp_form_period_combination_vanishes():
    prec = 192
    with mp.workprec(prec + 16):
        v = 7 * cusp_form_z_integral(0, prec) + 72 * cusp_form_z_integral(2, prec)
        assert abs(v) < mp.mpf(10) ** -40


def test_axis_moment_rejects_non_cuspidal():
    from besselmoments.modular.lvalues import _axis_moment
    from besselmoments.modular.qseries import QSeries

    with pytest.raises(ValueError):
        _axis_moment(QSeries(0, [1, 1, 1]), 0, 96)
