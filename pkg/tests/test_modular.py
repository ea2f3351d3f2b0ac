from fractions import Fraction

import mpmath as mp
import pytest

from besselmoments.modular.eta import eta_qseries, modular_objects
from besselmoments.modular.evalmod import (
    HalfPlanePoint,
    ReductionError,
    eval_modular,
    eval_qseries_checked,
)
from besselmoments.modular.qseries import QSeries

Q = Fraction


def brute_eta_product(scale, n):
    """Direct expansion of prod_{m>=1} (1 - q^(scale m)), the series oracle."""
    coeffs = [Q(0)] * n
    coeffs[0] = Q(1)
    m = 1
    while scale * m < n:
        new = list(coeffs)
        for i in range(n - scale * m):
            if coeffs[i]:
                new[i + scale * m] -= coeffs[i]
        coeffs = new
        m += 1
    return coeffs


class TestQSeries:
    def test_mul_and_inverse(self):
        s = QSeries(0, [1, 2, 3, 4, 0, 0, 0, 0])
        assert (s * s.inverse()).coeffs[:4] == [Q(1), Q(0), Q(0), Q(0)]

    def test_add_alignment(self):
        a = QSeries(1, [1, 1, 1, 1])
        b = QSeries(0, [5, 0, 0, 0])
        c = a + b
        assert c.leading == 0
        assert c.coefficient(0) == 5 and c.coefficient(1) == 1

    def test_fractional_grid_guard(self):
        a = QSeries(Q(1, 24), [1, 1])
        with pytest.raises(ValueError):
            a + QSeries(0, [1, 1])
        with pytest.raises(ValueError):
            a.eval(mp.mpf("0.1"), 64)

    def test_qdq(self):
        s = QSeries(1, [1, 4, 9])
        assert s.qdq().coeffs == [Q(1), Q(8), Q(27)]

    def test_rescale(self):
        s = QSeries(0, [1, 2, 3, 0, 0, 0, 0])
        r = s.rescale(2)
        assert r.coefficient(0) == 1 and r.coefficient(2) == 2 and r.coefficient(4) == 3

    def test_negative_power(self):
        s = QSeries(0, [2, 1, 0, 0, 0])
        assert ((s**-2) * s * s).coeffs[0] == 1


class TestEta:
    @pytest.mark.parametrize("scale", [1, 2, 3, 6])
    def test_pentagonal_matches_brute_force(self, scale):
        n = 50
        e = eta_qseries(scale, n)
        assert e.coeffs == brute_eta_product(scale, n)
        assert e.leading == Q(scale, 24)

    def test_rescale_consistency(self):
        # the scale-2 factor is the scale-1 factor with q -> q^2
        e1 = eta_qseries(1, 40)
        e2 = eta_qseries(2, 40)
        r = e1.rescale(2)
        assert r.coeffs == e2.coeffs
        assert r.leading * Q(2) == e2.leading * Q(2)  # both 2/24 vs 1/12 grid


class TestObjects:
    def test_leading_exponents(self):
        obj = modular_objects(60)
        assert obj["X63"].leading == 1
        assert obj["Z63"].leading == 0
        assert obj["f66"].leading == 1
        assert obj["alpha3"].leading == 1

    def test_weight_two_constant_term(self):
        assert modular_objects(60)["Z63"].coefficient(0) == 1

    def test_cusp_form_normalized(self):
        assert modular_objects(60)["f66"].coefficient(1) == 1

    def test_cross_check_is_enforced(self):
        # construction runs the two defining routes and compares; a deep
        # truncation exercising it should simply succeed
        modular_objects(220)

    def test_min_truncation(self):
        with pytest.raises(ValueError):
            modular_objects(10)


class TestEvalModular:
    def test_half_plane_guard(self):
        with pytest.raises(ValueError):
            eval_modular("X63", mp.mpc(1, -2), 128)
        with pytest.raises(ValueError):
            HalfPlanePoint(mp.mpc(0, -1))

    def test_unknown_object(self):
        with pytest.raises(ValueError):
            eval_modular("E4", mp.mpc(0, 1), 128)

    def test_w6_law_hauptmodul(self):
        with mp.workprec(240):
            z = mp.mpc(0, mp.mpf(1) / 3)
            lhs = eval_modular("X63", -1 / (6 * z), 192) * 64 * eval_modular("X63", z, 192)
            assert abs(lhs - 1) < mp.mpf(2) ** -180

    def test_w6_law_weight_two(self):
        with mp.workprec(240):
            z = mp.mpc(0, mp.mpf(1) / 2)
            lhs = eval_modular("Z63", -1 / (6 * z), 192)
            rhs = -48 * z**2 * eval_modular("Z63", z, 192) * eval_modular("X63", z, 192)
            assert abs(lhs - rhs) < mp.mpf(2) ** -180

    def test_w3_invariance(self):
        with mp.workprec(240):
            z = mp.mpc(mp.mpf("0.5"), mp.mpf("0.5"))
            w = (3 * z - 2) / (6 * z - 3)
            assert abs(eval_modular("X63", w, 192) - eval_modular("X63", z, 192)) < mp.mpf(2) ** -180

    def test_reduction_consistency_one_extra_step(self):
        # evaluating at z and at the W6 image with the law applied must agree
        prec = 192
        with mp.workprec(prec + 48):
            z = mp.mpc(mp.mpf("0.02"), mp.mpf("0.41"))  # reducible point
            direct = eval_modular("f66", z, prec)
            w = -1 / (6 * z)
            via_law = eval_modular("f66", w, prec) / (-216 * z**6)
            assert abs(direct - via_law) < abs(direct) * mp.mpf(2) ** (-(prec - 16))

    def test_tail_bound_refuses_hopeless_points(self):
        s = QSeries(0, [Q(3) ** k for k in range(40)])
        with pytest.raises(ReductionError):
            eval_qseries_checked(s, mp.mpf("0.9"), 128)
