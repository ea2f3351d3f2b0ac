import mpmath as mp
import pytest

from besselmoments.mpnum import quadrature as qd


class TestFinite:
    def test_smooth(self):
        v, err, _ = qd.quad_finite(lambda x: mp.exp(x), 0, 1, 128)
        with mp.workprec(160):
            assert abs(v - (mp.e - 1)) < mp.mpf(2) ** (-120)

    def test_log_endpoint_singularity(self):
        # int_0^1 log(x)^2 dx = 2
        v, err, _ = qd.quad_finite(lambda x: mp.log(x) ** 2, 0, 1, 192)
        with mp.workprec(220):
            assert abs(v - 2) < mp.mpf(2) ** (-180)

    def test_error_estimate_invariant(self):
        # reported estimate must be at least the last level-to-level change
        f = lambda x: 1 / (1 + x * x)
        levels = {}
        for L in range(3, 7):
            v, _, _ = qd.quad_finite(f, 0, 1, 96, rel_eps=mp.mpf(0), max_level=L, min_level=L)
            levels[L] = v
        v, err, used = qd.quad_finite(f, 0, 1, 96, max_level=6)
        assert err >= abs(levels[used] - levels[used - 1]) * (1 - mp.mpf(2) ** -40)


class TestSemiInfinite:
    def test_exponential_tail(self):
        # int_1^inf e^{-2t} dt = e^{-2}/2
        v, err, _ = qd.quad_exp_tail(lambda t: mp.exp(-2 * t), 1, 128, rate=2)
        with mp.workprec(160):
            assert abs(v - mp.exp(-2) / 2) < mp.mpf(2) ** (-118)

    def test_slow_rate(self):
        # rate far below one still covered: int_1^inf e^{-t/100} = 100 e^{-0.01}
        v, err, _ = qd.quad_exp_tail(lambda t: mp.exp(-t / 100), 1, 96, rate=0.01)
        with mp.workprec(128):
            assert abs(v - 100 * mp.exp(mp.mpf("-0.01"))) < mp.mpf(2) ** (-80)

    def test_moment_split(self):
        # int_0^inf t e^{-t} dt = 1 with a mildly singular head factor
        v, err = qd.quad_moment(lambda t: t * mp.exp(-t), 96)
        assert abs(v - 1) < mp.mpf(2) ** (-88)


class TestTailModel:
    def test_power_tail(self):
        # int_0^inf dt/(1+t^2)^2 = pi/4; for t >= cut use the exact expansion
        # 1/(1+t^2)^2 = sum_k (-1)^k (k+1) t^(-4-2k)
        cut = 16
        terms = [(4 + 2 * k, (-1) ** k * (k + 1)) for k in range(12)]
        model = qd.TailModel(cut=cut, terms=terms)
        v, err = qd.quad_moment_power_tail(lambda t: 1 / (1 + t * t) ** 2, 128, model)
        with mp.workprec(160):
            assert abs(v - mp.pi / 4) < mp.mpf(1) ** -30 * mp.mpf(10) ** -30 + mp.mpf(10) ** -28

    def test_non_integrable_rejected(self):
        with pytest.raises(ValueError):
            qd.TailModel(cut=8, terms=[(1, 1)]).integral_beyond(64)


class TestAcceleration:
    def test_cvz_log2(self):
        # sum (-1)^k / (k+1) = log 2
        with mp.workprec(128):
            terms = [mp.mpf(1) / (k + 1) for k in range(40)]
            s = qd.cvz_alternating_sum(terms)
            assert abs(s - mp.log(2)) < mp.mpf(10) ** -28

    def test_geometric_log_limit(self):
        # S_j = L + h(3j + 2) + h^2 (j - 1), h = 2^-j
        with mp.workprec(128):
            L = mp.mpf("0.731")
            vals = []
            for j in range(2, 11):
                h = mp.mpf(2) ** (-j)
                vals.append(L + h * (3 * j + 2) + h * h * (j - 1))
            est, err = qd.geometric_log_limit(vals)
            assert abs(est - L) < mp.mpf(10) ** -12


class TestOscillatory:
    def test_j0_total_integral(self):
        # int_0^inf J0(t) dt = 1 (conditionally convergent)
        from besselmoments.mpnum.moments import cached_bessel

        f = lambda t: cached_bessel("J0", t, 80)
        v, err = qd.quad_oscillatory(f, 1, "J", 64, n_panels=28)
        assert abs(v - 1) < mp.mpf(10) ** -12

    def test_y0_total_integral(self):
        # int_0^inf Y0(t) dt = 0
        from besselmoments.mpnum.moments import cached_bessel

        f = lambda t: cached_bessel("Y0", t, 80)
        v, err = qd.quad_oscillatory(f, 1, "Y", 64, n_panels=28)
        assert abs(v) < mp.mpf(10) ** -12

    def test_kernel_zero_values(self):
        z1 = qd._kernel_zero("J", 1, 80)
        with mp.workprec(96):
            assert abs(z1 - mp.besseljzero(0, 1)) < mp.mpf(2) ** -70


def test_node_cache_reuse():
    qd._ts_level_nodes(160, 4)
    key = (qd._prec_bucket(160), 4)
    assert key in qd._NODE_CACHE
    assert qd._ts_level_nodes(160, 4) is qd._NODE_CACHE[key]
