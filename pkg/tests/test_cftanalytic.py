import math

import numpy as np
import pytest

from entmono.cftanalytic import (
    CftParams,
    DomainError,
    NoSignChange,
    curve,
    delta_m2,
    delta_renyi,
    delta_s_and_c,
    f_n,
    find_crossing,
    gs_entropy_capacity,
    ising_params,
    log_f_n,
    s_minus_c,
    upsilon_derivatives,
    xx_params,
)
from entmono.special import (
    QuadratureNoConvergence,
    adaptive_simpson,
    digamma,
    im_loggamma_half_line,
    loggamma,
    trigamma,
)

EULER_GAMMA = 0.5772156649015329


class TestSpecialFunctions:
    def test_digamma_known_values(self):
        assert digamma(1.0) == pytest.approx(-EULER_GAMMA, abs=1e-13)
        assert digamma(0.5) == pytest.approx(-EULER_GAMMA - 2 * math.log(2.0), abs=1e-13)
        assert digamma(2.0) == pytest.approx(1.0 - EULER_GAMMA, abs=1e-13)

    def test_digamma_recurrence(self):
        for x in (0.07, 0.3, 1.9, 4.4):
            assert digamma(x + 1.0) == pytest.approx(digamma(x) + 1.0 / x, rel=1e-12)

    def test_trigamma_known_values(self):
        assert trigamma(1.0) == pytest.approx(math.pi**2 / 6.0, rel=1e-13)
        assert trigamma(0.5) == pytest.approx(math.pi**2 / 2.0, rel=1e-13)

    def test_trigamma_recurrence(self):
        for x in (0.11, 0.8, 2.6):
            assert trigamma(x) == pytest.approx(trigamma(x + 1.0) + 1.0 / x**2, rel=1e-12)

    def test_loggamma_real_points(self):
        assert loggamma(5.0 + 0j).real == pytest.approx(math.log(24.0), rel=1e-14)
        assert abs(loggamma(1.0 + 0j)) < 1e-14

    def test_loggamma_reflection_modulus(self):
        # |Gamma(1/2 + i w)|^2 = pi / cosh(pi w)
        for w in (0.1, 0.9, 3.3, 8.0):
            got = 2.0 * loggamma(0.5 + 1j * w).real
            want = math.log(math.pi / math.cosh(math.pi * w))
            assert got == pytest.approx(want, rel=1e-12, abs=1e-12)

    def test_im_loggamma_small_w_slope(self):
        # Im ln Gamma(1/2 + i w) ~ psi(1/2) w
        w = 1e-6
        assert im_loggamma_half_line(w) / w == pytest.approx(digamma(0.5), rel=1e-5)

    def test_adaptive_simpson_known_integrals(self):
        assert adaptive_simpson(math.sin, 0.0, math.pi, 1e-10) == pytest.approx(2.0, abs=1e-9)
        val = adaptive_simpson(lambda x: math.exp(-x * x), 0.0, 10.0, 1e-10)
        assert val == pytest.approx(math.sqrt(math.pi) / 2.0, abs=1e-9)

    def test_adaptive_simpson_localized_bump(self):
        # narrow bump far from the endpoints must not be skipped
        val = adaptive_simpson(lambda x: math.exp(-((x - 7.0) ** 2) * 400.0), 0.0, 20.0, 1e-10)
        assert val == pytest.approx(math.sqrt(math.pi) / 20.0, abs=1e-8)

    def test_quadrature_budget(self):
        with pytest.raises(QuadratureNoConvergence):
            adaptive_simpson(lambda x: math.sin(1.0 / (x + 1e-12)), 0.0, 1.0, 1e-14, max_depth=6)


class TestScalingFunction:
    def test_normalization_identity(self):
        for x in np.linspace(0.01, 0.99, 25):
            assert abs(f_n(float(x), 1.0) - 1.0) < 1e-12

    def test_known_value_n2(self):
        assert f_n(0.5, 2.0) == pytest.approx(9.0 / 16.0, abs=1e-13)

    def test_short_interval_limit(self):
        assert f_n(1e-4, 3.0) == pytest.approx(1.0, abs=1e-3)

    def test_closed_forms_low_n(self):
        # f_2 = (1 - s^2/4)^2 and f_3 = ((9 - 4 s^2)/9)^2, s = sin(pi x)
        for x in (0.1, 0.27, 0.5):
            s = math.sin(math.pi * x)
            assert f_n(x, 2.0) == pytest.approx((1 - s**2 / 4.0) ** 2, rel=1e-12)
            assert f_n(x, 3.0) == pytest.approx(((9 - 4 * s**2) / 9.0) ** 2, rel=1e-12)

    def test_symmetry(self):
        for x in (0.1, 0.23, 0.4):
            for n in (1.5, 2.0, 3.0):
                assert f_n(x, n) == pytest.approx(f_n(1.0 - x, n), rel=1e-10)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            log_f_n(0.0, 2.0)
        with pytest.raises(DomainError):
            log_f_n(0.5, -1.0)


class TestDeltaRenyi:
    def test_zero_at_small_x(self):
        assert delta_renyi(1e-4, 2, 1.0) == pytest.approx(0.0, abs=1e-3)

    def test_value_at_half(self):
        assert delta_renyi(0.5, 2, 1.0) == pytest.approx(math.log(16.0 / 9.0), abs=1e-12)
        assert math.log(16.0 / 9.0) == pytest.approx(0.575364, abs=1e-6)

    def test_gamma_linearity(self):
        for x in (0.1, 0.3, 0.45):
            assert delta_renyi(x, 2, 0.5) == pytest.approx(0.5 * delta_renyi(x, 2, 1.0), rel=1e-12)

    def test_fermion_ratio_relation(self):
        # F_psi^(n) = sqrt(F_E^(n)) at all sampled (n, x)
        for x in (0.08, 0.21, 0.37, 0.5):
            for n in (2.0, 3.0, 4.0):
                f_e = math.exp(1.0 * log_f_n(x, n))
                f_psi = math.exp(0.5 * log_f_n(x, n))
                assert f_psi == pytest.approx(math.sqrt(f_e), rel=1e-10)


class TestDeltaSC:
    def test_zero_at_small_x(self):
        ds, dc = delta_s_and_c(1e-3, 1.0)
        assert abs(ds) < 1e-4
        assert abs(dc) < 1e-4

    def test_consistency_with_closed_form(self):
        params = ising_params()
        const = params.minus_c1prime - params.d2_ln_cn
        for x in np.linspace(0.02, 0.98, 50):
            ds, dc = delta_s_and_c(float(x), params.gamma)
            closed = s_minus_c(float(x), params) - const
            assert ds - dc == pytest.approx(closed, abs=1e-6)

    def test_gamma_linearity(self):
        for x in (0.15, 0.33):
            ds1, dc1 = delta_s_and_c(x, 1.0)
            ds2, dc2 = delta_s_and_c(x, 0.5)
            assert ds2 == pytest.approx(0.5 * ds1, rel=1e-10)
            assert dc2 == pytest.approx(0.5 * dc1, rel=1e-10)

    def test_symmetry(self):
        # differencing amplifies the lgamma rounding by 1/step^2, so the
        # symmetric points agree to the numerical-derivative floor only
        for x in (0.12, 0.31):
            a = delta_s_and_c(x, 1.0)
            b = delta_s_and_c(1.0 - x, 1.0)
            assert a[0] == pytest.approx(b[0], abs=1e-6)
            assert a[1] == pytest.approx(b[1], abs=1e-6)


class TestSMinusC:
    def test_xx_short_interval_limit(self):
        params = xx_params()
        want = params.minus_c1prime - params.d2_ln_cn
        assert want == pytest.approx(0.191, abs=2e-3)
        assert s_minus_c(1e-3, params) == pytest.approx(want, abs=1e-4)

    def test_ising_short_interval_limit(self):
        params = ising_params()
        want = params.minus_c1prime - params.d2_ln_cn
        assert want == pytest.approx(0.094, abs=1e-3)
        assert s_minus_c(1e-3, params) == pytest.approx(want, abs=1e-4)

    def test_monotone_growth_to_half(self):
        params = xx_params()
        vals = [s_minus_c(x, params) for x in np.linspace(0.05, 0.5, 12)]
        assert all(b > a for a, b in zip(vals, vals[1:]))


class TestGroundStateConstants:
    def test_xx_constants(self):
        params = xx_params(ell=100.0, L=200.0)
        s, c = gs_entropy_capacity(params)
        lead = (1.0 / 3.0) * math.log((200.0 / math.pi) * 1.0)
        assert s == pytest.approx(lead + math.log(2.0) / 3.0 + 0.495018, abs=1e-12)
        assert c == pytest.approx(lead + math.log(2.0) / 3.0 + 0.303516, abs=1e-12)

    def test_infinite_line_form(self):
        params = xx_params(ell=100.0, L=None)
        s, _ = gs_entropy_capacity(params)
        assert s == pytest.approx(math.log(100.0) / 3.0 + math.log(2.0) / 3.0 + 0.495018, abs=1e-12)

    def test_s_minus_c_independent_of_ell(self):
        params = xx_params(L=400.0)
        diffs = []
        for ell in (20.0, 80.0, 150.0):
            s, c = gs_entropy_capacity(params.with_geometry(ell=ell))
            diffs.append(s - c)
        assert np.allclose(diffs, diffs[0], atol=1e-12)


class TestDeltaM2Curve:
    def test_zero_at_small_x(self):
        params = ising_params(ell=100.0)
        assert delta_m2(1e-3, params) == pytest.approx(0.0, abs=2e-3)

    def test_ell_dependence(self):
        p100 = ising_params(ell=100.0)
        p200 = ising_params(ell=200.0)
        assert delta_m2(0.3, p100) != pytest.approx(delta_m2(0.3, p200), abs=1e-3)

    def test_symmetry(self):
        # L = ell/x is held to the same value on both sides so only the
        # numerical-derivative floor separates the symmetric points
        params = ising_params(ell=100.0)
        a = delta_m2(0.2, params)
        b = delta_m2(0.8, params.with_geometry(ell=400.0))  # ell/x matches L = 500
        assert a == pytest.approx(b, abs=1e-6)


class TestUpsilon:
    def test_target_values(self):
        u1, u2 = upsilon_derivatives()
        assert -u1 == pytest.approx(0.495018, abs=1e-4)
        assert u2 == pytest.approx(0.303516, abs=1e-4)

    def test_split_consistency(self):
        u1, u2 = upsilon_derivatives()
        assert -u1 + math.log(2.0) / 3.0 == pytest.approx(0.726, abs=1e-3)
        assert u2 + math.log(2.0) / 3.0 == pytest.approx(0.535, abs=1e-3)

    def test_stability_under_cutoff_and_tolerance(self):
        base = upsilon_derivatives(cutoff=20.0, tol=1e-9)
        wide = upsilon_derivatives(cutoff=30.0, tol=1e-10)
        assert base[0] == pytest.approx(wide[0], abs=1e-6)
        assert base[1] == pytest.approx(wide[1], abs=1e-6)


class TestFindCrossing:
    def test_excess_curves_have_no_sign_change(self):
        # the fermion-state excess curves are positive-definite on
        # (0.01, 0.5), so the scanner must report the missing sign change
        for ell in (100.0, 200.0):
            params = ising_params(ell=ell)
            for quantity in ("deltaS", "deltaS2", "deltaS3", "deltaM2"):
                with pytest.raises(NoSignChange):
                    find_crossing(quantity, params)

    def test_bisection_on_sign_changing_curve(self):
        # shifted constants push the block entropy below -1, flipping the
        # sign of the quadratic term in delta M2 mid-interval
        params = CftParams(gamma=1.0, c=1.0, minus_c1prime=-2.0, d2_ln_cn=0.0, ell=5.0)
        fn = curve("deltaM2", params)
        lo, hi = 0.01, 0.5
        assert fn(lo) * fn(hi) < 0.0
        x = find_crossing("deltaM2", params)
        assert lo < x < hi
        assert fn(x - 1e-5) * fn(x + 1e-5) < 0.0

    def test_unknown_quantity(self):
        with pytest.raises(DomainError):
            curve("deltaS9", ising_params())
