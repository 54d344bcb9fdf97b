"""Special-function kernel tests: analytic identities, independent oracles,
and finite-difference agreement for the shape derivatives."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from adt_design import (DomainError, GammaShapeScale, digamma, gamma_cdf,
                        gamma_cdf_dshape, gamma_pdf, gamma_pdf_dshape,
                        gamma_quantile, log_gamma, reg_gamma_q,
                        reg_gamma_q_dshape, trigamma)

from helpers import central_diff

EULER_GAMMA = 0.5772156649015329


class TestLogGamma:
    def test_identities(self):
        assert log_gamma(1.0) == pytest.approx(0.0, abs=1e-14)
        assert log_gamma(0.5) == pytest.approx(math.log(math.sqrt(math.pi)), rel=1e-13)
        assert log_gamma(10.0) == pytest.approx(math.log(362880.0), rel=1e-13)

    def test_domain(self):
        with pytest.raises(DomainError):
            log_gamma(0.0)
        with pytest.raises(DomainError):
            log_gamma(-1.5)

    @given(st.floats(min_value=1e-3, max_value=1e3))
    def test_recurrence(self, z):
        assert log_gamma(z + 1.0) == pytest.approx(log_gamma(z) + math.log(z), rel=1e-11, abs=1e-11)


class TestDigamma:
    def test_identities(self):
        assert digamma(1.0) == pytest.approx(-EULER_GAMMA, abs=1e-12)
        assert digamma(2.0) == pytest.approx(1.0 - EULER_GAMMA, abs=1e-12)

    def test_fd_oracle(self):
        # frozen from the central difference of log_gamma at h=1e-5
        fd = central_diff(log_gamma, 3.7, 1e-5)
        assert digamma(3.7) == pytest.approx(fd, abs=1e-9)
        assert digamma(3.7) == pytest.approx(1.16715353936151, abs=1e-10)

    def test_domain(self):
        with pytest.raises(DomainError):
            digamma(-0.5)


class TestTrigamma:
    def test_identities(self):
        assert trigamma(1.0) == pytest.approx(math.pi**2 / 6, rel=1e-12)
        assert trigamma(0.5) == pytest.approx(math.pi**2 / 2, rel=1e-12)

    def test_series_oracle(self):
        n = np.arange(200_000)
        series = float(np.sum(1.0 / (5.3 + n) ** 2)) + 1.0 / 199_999.3  # tail integral
        assert trigamma(5.3) == pytest.approx(series, rel=1e-5)
        assert trigamma(5.3) == pytest.approx(0.2075908890224981, abs=1e-10)

    @given(st.floats(min_value=0.1, max_value=50.0))
    @settings(max_examples=40)
    def test_second_difference_of_log_gamma(self, z):
        # abs floor covers the eps*lnGamma/h^2 rounding noise of the oracle
        h = 1e-4
        second = (log_gamma(z + h) - 2 * log_gamma(z) + log_gamma(z - h)) / h**2
        noise = 2e-15 * (abs(log_gamma(z)) + 1.0) / h**2
        assert trigamma(z) == pytest.approx(second, rel=1e-5, abs=noise)


class TestRegGammaQ:
    def test_identities(self):
        assert reg_gamma_q(1.0, 2.0) == pytest.approx(math.exp(-2.0), rel=1e-13)
        assert reg_gamma_q(3.0, 0.0) == 1.0

    def test_quadrature_oracle(self):
        s = 2.5
        val, err = quad(lambda t: t ** (s - 1) * math.exp(-t), 1.7, np.inf)
        oracle = val / math.gamma(s)
        assert reg_gamma_q(2.5, 1.7) == pytest.approx(oracle, rel=1e-10)
        assert reg_gamma_q(2.5, 1.7) == pytest.approx(0.6385699231037951, abs=1e-12)

    def test_monotone_and_bounded(self):
        z = np.linspace(0.0, 40.0, 200)
        q = reg_gamma_q(3.3, z)
        assert np.all(np.diff(q) <= 0)
        assert np.all((q >= 0) & (q <= 1))

    def test_domain(self):
        with pytest.raises(DomainError):
            reg_gamma_q(-1.0, 2.0)
        with pytest.raises(DomainError):
            reg_gamma_q(1.0, -0.1)


class TestGammaCdfAndQuantile:
    def test_cdf_identities(self):
        p = GammaShapeScale(1.0, 1.0)
        assert gamma_cdf(0.0, p) == 0.0
        assert gamma_cdf(2.0, p) == pytest.approx(1.0 - math.exp(-2.0), rel=1e-13)

    def test_cdf_quadrature_oracle(self):
        p = GammaShapeScale(2.4, 1.24)
        val, _ = quad(lambda t: gamma_pdf(t, p), 1e-12, 3.1)
        assert gamma_cdf(3.1, p) == pytest.approx(val, rel=1e-9)
        assert gamma_cdf(3.1, p) == pytest.approx(0.6102043948987751, abs=1e-12)

    def test_quantile_median_exponential(self):
        p = GammaShapeScale(1.0, 1.0)
        assert gamma_quantile(0.5, p) == pytest.approx(math.log(2.0), rel=1e-12)

    def test_quantile_small_u_limit(self):
        p = GammaShapeScale(2.0, 1.5)
        y = gamma_quantile(1e-10, p)
        assert 0 < y < 1e-4

    def test_quantile_bisection_oracle(self):
        p = GammaShapeScale(3.3, 0.9)
        lo, hi = 0.0, 100.0
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            if gamma_cdf(mid, p) < 0.73:
                lo = mid
            else:
                hi = mid
        assert gamma_quantile(0.73, p) == pytest.approx(0.5 * (lo + hi), abs=1e-9)

    def test_roundtrip(self, rng):
        for _ in range(50):
            shape = float(np.exp(rng.uniform(np.log(0.05), np.log(50))))
            scale = float(rng.uniform(0.2, 5.0))
            u = float(rng.uniform(1e-6, 1 - 1e-6))
            p = GammaShapeScale(shape, scale)
            assert gamma_cdf(gamma_quantile(u, p), p) == pytest.approx(u, abs=1e-9)

    def test_domain(self):
        p = GammaShapeScale(1.0, 1.0)
        with pytest.raises(DomainError):
            gamma_quantile(0.0, p)
        with pytest.raises(DomainError):
            gamma_quantile(1.0, p)
        with pytest.raises(DomainError):
            gamma_cdf(-0.1, p)


class TestPdfDshape:
    def test_at_scale_point(self):
        # kappa = 1 and y = scale make the log term vanish
        gamma_rate, delta, nu = 2.0, 0.5, 1.3
        p = GammaShapeScale(gamma_rate * delta, nu)
        expected = gamma_pdf(nu, p) * delta * (-digamma(1.0))
        assert gamma_pdf_dshape(nu, p, delta) == pytest.approx(expected, rel=1e-13)

    def test_fd_oracle_grid(self, rng):
        for _ in range(100):
            gamma_rate = float(np.exp(rng.uniform(np.log(0.05), np.log(50))))
            delta = float(rng.uniform(0.05, 2.0))
            nu = float(rng.uniform(0.3, 3.0))
            u = float(rng.uniform(1e-4, 0.9999))
            y = float(gamma_quantile(u, GammaShapeScale(gamma_rate * delta, nu)))
            h = 1e-6
            fd = central_diff(
                lambda g: gamma_pdf(y, GammaShapeScale(g * delta, nu)), gamma_rate, h)
            got = gamma_pdf_dshape(y, GammaShapeScale(gamma_rate * delta, nu), delta)
            assert got == pytest.approx(fd, rel=1e-6, abs=1e-12)

    def test_specific_value(self):
        # rate 2, interval 0.3, scale 1.17 at y = 1.5; frozen from the oracle
        p = GammaShapeScale(0.6, 1.17)
        got = gamma_pdf_dshape(1.5, p, 0.3)
        fd = central_diff(lambda g: gamma_pdf(1.5, GammaShapeScale(g * 0.3, 1.17)), 2.0, 1e-6)
        assert got == pytest.approx(fd, rel=1e-6)
        assert got == pytest.approx(0.0773863867709057, abs=1e-10)

    @pytest.mark.filterwarnings("ignore::scipy.integrate.IntegrationWarning")
    def test_integral_is_zero(self):
        # density normalization does not depend on the rate; split the domain
        # so quad can handle the y^(shape-1) endpoint singularity
        p = GammaShapeScale(1.35 * 0.05, 1.17)
        mid = float(gamma_quantile(0.5, p))
        lo, _ = quad(lambda y: gamma_pdf_dshape(y, p, 0.05), 0.0, mid)
        hi, _ = quad(lambda y: gamma_pdf_dshape(y, p, 0.05), mid, np.inf)
        assert lo + hi == pytest.approx(0.0, abs=1e-8)


class TestCdfDshape:
    def test_fd_oracle_grid(self, rng):
        for _ in range(100):
            kappa = float(np.exp(rng.uniform(np.log(0.05), np.log(50))))
            delta = float(rng.uniform(0.05, 2.0))
            nu = float(rng.uniform(0.3, 3.0))
            gamma_rate = kappa / delta
            u = float(rng.uniform(1e-4, 0.9999))
            y = float(gamma_quantile(u, GammaShapeScale(kappa, nu)))
            fd = central_diff(
                lambda g: gamma_cdf(y, GammaShapeScale(g * delta, nu)), gamma_rate, 1e-6)
            got = gamma_cdf_dshape(y, GammaShapeScale(kappa, nu), delta)
            assert got == pytest.approx(fd, rel=1e-5, abs=1e-11)

    def test_far_tail_is_zero(self):
        # derivative vanishes as y -> inf since F -> 1 for every rate
        p = GammaShapeScale(1.35, 1.17)
        y = 50.0 * p.shape * p.scale
        assert gamma_cdf(y, p) > 1.0 - 1e-12
        assert abs(gamma_cdf_dshape(y, p, 1.0)) < 1e-12
        tiny_shape = GammaShapeScale(0.0675, 1.17)
        assert abs(gamma_cdf_dshape(200.0 * 1.17, tiny_shape, 0.05)) < 1e-12

    def test_specific_value(self):
        p = GammaShapeScale(1.35 * 0.05, 1.17)
        got = gamma_cdf_dshape(2.0, p, 0.05)
        fd = central_diff(
            lambda g: gamma_cdf(2.0, GammaShapeScale(g * 0.05, 1.17)), 1.35, 1e-6)
        assert got == pytest.approx(fd, rel=1e-5)
        assert got == pytest.approx(-0.004407967768571552, abs=1e-9)

    def test_always_nonpositive(self, rng):
        for _ in range(50):
            kappa = float(np.exp(rng.uniform(np.log(0.05), np.log(20))))
            u = float(rng.uniform(1e-6, 1 - 1e-6))
            p = GammaShapeScale(kappa, 1.0)
            y = float(gamma_quantile(u, p))
            assert gamma_cdf_dshape(y, p, 1.0) <= 0

    def test_vectorized(self):
        p = GammaShapeScale(0.4, 1.1)
        ys = np.array([0.1, 0.5, 2.0, 8.0])
        vec = gamma_cdf_dshape(ys, p, 0.4)
        scalar = [gamma_cdf_dshape(float(y), p, 0.4) for y in ys]
        np.testing.assert_allclose(vec, scalar, rtol=1e-13)


class TestRegGammaQDshape:
    def test_fd_oracle(self, rng):
        for _ in range(100):
            s = float(np.exp(rng.uniform(np.log(0.05), np.log(50))))
            u = float(rng.uniform(1e-4, 0.9999))
            z = float(gamma_quantile(u, GammaShapeScale(s, 1.0)))
            fd = central_diff(lambda t: reg_gamma_q(t, z), s, 1e-6 * max(s, 0.01))
            assert reg_gamma_q_dshape(s, z) == pytest.approx(fd, rel=1e-5, abs=1e-11)

    def test_zero_argument(self):
        assert reg_gamma_q_dshape(2.3, 0.0) == 0.0

    def test_specific_value(self):
        got = reg_gamma_q_dshape(4.2, 3.0)
        fd = central_diff(lambda t: reg_gamma_q(t, 3.0), 4.2, 1e-6)
        assert got == pytest.approx(fd, rel=1e-6)
        assert got == pytest.approx(0.1888934976463950, abs=1e-9)

    def test_sign_convention(self):
        # equals minus the shape derivative of the lower regularized function
        s, z = 1.7, 2.2
        p = GammaShapeScale(s, 1.0)
        assert reg_gamma_q_dshape(s, z) == pytest.approx(
            -gamma_cdf_dshape(z, p, 1.0), rel=1e-12)


def test_shape_scale_validation():
    with pytest.raises(DomainError):
        GammaShapeScale(0.0, 1.0)
    with pytest.raises(DomainError):
        GammaShapeScale(1.0, -2.0)
