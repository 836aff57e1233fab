import cmath
import math

import numpy as np
import pytest

from nckepler import quadrature
from nckepler.errors import CapacityError, DomainError, EvaluationError

from oracles import abel_regularized_poly


class TestBuildRule:
    def test_two_point_legendre(self):
        rule = quadrature.build_rule("finite_legendre", 2)
        assert rule.nodes == pytest.approx([-1.0 / math.sqrt(3.0), 1.0 / math.sqrt(3.0)], abs=1e-15)
        assert rule.weights == pytest.approx([1.0, 1.0], abs=1e-15)

    def test_one_point_laguerre(self):
        rule = quadrature.build_rule("halfline_laguerre", 1)
        assert rule.nodes == pytest.approx([1.0], abs=1e-15)
        assert rule.weights == pytest.approx([1.0], abs=1e-15)

    def test_legendre_16_high_moment(self):
        rule = quadrature.build_rule("finite_legendre", 16)
        moment = float(np.sum(rule.weights * rule.nodes**30))
        assert moment == pytest.approx(2.0 / 31.0, abs=1e-14)

    @pytest.mark.parametrize("order", [1, 2, 3, 8, 16, 64, 128])
    def test_legendre_exactness(self, order):
        rule = quadrature.build_rule("finite_legendre", order)
        for k in range(2 * order):
            moment = float(np.sum(rule.weights * rule.nodes**k))
            exact = 2.0 / (k + 1.0) if k % 2 == 0 else 0.0
            assert abs(moment - exact) < 1e-13 * 2.0

    @pytest.mark.parametrize("order", [1, 2, 8, 32, 128, 160])
    def test_laguerre_exactness(self, order):
        # normalized moments: sum_i w_i u_i^k / k! must equal 1
        rule = quadrature.build_rule("halfline_laguerre", order)
        scaled = rule.weights.copy()
        assert abs(float(np.sum(scaled)) - 1.0) < 1e-13
        for k in range(1, 2 * order):
            scaled = scaled * rule.nodes / k
            assert abs(float(np.sum(scaled)) - 1.0) < 1e-13

    @pytest.mark.parametrize("family,order", [("finite_legendre", 512),
                                              ("halfline_laguerre", 160)])
    def test_structure(self, family, order):
        rule = quadrature.build_rule(family, order)
        assert np.all(np.diff(rule.nodes) > 0.0)
        assert np.all(rule.weights > 0.0)
        if family == "finite_legendre":
            assert rule.nodes[0] > -1.0 and rule.nodes[-1] < 1.0
            assert float(np.sum(rule.weights)) == pytest.approx(2.0, abs=1e-13)
        else:
            assert rule.nodes[0] > 0.0
            assert float(np.sum(rule.weights)) == pytest.approx(1.0, abs=1e-13)

    def test_capacity_and_domain(self):
        with pytest.raises(CapacityError):
            quadrature.build_rule("finite_legendre", 513)
        with pytest.raises(DomainError):
            quadrature.build_rule("finite_legendre", 0)
        with pytest.raises(DomainError):
            quadrature.build_rule("chebyshev", 4)

    def test_cache_returns_frozen_arrays(self):
        rule = quadrature.build_rule("finite_legendre", 8)
        assert rule is quadrature.build_rule("finite_legendre", 8)
        with pytest.raises(ValueError):
            rule.nodes[0] = 0.0


class TestIntegrateNd:
    def test_constant_over_unit_square(self):
        rule = quadrature.build_rule("finite_legendre", 4)
        value = quadrature.integrate_nd(lambda x, y: 1.0, [rule, rule],
                                        [(0.0, 1.0), (0.0, 1.0)])
        assert value == pytest.approx(1.0, abs=1e-14)

    def test_sin_theta(self):
        rule = quadrature.build_rule("finite_legendre", 24)
        value = quadrature.integrate_nd(lambda t: math.sin(t), [rule],
                                        [(0.0, 0.5 * math.pi)])
        assert value == pytest.approx(1.0, abs=1e-13)

    def test_periodic_cosine_vanishes(self):
        rule = quadrature.build_rule("finite_legendre", 32)
        value = quadrature.integrate_nd(lambda a, b: math.cos(a + b),
                                        [rule, rule],
                                        [(0.0, 2.0 * math.pi), (0.0, 2.0 * math.pi)])
        assert abs(value) < 1e-12

    def test_halfline_axis_weights_in_exponential(self):
        rule = quadrature.build_rule("halfline_laguerre", 16)
        value = quadrature.integrate_nd(lambda u: u**3, [rule], [None])
        assert value == pytest.approx(6.0, rel=1e-13)

    def test_nonfinite_integrand_reports_node(self):
        rule = quadrature.build_rule("finite_legendre", 4)
        with pytest.raises(EvaluationError) as info:
            quadrature.integrate_nd(lambda x: math.inf if x > 0.5 else 1.0,
                                    [rule], [(0.0, 1.0)])
        assert info.value.node is not None

    def test_axis_mismatch(self):
        rule = quadrature.build_rule("finite_legendre", 4)
        with pytest.raises(DomainError):
            quadrature.integrate_nd(lambda x: x, [rule], [(0.0, 1.0), (0.0, 2.0)])


class TestEndpointRegularized:
    def test_constant_factor(self):
        # g = 1: only the closed-form continuation term survives
        value = quadrature.integrate_endpoint_regularized(lambda x: np.ones_like(x), 1.0)
        expected = 2.0 ** (-1j) / (-1j)
        assert value == pytest.approx(expected, abs=1e-13)

    def test_linear_factor(self):
        # g = 1 - x gives integral (1-x)^(-i rho) dx = 2^(1-i rho)/(1-i rho)
        rho = 1.0
        value = quadrature.integrate_endpoint_regularized(lambda x: 1.0 - x, rho)
        expected = 2.0 ** (1.0 - 1j * rho) / (1.0 - 1j * rho)
        assert value == pytest.approx(expected, abs=1e-13)

    def test_quadratic_against_abel_oracle(self):
        value = quadrature.integrate_endpoint_regularized(lambda x: x * x, 1.0)
        oracle = abel_regularized_poly([0.0, 0.0, 1.0], 1.0)
        assert abs(value - oracle) < 1e-6

    def test_linearity(self):
        rho = 0.5
        f = quadrature.integrate_endpoint_regularized(lambda x: x, rho)
        g = quadrature.integrate_endpoint_regularized(lambda x: x * x, rho)
        combo = quadrature.integrate_endpoint_regularized(lambda x: 3.0 * x - 2.0 * x * x, rho)
        assert combo == pytest.approx(3.0 * f - 2.0 * g, rel=1e-12)

    @pytest.mark.parametrize("rho", [0.5, 1.0, 2.0])
    def test_polynomials_against_abel_oracle(self, rho):
        rng = np.random.default_rng(42)
        for degree in range(9):
            coeffs = rng.standard_normal(degree + 1)

            def g(x, c=coeffs):
                return np.polynomial.polynomial.polyval(np.asarray(x, dtype=float), c)

            value = quadrature.integrate_endpoint_regularized(g, rho)
            oracle = abel_regularized_poly(list(coeffs), rho)
            assert abs(value - oracle) < 1e-6

    def test_rho_zero_rejected(self):
        with pytest.raises(DomainError):
            quadrature.integrate_endpoint_regularized(lambda x: np.ones_like(x), 0.0)
