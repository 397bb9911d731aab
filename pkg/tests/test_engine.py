import math

import pytest

from casimir.engine import Tolerance, adaptive_quad, sum_series, find_root, finite_diff

ZETA3 = 1.2020569031595943  # sum 1/k^3, frozen from a high-precision partial sum
TIGHT = Tolerance(rel=1e-12, abs=0.0)


def test_tolerance_validation():
    with pytest.raises(ValueError):
        Tolerance(rel=0.0)
    with pytest.raises(ValueError):
        Tolerance(abs=-1.0)
    with pytest.raises(ValueError):
        Tolerance(max_iter=0)


class TestAdaptiveQuad:
    def test_bose_integral(self):
        res = adaptive_quad(lambda x: x**3 / math.expm1(x) if x < 700 else 0.0, 0.0, math.inf, TIGHT)
        assert res.converged
        assert res.value == pytest.approx(math.pi**4 / 15, rel=1e-11)

    def test_exponential(self):
        res = adaptive_quad(lambda x: math.exp(-x), 0.0, math.inf, TIGHT)
        assert res.value == pytest.approx(1.0, rel=1e-11)

    def test_log_kernel(self):
        # int_0^inf x ln(1-e^-x) dx = -zeta(3): expand the log and integrate
        # term by term, giving -sum 1/k^3
        res = adaptive_quad(
            lambda x: x * math.log1p(-math.exp(-x)), 0.0, math.inf, TIGHT
        )
        assert res.value == pytest.approx(-ZETA3, rel=1e-11)

    def test_polynomial_degree_5_exact(self):
        poly = lambda x: 2 * x**5 - x**4 + 3 * x**3 - x**2 + x - 7.0
        anti = lambda x: x**6 / 3 - x**5 / 5 + 3 * x**4 / 4 - x**3 / 3 + x**2 / 2 - 7.0 * x
        res = adaptive_quad(poly, 1.0, 3.0, TIGHT)
        assert res.value == pytest.approx(anti(3.0) - anti(1.0), rel=1e-13)

    def test_error_estimate_honors_tolerance(self):
        tol = Tolerance(rel=1e-9, abs=1e-14)
        res = adaptive_quad(lambda x: math.exp(-x * x), 0.0, math.inf, tol)
        assert res.converged
        assert res.err_estimate <= max(tol.rel * abs(res.value), tol.abs)
        assert res.value == pytest.approx(0.5 * math.sqrt(math.pi), rel=1e-9)

    def test_nan_is_hard_error(self):
        with pytest.raises(ValueError):
            adaptive_quad(lambda x: math.nan, 0.0, 1.0)

    def test_invalid_interval(self):
        with pytest.raises(ValueError):
            adaptive_quad(math.sin, 2.0, 1.0)

    def test_nonconvergence_flagged_not_raised(self):
        res = adaptive_quad(
            lambda x: math.sin(50.0 / (x + 1e-3)), 0.0, 1.0, TIGHT, max_panels=4
        )
        assert not res.converged


class TestSumSeries:
    def test_zeta4(self):
        res = sum_series(lambda m: 1.0 / m**4, 1)
        assert res.converged
        assert res.value == pytest.approx(math.pi**4 / 90, rel=1e-10)

    def test_geometric(self):
        res = sum_series(lambda m: math.exp(-m), 1)
        assert res.value == pytest.approx(1.0 / (math.e - 1.0), rel=1e-10)

    def test_log_terms(self):
        # frozen from a 50-digit partial sum; dominated by the m=1 term -e^(-4 pi)
        res = sum_series(lambda m: m**2 * math.log1p(-math.exp(-4 * math.pi * m)), 1)
        assert res.value == pytest.approx(-3.487397083610031e-6, rel=1e-12)

    def test_refinement_stability(self):
        coarse = sum_series(lambda m: math.exp(-0.5 * m), 1, Tolerance(rel=1e-6, abs=1e-8))
        fine = sum_series(lambda m: math.exp(-0.5 * m), 1, Tolerance(rel=5e-7, abs=5e-9))
        assert abs(fine.value - coarse.value) < coarse.err_estimate

    def test_tail_bound_tracks_power_law_remainder(self):
        # the geometric extrapolation of a quartic tail underestimates the
        # true remainder by 4/3; it stays a faithful scale estimate
        res = sum_series(lambda m: 1.0 / m**4, 1)
        assert abs(res.value - math.pi**4 / 90) <= 2.0 * res.err_estimate

    def test_harmonic_does_not_converge(self):
        res = sum_series(lambda m: 1.0 / m, 1, Tolerance(max_iter=1000))
        assert not res.converged

    def test_converged_error_bound_invariant(self):
        tol = Tolerance()
        res = sum_series(lambda m: math.exp(-m), 1, tol)
        assert res.converged
        assert res.err_estimate <= max(tol.rel * abs(res.value), tol.abs)


class TestFindRoot:
    def test_sqrt2(self):
        assert find_root(lambda x: x * x - 2.0, (1.0, 2.0)) == pytest.approx(
            math.sqrt(2.0), rel=1e-12
        )

    def test_cosine(self):
        assert find_root(math.cos, (1.0, 2.0)) == pytest.approx(math.pi / 2, rel=1e-12)

    def test_quadratic_oracle(self):
        # root of x(2 - x/100) - 1: quadratic formula (200 - sqrt(39600))/2
        root = find_root(lambda x: x * (2.0 - x / 100.0) - 1.0, (0.0, 1.0))
        assert root == pytest.approx((200.0 - math.sqrt(39600.0)) / 2.0, rel=1e-12)

    def test_circuit_eigenvalue_equation(self):
        # x = omega^2 of the dispersive LC example: x(2 - x/100) = 1 - x/100,
        # i.e. x^2 - 201 x + 100 = 0 with lowest root (201 - sqrt(40001))/2
        f = lambda x: x * (2.0 - x / 100.0) - (1.0 - x / 100.0)
        root = find_root(f, (0.0, 1.0))
        assert root == pytest.approx((201.0 - math.sqrt(40001.0)) / 2.0, rel=1e-12)

    @pytest.mark.parametrize(
        "f,fprime,bracket",
        [
            (lambda x: x * x - 2.0, lambda x: 2 * x, (1.0, 2.0)),
            (math.cos, lambda x: -math.sin(x), (1.0, 2.0)),
            (lambda x: x * (2.0 - x / 100.0) - 1.0, lambda x: 2.0 - x / 50.0, (0.0, 1.0)),
        ],
    )
    def test_residual_bound(self, f, fprime, bracket):
        tol = Tolerance()
        root = find_root(f, bracket, tol)
        assert abs(f(root)) < 10.0 * tol.abs * max(1.0, abs(fprime(root) * root))

    def test_invalid_bracket(self):
        with pytest.raises(ValueError):
            find_root(lambda x: x * x + 1.0, (0.0, 1.0))

    def test_iteration_budget(self):
        with pytest.raises(RuntimeError):
            find_root(lambda x: x - 0.123456, (0.0, 1.0), Tolerance(max_iter=2))


class TestFiniteDiff:
    def test_quadratic(self):
        assert abs(finite_diff(lambda x: x * x, 3.0, 1e-4) - 6.0) < 1e-8

    def test_exponential_at_zero(self):
        assert abs(finite_diff(math.exp, 0.0, 1e-5) - 1.0) < 1e-10

    def test_cubic_error_is_exact(self):
        # central difference on x^3 has truncation error exactly h^2 f'''/6 = h^2
        h = 1e-3
        err = finite_diff(lambda x: x**3, 2.0, h) - 12.0
        assert err == pytest.approx(h * h, abs=1e-11)

    def test_step_must_be_positive(self):
        with pytest.raises(ValueError):
            finite_diff(math.exp, 0.0, 0.0)
