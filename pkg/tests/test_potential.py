import numpy as np
import pytest
from scipy.integrate import quad

from tidalclock import PiecewisePotential


class TestEvaluate:
    def test_zero_at_start_line(self):
        assert PiecewisePotential(-0.02).evaluate(-1.0) == 0.0

    def test_zero_in_free_region(self):
        assert PiecewisePotential(-0.02).evaluate(-2.0) == 0.0

    def test_midpoint_value(self):
        # atilde (x+1)^2 / 2 at x = -0.5: -0.02 * 0.25 / 2 = -0.0025
        assert PiecewisePotential(-0.02).evaluate(-0.5) == pytest.approx(
            -0.0025, rel=1e-15)

    def test_wall_is_not_a_value(self):
        pot = PiecewisePotential(-0.02)
        with pytest.raises(ValueError):
            pot.evaluate(0.0)
        with pytest.raises(ValueError):
            pot.evaluate(np.array([-0.5, 0.5]))

    def test_continuity_at_start_line(self):
        pot = PiecewisePotential(-0.5)
        eps = 1e-9
        assert abs(pot.evaluate(-1.0 - eps)) == 0.0
        assert abs(pot.evaluate(-1.0 + eps)) < 1e-15

    def test_array_input(self):
        pot = PiecewisePotential(-0.02)
        x = np.array([-2.0, -1.0, -0.5])
        np.testing.assert_allclose(pot.evaluate(x), [0.0, 0.0, -0.0025],
                                   atol=1e-18)

    def test_schrodinger_form_is_twice_energy_form(self):
        pot = PiecewisePotential(-0.3)
        for x in (-0.9, -0.5, -0.1):
            assert pot.schrodinger_form(x) == pytest.approx(
                2.0 * pot.evaluate(x), rel=1e-15)

    def test_derivative_matches_finite_difference(self):
        pot = PiecewisePotential(-0.3)
        h = 1e-6
        for x in (-0.8, -0.4, -1.5):
            fd = (pot.evaluate(x + h) - pot.evaluate(x - h)) / (2 * h)
            assert pot.derivative(x) == pytest.approx(fd, abs=1e-9)


class TestIntegral:
    def test_zero_tide(self):
        assert PiecewisePotential(0.0).integral_V() == 0.0

    def test_linearity(self):
        assert PiecewisePotential(-0.04).integral_V() == pytest.approx(
            2.0 * PiecewisePotential(-0.02).integral_V(), rel=1e-15)

    def test_value(self):
        assert PiecewisePotential(-0.02).integral_V() == pytest.approx(
            -0.02 / 6.0, rel=1e-15)

    @pytest.mark.parametrize("seed", range(5))
    def test_quadrature_oracle(self, seed):
        rng = np.random.default_rng(seed)
        atilde = float(rng.uniform(-1.0, 1.0))
        pot = PiecewisePotential(atilde)
        val, _ = quad(pot.evaluate, -1.0, 0.0, epsabs=1e-15, epsrel=1e-13)
        assert pot.integral_V() == pytest.approx(val, rel=1e-12, abs=1e-15)

    def test_positive_atilde_accepted(self):
        # synthetic sign-flipped tide is allowed by construction
        pot = PiecewisePotential(0.5)
        assert pot.evaluate(-0.5) > 0.0
