import math

import numpy as np
import pytest

from tidalclock import (PiecewisePotential, TurningPointError, transit_exact,
                        transit_perturbative, trajectory_oracle, transit_times)


def closed_form(kappa, atilde):
    """Independent analytic evaluation of the transit quadrature.

    2 Int_0^1 ds / sqrt(kappa^2 - atilde s^2) integrates to inverse
    hyperbolic / circular functions depending on the tide's sign.
    """
    if atilde == 0.0:
        return 2.0 / kappa
    if atilde < 0.0:
        s = math.sqrt(-atilde)
        return 2.0 * math.asinh(s / kappa) / s
    s = math.sqrt(atilde)
    return 2.0 * math.asin(s / kappa) / s


class TestTransitExact:
    def test_free(self):
        assert transit_exact(5.0, PiecewisePotential(0.0)) == 0.4

    def test_first_order_value(self):
        # correction atilde/(3 kappa^3) = -5.3333e-5; second order ~2e-8
        t = transit_exact(5.0, PiecewisePotential(-0.02))
        assert t - 0.4 == pytest.approx(-0.02 / 375.0, abs=5e-8)

    def test_against_closed_form(self):
        for kappa, atilde in ((5.0, -0.02), (2.0, -0.5), (1.0, -0.3),
                              (3.0, 0.5), (20.0, -0.02)):
            t = transit_exact(kappa, PiecewisePotential(atilde))
            assert t == pytest.approx(closed_form(kappa, atilde), rel=1e-12)

    def test_correction_scales_as_inverse_kappa_cubed(self):
        kappas = np.array([5.0, 10.0, 20.0, 50.0])
        corr = [abs(transit_exact(k, PiecewisePotential(-0.02)) - 2.0 / k)
                for k in kappas]
        slope = np.polyfit(np.log(kappas), np.log(corr), 1)[0]
        assert slope == pytest.approx(-3.0, abs=0.01)
        # kappa = 50 correction is 1e-3 of the kappa = 5 one
        assert corr[3] / corr[0] == pytest.approx(1e-3, rel=1e-3)

    def test_free_limit_randomized(self):
        rng = np.random.default_rng(1)
        for _ in range(20):
            kappa = float(rng.uniform(0.5, 100.0))
            assert transit_exact(kappa, PiecewisePotential(0.0)) \
                == pytest.approx(2.0 / kappa, rel=1e-12)

    def test_monotone_in_tide_strength(self):
        ts = [transit_exact(5.0, PiecewisePotential(a))
              for a in (0.0, -0.1, -0.2, -0.4)]
        assert all(t1 > t2 for t1, t2 in zip(ts, ts[1:]))

    def test_turning_point_refusal(self):
        with pytest.raises(TurningPointError, match=r"-0\.25"):
            transit_exact(1.5, PiecewisePotential(4.0))

    def test_synthetic_positive_tide_ok(self):
        t = transit_exact(2.0, PiecewisePotential(1.0))
        assert t == pytest.approx(closed_form(2.0, 1.0), rel=1e-12)
        assert t > 1.0  # uphill potential slows the particle

    def test_bad_kappa(self):
        with pytest.raises(ValueError):
            transit_exact(0.0, PiecewisePotential(0.0))


class TestTransitPerturbative:
    def test_free(self):
        assert transit_perturbative(5.0, PiecewisePotential(0.0)) == 0.4

    def test_linear_in_tide(self):
        t0 = 0.4
        c1 = transit_perturbative(5.0, PiecewisePotential(-0.02)) - t0
        c2 = transit_perturbative(5.0, PiecewisePotential(-0.01)) - t0
        assert c1 == pytest.approx(2.0 * c2, rel=1e-12)

    def test_residual_is_second_order(self):
        # |exact - perturbative| quadruples when atilde doubles
        resid = []
        for atilde in (-0.05, -0.1, -0.2):
            pot = PiecewisePotential(atilde)
            resid.append(abs(transit_exact(5.0, pot)
                             - transit_perturbative(5.0, pot)))
        for r_small, r_big in zip(resid, resid[1:]):
            assert r_big / r_small == pytest.approx(4.0, abs=0.2)

    def test_warns_outside_regime(self):
        with pytest.warns(UserWarning, match="first-order"):
            transit_perturbative(1.0, PiecewisePotential(-0.9))


class TestTrajectoryOracle:
    def test_free(self):
        assert trajectory_oracle(5.0, PiecewisePotential(0.0)) \
            == pytest.approx(0.4, rel=1e-10)

    def test_matches_quadrature(self):
        pot = PiecewisePotential(-0.02)
        assert trajectory_oracle(5.0, pot) == pytest.approx(
            transit_exact(5.0, pot), rel=1e-8)

    def test_strong_tide(self):
        pot = PiecewisePotential(-0.5)
        assert trajectory_oracle(2.0, pot) == pytest.approx(
            transit_exact(2.0, pot), rel=1e-8)

    def test_randomized_cross_engine(self):
        rng = np.random.default_rng(42)
        for _ in range(10):
            kappa = float(rng.uniform(1.0, 50.0))
            atilde = float(rng.uniform(-0.5, 0.0))
            pot = PiecewisePotential(atilde)
            assert trajectory_oracle(kappa, pot) == pytest.approx(
                transit_exact(kappa, pot), rel=1e-8)

    def test_turning_point_refusal(self):
        with pytest.raises(TurningPointError):
            trajectory_oracle(1.0, PiecewisePotential(2.0))


def test_bundle():
    res = transit_times(5.0, PiecewisePotential(-0.02))
    assert res.t_zero == 0.4
    assert res.t_exact < res.t_zero  # attractive tide shortens the bounce
    assert res.t_perturbative == pytest.approx(res.t_exact, abs=5e-8)
    assert "quad_rel_tol" in res.method_meta
