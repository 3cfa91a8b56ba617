import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as stf

from tidalclock import (GridTooCoarseError, PhaseBranchError,
                        PiecewisePotential, peres_transit_time, phase_result,
                        reflection_coefficient, solve_interior,
                        solve_interior_ivp, theta_exact, theta_first_order,
                        transit_exact, t_prime_scaled)
from tidalclock.stationary import DEFAULT_ETA, required_nodes, default_nodes


class TestSolveInterior:
    def test_free_solution(self):
        # u = sin(kappa x)/kappa satisfies u(0) = 0, u'(0) = 1
        ub, upb = solve_interior(5.0, 0.0)
        assert ub == pytest.approx(-math.sin(5.0) / 5.0, rel=1e-10)
        assert upb == pytest.approx(math.cos(5.0), rel=1e-10)
        log_derivative = upb / ub
        assert log_derivative == pytest.approx(
            5.0 * math.cos(5.0) / -math.sin(5.0), rel=1e-9)

    def test_against_adaptive_oracle(self):
        ub, upb = solve_interior(5.0, -0.02)
        ub_o, upb_o = solve_interior_ivp(5.0, -0.02)
        assert ub == pytest.approx(ub_o, rel=1e-10)
        assert upb == pytest.approx(upb_o, rel=1e-10)

    def test_fourth_order_convergence(self):
        # halving the step should cut the error ~16x against the oracle
        ub_ref, upb_ref = solve_interior_ivp(7.0, -0.3)
        errs = []
        for n in (1000, 2000):
            ub, upb = solve_interior(7.0, -0.3, n=n)
            errs.append(abs(upb - upb_ref))
        slope = math.log2(errs[0] / errs[1])
        assert 3.5 <= slope <= 4.5

    def test_grid_refusal(self):
        with pytest.raises(GridTooCoarseError, match="1000"):
            solve_interior(5.0, -0.02, n=500)
        # high kappa needs more than the 1000-node floor
        need = required_nodes(200.0)
        assert need > 1000
        with pytest.raises(GridTooCoarseError):
            solve_interior(200.0, 0.0, n=need - 10)

    def test_default_grid_exceeds_minimum(self):
        for kappa in (0.5, 5.0, 100.0, 300.0):
            assert default_nodes(kappa) >= required_nodes(kappa)

    def test_bad_kappa(self):
        with pytest.raises(ValueError):
            solve_interior(-1.0, 0.0)


class TestReflection:
    def test_free_case(self):
        ub, upb = solve_interior(5.0, 0.0)
        r = reflection_coefficient(ub, upb, 5.0)
        assert r == pytest.approx(-cmath.exp(2j * 5.0), abs=1e-9)

    def test_neumann_like(self):
        # u'(-1) = 0 means L = 0 and r = +1
        assert reflection_coefficient(1.0, 0.0, 3.0) == pytest.approx(1.0)

    def test_node_at_start_line(self):
        # u(-1) = 0 is the L = infinity branch: r = -1
        assert reflection_coefficient(0.0, 1.0, 3.0) == pytest.approx(-1.0)

    def test_both_zero_invalid(self):
        with pytest.raises(ValueError):
            reflection_coefficient(0.0, 0.0, 3.0)

    @given(stf.floats(0.5, 60.0), stf.floats(-0.5, 0.5))
    @settings(max_examples=25, deadline=None)
    def test_unitarity(self, kappa, atilde):
        res = phase_result(kappa, atilde)
        assert abs(abs(res.reflection_r) - 1.0) <= 1e-10

    def test_phase_consistent_with_first_order(self):
        res = phase_result(5.0, -0.02)
        first = theta_first_order(5.0, PiecewisePotential(-0.02))
        # |r| = 1 and the reflection phase carries theta up to O(atilde^2)
        assert res.theta == pytest.approx(first.theta_quadrature, abs=2e-7)


class TestThetaExact:
    def test_free_is_zero(self):
        assert theta_exact(5.0, 0.0) == 0.0
        assert abs(theta_exact(100.0, 0.0)) <= 1e-10

    def test_reference_value(self):
        # first order gives 1.24898e-3; exact shifts by O(atilde^2) ~ 9e-8
        assert theta_exact(5.0, -0.02) == pytest.approx(1.2489e-3, abs=2e-7)
        assert theta_exact(5.0, -0.02) > 0.0  # attractive tide advances phase

    def test_matches_raw_reflection_phase(self):
        res = phase_result(5.0, -0.02)
        raw = cmath.phase(-res.reflection_r * cmath.exp(-2j * res.kappa))
        assert res.theta == pytest.approx(raw, abs=1e-8)
        assert res.phi_total == pytest.approx(2.0 * res.kappa + res.theta)

    def test_linearity_defect_is_second_order(self):
        d = theta_exact(5.0, -0.04) - 2.0 * theta_exact(5.0, -0.02)
        assert abs(d) < 5e-7
        assert abs(d) > 1e-9  # the second order really is there

    def test_grid_spec_recorded(self):
        res = phase_result(5.0, -0.02, n=2048)
        assert res.grid_spec.n_nodes == 2048
        assert res.grid_spec.step == pytest.approx(1.0 / 2048)


class TestPeresClock:
    def test_free_particle(self):
        for kappa in (0.5, 2.0, 5.0, 20.0, 100.0):
            clock = peres_transit_time(kappa, 0.0)
            assert clock.t_quantum == pytest.approx(2.0 / kappa, rel=1e-12)
            assert clock.t_theta_part == 0.0
            assert clock.t_free_part == 2.0 / kappa

    def test_parts_sum(self):
        clock = peres_transit_time(5.0, -0.02)
        assert clock.t_quantum == pytest.approx(
            clock.t_free_part + clock.t_theta_part, rel=1e-15)

    def test_against_classical_and_correction(self):
        clock = peres_transit_time(5.0, -0.02)
        t_cl = transit_exact(5.0, PiecewisePotential(-0.02))
        t_prime = t_prime_scaled(5.0, -0.02)
        resid = clock.t_quantum - t_cl
        assert abs(resid) <= abs(t_prime)
        # the residual is the closed-form correction, up to second order and
        # clock accuracy; both are far below 1e-6 of the transit time
        assert abs(resid - t_prime) <= 1e-6 * t_cl

    def test_high_k_deviation_shrinks(self):
        # relative quantum-classical deviation falls ~1/kappa^2
        devs = []
        for kappa in (20.0, 50.0):
            t_cl = transit_exact(kappa, PiecewisePotential(-0.02))
            resid = peres_transit_time(kappa, -0.02).t_quantum - t_cl
            devs.append(abs(resid) / t_cl)
            assert abs(resid) <= 2.0 * abs(t_prime_scaled(kappa, -0.02))
        assert devs[1] < devs[0] / 4.0

    def test_metadata(self):
        clock = peres_transit_time(5.0, -0.02)
        assert clock.fd_step == DEFAULT_ETA
        assert clock.richardson_order == 1

    def test_deterministic(self):
        a = peres_transit_time(7.3, -0.11)
        b = peres_transit_time(7.3, -0.11)
        assert a == b

    def test_branch_jump_refusal(self):
        # a huge tide swings theta across branches faster than the stencil
        with pytest.raises(PhaseBranchError, match="reduce eta"):
            peres_transit_time(10.0, -4e4, n=4000, eta=0.45)

    def test_eta_validation(self):
        with pytest.raises(ValueError):
            peres_transit_time(5.0, -0.02, eta=0.9)
