"""Classical out-and-back transit time.

Three independent routes:

* ``transit_exact``        adaptive quadrature of sqrt(2m) dx / sqrt(E - V)
* ``transit_perturbative`` T0 + T0 b^2 alpha / 6E, first order in the tide
* ``trajectory_oracle``    Newtonian integration with wall reflection

In scaled units (hbar = m = b = 1): E = kappa^2/2, v = kappa, T0 = 2/kappa,
and the perturbative correction is atilde / (3 kappa^3).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad, solve_ivp

from .potential import PiecewisePotential


class TurningPointError(ValueError):
    """The energy does not clear the potential barrier inside [-1, 0]."""


@dataclass(frozen=True)
class ClassicalResult:
    t_exact: float
    t_perturbative: float
    t_zero: float
    method_meta: dict


def _check_turning_point(kappa: float, atilde: float) -> None:
    # max of atilde (x+1)^2 on [-1, 0) is atilde (approached at the wall)
    if atilde > 0.0 and kappa * kappa <= atilde:
        x_turn = -1.0 + kappa / math.sqrt(atilde)
        raise TurningPointError(
            f"classical turning point at x = {x_turn:.6f} inside [-1, 0]: "
            f"E = kappa^2/2 = {kappa * kappa / 2:.6g} does not clear the "
            f"barrier (max 2V = atilde = {atilde:.6g})")


def transit_exact(kappa: float, potential: PiecewisePotential,
                  *, rel_tol: float = 1e-12) -> float:
    """Out-and-back time by adaptive quadrature, relative error <= 1e-10.

    The free part 2/kappa is split off analytically so the quadrature only
    sees the tidal correction; the difference integrand is smooth and the
    result keeps full accuracy even when the correction is ~1e-12 of T0.
    """
    if not kappa > 0.0:
        raise ValueError(f"kappa must be > 0, got {kappa}")
    at = potential.atilde
    _check_turning_point(kappa, at)
    if at == 0.0:
        return 2.0 / kappa

    k2 = kappa * kappa

    def correction(x):
        s = x + 1.0
        return 2.0 * (1.0 / math.sqrt(k2 - at * s * s) - 1.0 / kappa)

    val, err = quad(correction, -1.0, 0.0, epsabs=0.0, epsrel=rel_tol, limit=200)
    return 2.0 / kappa + val


def transit_perturbative(kappa: float, potential: PiecewisePotential) -> float:
    """First-order transit time T0 (1 + b^2 alpha / 6E) in scaled form.

    Warns (does not fail) outside the perturbative regime |atilde| << kappa^2.
    """
    if not kappa > 0.0:
        raise ValueError(f"kappa must be > 0, got {kappa}")
    at = potential.atilde
    if abs(at) > 0.1 * kappa * kappa:
        warnings.warn(f"|atilde| = {abs(at):.3g} is not small against "
                      f"kappa^2 = {kappa * kappa:.3g}; first-order result "
                      "is unreliable", stacklevel=2)
    t_zero = 2.0 / kappa
    energy = 0.5 * kappa * kappa
    # T0 * (b^2 alpha / 6E) with scaled alpha = atilde / 2
    return t_zero + t_zero * (0.5 * at) / (6.0 * energy)


def trajectory_oracle(kappa: float, potential: PiecewisePotential,
                      *, rtol: float = 1e-12, atol: float = 1e-14) -> float:
    """Independent check: integrate x'' = -dV/dx with elastic wall reflection.

    Launches from x = -1 with velocity +kappa, reflects at the wall, stops on
    return to the start line.  Events are located by the integrator's root
    finding on dense output (position tolerance ~1e-12).
    """
    if not kappa > 0.0:
        raise ValueError(f"kappa must be > 0, got {kappa}")
    _check_turning_point(kappa, potential.atilde)
    at = potential.atilde

    def rhs(t, y):
        x, v = y
        force = -at * (x + 1.0) if x >= -1.0 else 0.0
        return [v, force]

    t_budget = 20.0 / kappa + 1.0

    def hit_wall(t, y):
        return y[0]
    hit_wall.terminal = True
    hit_wall.direction = 1

    out = solve_ivp(rhs, [0.0, t_budget], [-1.0, kappa], method="RK45",
                    rtol=rtol, atol=atol, events=hit_wall, dense_output=True)
    if not out.t_events[0].size:
        raise RuntimeError(
            f"trajectory never reached the wall within t = {t_budget:.3g}; "
            "step-size/turning-point stall (atilde too close to kappa^2?)")
    t_wall = out.t_events[0][0]
    v_wall = out.y_events[0][0][1]

    def back_at_start(t, y):
        return y[0] + 1.0
    back_at_start.terminal = True
    back_at_start.direction = -1

    back = solve_ivp(rhs, [t_wall, t_wall + t_budget], [0.0, -v_wall],
                     method="RK45", rtol=rtol, atol=atol,
                     events=back_at_start, dense_output=True)
    if not back.t_events[0].size:
        raise RuntimeError("trajectory never returned to the start line")
    return back.t_events[0][0]


def transit_times(kappa: float, potential: PiecewisePotential) -> ClassicalResult:
    """All three classical numbers for one (kappa, atilde) point."""
    t_ex = transit_exact(kappa, potential)
    t_pe = transit_perturbative(kappa, potential)
    return ClassicalResult(
        t_exact=t_ex, t_perturbative=t_pe, t_zero=2.0 / kappa,
        method_meta={"quad_rel_tol": 1e-12, "ivp_rtol": 1e-12})
