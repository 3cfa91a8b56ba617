"""First-order (Lippmann-Schwinger) engine and every closed form.

Conventions, all in scaled units unless a function says otherwise:

* Tidal phase, first order:  theta = -(4/kappa) Int V(x) sin^2(kappa x) dx
  over [-1, 0].  Splitting sin^2 = 1/2 - cos(2 kappa x)/2 decomposes it
  exactly into

      theta_highk       = -(2/kappa) Int V dx          (mean part)
      theta_cosine_term = +(2/kappa) Int V cos(2 kappa x) dx

* Quantum correction to the transit time: T' = d(theta_cosine_term)/dE.
  Evaluated in closed form this is

      T' = -(atilde/2)(3 + cos 2 kappa)/kappa^5 + atilde sin(2 kappa)/kappa^6.

  Note the overall sign: it is fixed here by the finite-difference oracle
  (``t_prime_fd``) and independently confirmed by the exact stationary
  engine, and is opposite to one published transcription of the formula.
* Directions: transit times depend on the speed (even in k) and are
  direction-independent; one-way phases carry the signed wavenumber and
  reverse for a downward launch.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from scipy.integrate import quad

from .classical import transit_perturbative
from .potential import PiecewisePotential
from .scenario import Direction, PhysicalScenario, nondimensionalize

_QUAD_OPTS = dict(epsabs=1e-15, epsrel=1e-13, limit=400)


# ---------------------------------------------------------------------------
# Green function and the Lippmann-Schwinger correction
# ---------------------------------------------------------------------------

def greens_function(x: float, x_prime: float, kappa: float) -> complex:
    """Half-line stationary Green function with a reflecting wall at x = 0.

    G(x, x') = -(i/kappa) [e^{i kappa |x - x'|} - e^{-i kappa (x + x')}]
    in scaled units; vanishes at the wall and is symmetric in x <-> x'.
    """
    if x > 0.0 or x_prime > 0.0:
        raise ValueError("Green function is defined on the half-line x <= 0")
    if not kappa > 0.0:
        raise ValueError(f"kappa must be > 0, got {kappa}")
    return (-1j / kappa) * (cmath.exp(1j * kappa * abs(x - x_prime))
                            - cmath.exp(-1j * kappa * (x + x_prime)))


def lippmann_schwinger_u(kappa: float, potential: PiecewisePotential,
                         x: float = -1.0) -> complex:
    """First-order u(x) = sin(kappa x) + Int G(x, x') V(x') sin(kappa x') dx'."""
    if x > 0.0:
        raise ValueError("x must be <= 0")

    def integrand(xp, part):
        g = greens_function(x, xp, kappa)
        val = g * potential.evaluate(xp) * math.sin(kappa * xp)
        return val.real if part == "re" else val.imag

    re, _ = quad(integrand, -1.0, 0.0, args=("re",), **_QUAD_OPTS)
    im, _ = quad(integrand, -1.0, 0.0, args=("im",), **_QUAD_OPTS)
    return complex(math.sin(kappa * x) + re, im)


def theta_from_lippmann_schwinger(kappa: float,
                                  potential: PiecewisePotential) -> float:
    """Extract theta from the u(-1) decomposition into unperturbed + outgoing.

    Writing u(-1) = -sin(kappa) + C, the scattered part is C = J e^{i kappa}
    with J real, and the outgoing component carries the extra phase
    theta = -2J at first order.
    """
    c = lippmann_schwinger_u(kappa, potential, x=-1.0) + math.sin(kappa)
    j = (c * cmath.exp(-1j * kappa)).real
    return -2.0 * j


# ---------------------------------------------------------------------------
# First-order phase: quadrature and exact split
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FirstOrderPhase:
    theta_quadrature: float
    theta_highk: float
    theta_cosine_term: float
    kappa: float
    atilde: float


def theta_first_order(kappa: float, potential: PiecewisePotential) -> FirstOrderPhase:
    """Full first-order phase and its exact mean/cosine split."""
    if not kappa > 0.0:
        raise ValueError(f"kappa must be > 0, got {kappa}")

    full, _ = quad(lambda x: potential.evaluate(x) * math.sin(kappa * x) ** 2,
                   -1.0, 0.0, **_QUAD_OPTS)
    cosine, _ = quad(lambda x: potential.evaluate(x) * math.cos(2.0 * kappa * x),
                     -1.0, 0.0, **_QUAD_OPTS)
    return FirstOrderPhase(
        theta_quadrature=-(4.0 / kappa) * full,
        theta_highk=-(2.0 / kappa) * potential.integral_V(),
        theta_cosine_term=(2.0 / kappa) * cosine,
        kappa=kappa, atilde=potential.atilde)


def theta_cosine_closed(kappa: float, atilde: float) -> float:
    """Closed form of the cosine part: atilde (2k - sin 2k) / (4 k^4)."""
    return atilde * (2.0 * kappa - math.sin(2.0 * kappa)) / (4.0 * kappa ** 4)


# ---------------------------------------------------------------------------
# Scaled closed forms
# ---------------------------------------------------------------------------

def theta_highk_scaled(kappa: float, atilde: float) -> float:
    """High-k tidal phase -atilde/(3 kappa) (positive for Earth-sign tides)."""
    return -atilde / (3.0 * kappa)


def t_prime_scaled(kappa: float, atilde: float) -> float:
    """Quantum transit-time correction T' = d(theta_cosine_term)/dE."""
    k = kappa
    return (-(atilde / 2.0) * (3.0 + math.cos(2.0 * k)) / k ** 5
            + atilde * math.sin(2.0 * k) / k ** 6)


def delta_theta_updown_scaled(kappa: float, atilde: float) -> float:
    """Up-minus-down phase split: k -> -k reverses theta, doubling it."""
    return -2.0 * atilde / (3.0 * kappa)


def chiao_phase_scaled(kappa: float, atilde: float,
                       area: float | None = None) -> float:
    """Orbit-interferometer phase (curvature/hbar) * area * T0, scaled.

    area defaults to 2/3 (the scaled 2 b^2 / 3 that maps it onto the
    up/down split of the radial geometry).
    """
    if area is None:
        area = 2.0 / 3.0
    if not area > 0.0:
        raise ValueError(f"area must be > 0, got {area}")
    t_zero = 2.0 / kappa
    return (-0.5 * atilde) * area * t_zero


def transit_highk(kappa: float, potential: PiecewisePotential) -> float:
    """High-k quantum transit time 2b/v + (1/Ev) Int V, in scaled units.

    Same formula as the first-order classical time: the coincidence that
    makes the clock read classically for fast particles.
    """
    if not kappa > 0.0:
        raise ValueError(f"kappa must be > 0, got {kappa}")
    energy = 0.5 * kappa * kappa
    v = kappa
    return 2.0 / kappa + potential.integral_V() / (energy * v)


# ---------------------------------------------------------------------------
# Dimensional closed forms (SI in, SI out unless noted)
# ---------------------------------------------------------------------------

def _signed_k(scenario: PhysicalScenario) -> float:
    k = scenario.wavenumber
    return -k if scenario.direction is Direction.DOWNWARD else k


def theta_highk_closed(scenario: PhysicalScenario) -> float:
    """High-k phase 2 G M m^2 b^3 / (3 R^3 hbar^2 k), signed wavenumber."""
    m = scenario.particle_mass
    b = scenario.baseline_b
    hbar = scenario.hbar
    k = _signed_k(scenario)
    gm_r3 = scenario.grav_const * scenario.central_mass / scenario.central_radius ** 3
    return 2.0 * gm_r3 * m * m * b ** 3 / (3.0 * hbar * hbar * k)


def theta_highk_closed_alt(scenario: PhysicalScenario) -> float:
    """Equivalent printed form (1/3)(G M m / R^3 hbar) b^2 T0."""
    gm_r3 = scenario.grav_const * scenario.central_mass / scenario.central_radius ** 3
    t_zero = scenario.t_zero
    sign = -1.0 if scenario.direction is Direction.DOWNWARD else 1.0
    return sign * (gm_r3 * scenario.particle_mass / scenario.hbar) \
        * scenario.baseline_b ** 2 * t_zero / 3.0


def transit_highk_dimensional(scenario: PhysicalScenario) -> float:
    """High-k transit time in seconds: 2b/v + (1/Ev) Int V dx."""
    b = scenario.baseline_b
    v = scenario.velocity
    energy = scenario.energy
    integral_v = scenario.alpha * b ** 3 / 3.0
    return 2.0 * b / v + integral_v / (energy * v)


def transit_highk_hbar_free(scenario: PhysicalScenario) -> float:
    """Equivalent printed form T0 - T0 b^2 G M / (3 R^3 v^2): no hbar, no m."""
    gm_r3 = scenario.grav_const * scenario.central_mass / scenario.central_radius ** 3
    t_zero = scenario.t_zero
    v = scenario.velocity
    return t_zero - t_zero * scenario.baseline_b ** 2 * gm_r3 / (3.0 * v * v)


def t_prime_dimensional(scenario: PhysicalScenario) -> float:
    """Quantum correction T' in seconds.

    T' = -(alpha b hbar^2 / m^3 v^5)(3 + cos 2kb) + (2 alpha hbar^3 / m^4 v^6) sin 2kb

    with alpha = -G M m / R^3 and v the particle speed.  The overall sign is
    the finite-difference-verified one (see module docstring); times are even
    in the launch direction.
    """
    m = scenario.particle_mass
    b = scenario.baseline_b
    hbar = scenario.hbar
    v = scenario.velocity
    kb = scenario.wavenumber * b
    alpha = scenario.alpha
    term1 = -(alpha * b * hbar ** 2 / (m ** 3 * v ** 5)) * (3.0 + math.cos(2.0 * kb))
    term2 = (2.0 * alpha * hbar ** 3 / (m ** 4 * v ** 6)) * math.sin(2.0 * kb)
    return term1 + term2


def t_prime(scenario: PhysicalScenario) -> float:
    """T' in scaled units, from the dimensional closed form."""
    return t_prime_dimensional(scenario) / scenario.time_unit


def delta_theta_updown(scenario: PhysicalScenario) -> float:
    """Phase difference between upward and downward launches (radians)."""
    gm_r3 = scenario.grav_const * scenario.central_mass / scenario.central_radius ** 3
    return (2.0 / 3.0) * (gm_r3 * scenario.particle_mass / scenario.hbar) \
        * scenario.baseline_b ** 2 * scenario.t_zero


def chiao_phase(scenario: PhysicalScenario, area: float | None = None) -> float:
    """Orbit-interferometer phase (G M m / hbar R^3) A T0 (radians).

    With the natural identification A = (2/3) b^2 this equals the up/down
    phase split of the radial bounce geometry.
    """
    if area is None:
        area = (2.0 / 3.0) * scenario.baseline_b ** 2
    if not area > 0.0:
        raise ValueError(f"area must be > 0, got {area}")
    gm_r3 = scenario.grav_const * scenario.central_mass / scenario.central_radius ** 3
    return (gm_r3 * scenario.particle_mass / scenario.hbar) * area * scenario.t_zero


# ---------------------------------------------------------------------------
# Finite-difference oracle for T'
# ---------------------------------------------------------------------------

def t_prime_fd(kappa: float, potential: PiecewisePotential,
               *, eta: float = 1e-5) -> float:
    """d(theta_cosine_term)/dE by central differences on the quadrature.

    Independent verification route for ``t_prime_scaled``: the quadrature is
    noise-free at the 1e-13 level, so the small spec step is fine here.
    """
    energy = 0.5 * kappa * kappa
    h = eta * energy

    def theta_cos(en):
        k = math.sqrt(2.0 * en)
        val, _ = quad(lambda x: potential.evaluate(x) * math.cos(2.0 * k * x),
                      -1.0, 0.0, **_QUAD_OPTS)
        return (2.0 / k) * val

    d_h = (theta_cos(energy + h) - theta_cos(energy - h)) / (2.0 * h)
    d_h2 = (theta_cos(energy + 0.5 * h) - theta_cos(energy - 0.5 * h)) / h
    return (4.0 * d_h2 - d_h) / 3.0


# ---------------------------------------------------------------------------
# Bundled report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CorrectionReport:
    t_highk: float
    t_prime: float
    t_total: float
    ratio: float
    delta_theta_updown: float
    chiao_phase: float


def correction_report(scenario: PhysicalScenario) -> CorrectionReport:
    """All first-order numbers for one scenario, in scaled units."""
    dimless = nondimensionalize(scenario)
    pot = PiecewisePotential(dimless.atilde)
    tp = t_prime(scenario)
    t_classical = transit_perturbative(dimless.kappa, pot)
    return CorrectionReport(
        t_highk=transit_highk(dimless.kappa, pot),
        t_prime=tp,
        t_total=t_classical + tp,
        ratio=tp / t_classical,
        delta_theta_updown=delta_theta_updown(scenario),
        chiao_phase=chiao_phase(scenario))
