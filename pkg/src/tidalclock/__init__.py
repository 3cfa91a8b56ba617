"""Transit time of a quantum particle bouncing in a tidal potential.

A numerical laboratory with four mutually checking engines for the
out-and-back time of a non-relativistic particle reflecting off a hard wall
inside a gravity-gradient potential, measured by a model quantum clock:

* classical: exact quadrature, first-order formula, trajectory integration
* stationary: Numerov solve, reflection phase, clock time from dphi/dE
* perturbation: first-order quadrature and every closed form
* wavepacket: Crank-Nicolson bounce with flux-weighted arrival

Internal units: hbar = m = b = 1; every engine consumes (kappa, atilde).
"""

__version__ = "0.1.0"

from .scenario import (Direction, PhysicalScenario, DimensionlessScenario,
                       alpha_from_earth, nondimensionalize, redimensionalize,
                       redimensionalize_time, dimensionless_time,
                       from_config, from_mapping, earth_scenario)
from .potential import PiecewisePotential
from .classical import (ClassicalResult, TurningPointError, transit_exact,
                        transit_perturbative, trajectory_oracle, transit_times)
from .stationary import (GridSpec, PhaseResult, ClockResult,
                         GridTooCoarseError, PhaseBranchError,
                         solve_interior, solve_interior_ivp,
                         reflection_coefficient, phase_result, theta_exact,
                         peres_transit_time)
from .perturbation import (FirstOrderPhase, CorrectionReport, greens_function,
                           lippmann_schwinger_u, theta_from_lippmann_schwinger,
                           theta_first_order, theta_highk_scaled,
                           t_prime_scaled, t_prime_fd, t_prime,
                           delta_theta_updown_scaled, chiao_phase_scaled,
                           transit_highk, theta_highk_closed,
                           theta_highk_closed_alt, transit_highk_dimensional,
                           transit_highk_hbar_free, t_prime_dimensional,
                           delta_theta_updown, chiao_phase, correction_report)
from .wavepacket import (GaussianPacket, PropagationRun, NormDriftError,
                         BoundaryContaminationError, FluxWindowError,
                         propagate, arrival_time, dump_flux_csv)
from .reporting import (TransitReport, SweepSpec, SweepAxis, build_report,
                        check_invariants, run_sweep, csv_header, csv_row,
                        csv_footer, render_table)
from .validate import CriterionResult, run_acceptance
