"""Unit conventions and the dimensional <-> dimensionless bridge.

Every engine in this package works in the internal unit system
hbar = m = b = 1 (b is the start-line-to-wall distance).  In those units
a run is fully determined by two numbers:

    kappa  = k * b                  (dimensionless wavenumber)
    atilde = 2 m alpha b^4 / hbar^2 (dimensionless tidal curvature)

where alpha = -G M m / R^3 is the quadratic coefficient of the tidal
potential in the freely-falling frame.  Earth-like inputs give atilde < 0.

Times convert back to seconds through the internal time unit m b^2 / hbar.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping


class Direction(enum.Enum):
    UPWARD = "Upward"
    DOWNWARD = "Downward"


#: CODATA-ish constants handy for Earth scenarios (SI units).
EARTH_GRAV_CONST = 6.674e-11       # m^3 kg^-1 s^-2
EARTH_MASS = 5.972e24              # kg
EARTH_RADIUS = 6.371e6             # m
RB87_MASS = 1.443e-25              # kg
HBAR = 1.054571817e-34             # J s


def alpha_from_earth(grav_const: float, central_mass: float,
                     particle_mass: float, central_radius: float) -> float:
    """Tidal curvature coefficient alpha = -G M m / R^3 (J m^-2, always < 0)."""
    for name, v in (("grav_const", grav_const), ("central_mass", central_mass),
                    ("particle_mass", particle_mass), ("central_radius", central_radius)):
        if not (v > 0.0) or not math.isfinite(v):
            raise ValueError(f"{name} must be positive and finite, got {v}")
    return -grav_const * central_mass * particle_mass / central_radius ** 3


@dataclass(frozen=True)
class PhysicalScenario:
    """Dimensional description of one out-and-back run.

    Exactly one of ``wavenumber_k`` (m^-1) or ``energy_E`` (J) must be given.
    """

    grav_const: float
    central_mass: float
    central_radius: float
    particle_mass: float
    baseline_b: float
    hbar: float
    wavenumber_k: float | None = None
    energy_E: float | None = None
    direction: Direction = Direction.UPWARD

    def __post_init__(self):
        for name in ("grav_const", "central_mass", "central_radius",
                     "particle_mass", "baseline_b", "hbar"):
            v = getattr(self, name)
            if not (v > 0.0) or not math.isfinite(v):
                raise ValueError(f"{name} must be positive and finite, got {v}")
        if (self.wavenumber_k is None) == (self.energy_E is None):
            raise ValueError("exactly one of wavenumber_k or energy_E must be given")
        if self.wavenumber_k is not None and not self.wavenumber_k > 0.0:
            raise ValueError(f"wavenumber_k must be > 0, got {self.wavenumber_k}")
        if self.energy_E is not None and not self.energy_E > 0.0:
            raise ValueError(f"energy_E must be > 0, got {self.energy_E}")
        if not isinstance(self.direction, Direction):
            raise ValueError(f"direction must be a Direction, got {self.direction!r}")

    @property
    def alpha(self) -> float:
        return alpha_from_earth(self.grav_const, self.central_mass,
                                self.particle_mass, self.central_radius)

    @property
    def wavenumber(self) -> float:
        """k in m^-1 (from E if energy was supplied)."""
        if self.wavenumber_k is not None:
            return self.wavenumber_k
        return math.sqrt(2.0 * self.particle_mass * self.energy_E) / self.hbar

    @property
    def energy(self) -> float:
        if self.energy_E is not None:
            return self.energy_E
        return (self.hbar * self.wavenumber_k) ** 2 / (2.0 * self.particle_mass)

    @property
    def velocity(self) -> float:
        """v = hbar k / m in m/s."""
        return self.hbar * self.wavenumber / self.particle_mass

    @property
    def time_unit(self) -> float:
        """Internal time unit m b^2 / hbar, in seconds."""
        return self.particle_mass * self.baseline_b ** 2 / self.hbar

    @property
    def t_zero(self) -> float:
        """Unperturbed out-and-back time 2b/v in seconds."""
        return 2.0 * self.baseline_b / self.velocity


@dataclass(frozen=True)
class DimensionlessScenario:
    """The two numbers that determine the quantum problem, plus direction."""

    kappa: float
    atilde: float
    direction: Direction = Direction.UPWARD

    def __post_init__(self):
        if not (self.kappa > 0.0) or not math.isfinite(self.kappa):
            raise ValueError(f"kappa must be positive and finite, got {self.kappa}")
        if not math.isfinite(self.atilde):
            raise ValueError(f"atilde must be finite, got {self.atilde}")


def nondimensionalize(scenario: PhysicalScenario) -> DimensionlessScenario:
    """Map a dimensional scenario onto (kappa, atilde)."""
    b = scenario.baseline_b
    kappa = scenario.wavenumber * b
    atilde = 2.0 * scenario.particle_mass * scenario.alpha * b ** 4 / scenario.hbar ** 2
    return DimensionlessScenario(kappa=kappa, atilde=atilde,
                                 direction=scenario.direction)


def redimensionalize(dimless: DimensionlessScenario,
                     base: PhysicalScenario) -> PhysicalScenario:
    """Rebuild a dimensional scenario from (kappa, atilde) using base's units.

    Only the wavenumber is taken from ``dimless``; the unit system
    (G, M, R, m, b, hbar) comes from ``base``.  Round-trips with
    nondimensionalize are exact up to floating point.
    """
    k = dimless.kappa / base.baseline_b
    return PhysicalScenario(
        grav_const=base.grav_const, central_mass=base.central_mass,
        central_radius=base.central_radius, particle_mass=base.particle_mass,
        baseline_b=base.baseline_b, hbar=base.hbar,
        wavenumber_k=k, direction=dimless.direction)


def redimensionalize_time(t_scaled: float, scenario: PhysicalScenario) -> float:
    """Scaled time -> seconds (multiply by m b^2 / hbar)."""
    return t_scaled * scenario.time_unit


def dimensionless_time(t_seconds: float, scenario: PhysicalScenario) -> float:
    """Seconds -> scaled time (inverse of redimensionalize_time)."""
    return t_seconds / scenario.time_unit


_CONFIG_KEYS = ("grav_const", "central_mass", "central_radius", "particle_mass",
                "baseline_b", "wavenumber_k", "energy_E", "hbar", "direction")


def from_mapping(values: Mapping[str, object]) -> PhysicalScenario:
    """Build a PhysicalScenario from a flat key/value mapping."""
    unknown = set(values) - set(_CONFIG_KEYS)
    if unknown:
        raise ValueError(f"unknown scenario keys: {sorted(unknown)}")
    kwargs = {}
    for key in _CONFIG_KEYS:
        if key not in values or values[key] is None:
            continue
        raw = values[key]
        if key == "direction":
            if isinstance(raw, Direction):
                kwargs[key] = raw
            else:
                name = str(raw).strip().lower()
                try:
                    kwargs[key] = {"upward": Direction.UPWARD,
                                   "downward": Direction.DOWNWARD}[name]
                except KeyError:
                    raise ValueError(f"direction must be Upward or Downward, got {raw!r}")
        else:
            kwargs[key] = float(raw)  # type: ignore[arg-type]
    return PhysicalScenario(**kwargs)


def from_config(path: str | Path) -> PhysicalScenario:
    """Read a flat ``key = value`` config file (# comments, blank lines ok)."""
    values: dict[str, str] = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        sep = "=" if "=" in stripped else (":" if ":" in stripped else None)
        if sep is None:
            raise ValueError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
        key, _, val = stripped.partition(sep)
        values[key.strip()] = val.strip()
    return from_mapping(values)


def earth_scenario(baseline_b: float = 1.0, *,
                   velocity: float | None = None,
                   wavenumber_k: float | None = None,
                   particle_mass: float = RB87_MASS,
                   direction: Direction = Direction.UPWARD) -> PhysicalScenario:
    """Convenience Earth/Rb-87 scenario; give either velocity (m/s) or k (1/m)."""
    if (velocity is None) == (wavenumber_k is None):
        raise ValueError("give exactly one of velocity or wavenumber_k")
    if wavenumber_k is None:
        wavenumber_k = particle_mass * velocity / HBAR
    return PhysicalScenario(
        grav_const=EARTH_GRAV_CONST, central_mass=EARTH_MASS,
        central_radius=EARTH_RADIUS, particle_mass=particle_mass,
        baseline_b=baseline_b, hbar=HBAR, wavenumber_k=wavenumber_k,
        direction=direction)
