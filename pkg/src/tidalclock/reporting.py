"""Cross-engine reports, consistency gates, and deterministic CSV sweeps."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, fields

import numpy as np

from . import __version__
from .classical import transit_exact, transit_perturbative
from .potential import PiecewisePotential
from .scenario import Direction
from . import perturbation as pt
from . import stationary as st
from . import wavepacket as wp

ALL_ENGINES = ("classical", "stationary", "perturbation", "wavepacket")

#: CSV columns, in order.  The trailing two extend the core table with the
#: optional time-dependent engine and a per-point error cell.
_COLUMNS = ("kappa", "atilde", "t_classical_exact", "t_classical_pert",
            "t_quantum_peres", "t_highk", "t_prime_closed", "t_prime_measured",
            "theta_exact", "theta_firstorder", "delta_theta_updown",
            "chiao_phase", "ratio_eq222", "t_wavepacket", "error")


@dataclass
class TransitReport:
    kappa: float
    atilde: float
    t_classical_exact: float | None = None
    t_classical_pert: float | None = None
    t_quantum_peres: float | None = None
    t_highk: float | None = None
    t_prime_closed: float | None = None
    t_prime_measured: float | None = None
    theta_exact: float | None = None
    theta_firstorder: float | None = None
    delta_theta_updown: float | None = None
    chiao_phase: float | None = None
    ratio_eq222: float | None = None
    t_wavepacket: float | None = None
    quantum_regime: bool = False
    reflection_unitarity: float | None = None
    errors: dict = field(default_factory=dict)


def build_report(kappa: float, atilde: float,
                 engines=ALL_ENGINES[:3],
                 direction: Direction = Direction.UPWARD) -> TransitReport:
    """Run the requested engines at one (kappa, atilde) point.

    Engine failures land in ``report.errors`` instead of aborting; affected
    columns stay unpopulated.  All engine columns are computed in the upward
    geometry (transit times are direction-even; see the perturbation module).
    """
    bad = set(engines) - set(ALL_ENGINES)
    if bad:
        raise ValueError(f"unknown engines: {sorted(bad)}")
    rep = TransitReport(kappa=kappa, atilde=atilde)
    pot = PiecewisePotential(atilde)

    if "classical" in engines:
        try:
            rep.t_classical_exact = transit_exact(kappa, pot)
            rep.t_classical_pert = transit_perturbative(kappa, pot)
        except Exception as exc:
            rep.errors["classical"] = str(exc)

    if "stationary" in engines:
        try:
            phase = st.phase_result(kappa, atilde)
            rep.theta_exact = phase.theta
            rep.reflection_unitarity = abs(abs(phase.reflection_r) - 1.0)
            rep.t_quantum_peres = st.peres_transit_time(kappa, atilde).t_quantum
        except Exception as exc:
            rep.errors["stationary"] = str(exc)

    if "perturbation" in engines:
        try:
            first = pt.theta_first_order(kappa, pot)
            rep.theta_firstorder = first.theta_quadrature
            rep.t_highk = pt.transit_highk(kappa, pot)
            rep.t_prime_closed = pt.t_prime_scaled(kappa, atilde)
            rep.delta_theta_updown = pt.delta_theta_updown_scaled(kappa, atilde)
            rep.chiao_phase = pt.chiao_phase_scaled(kappa, atilde)
        except Exception as exc:
            rep.errors["perturbation"] = str(exc)

    if "wavepacket" in engines:
        try:
            if kappa < 5.0:
                raise ValueError(
                    "packet runs need kappa >= 5: at long wavelengths the "
                    "packet width would exceed the flight distance (use the "
                    "stationary engine there)")
            sigma = 10.0 / kappa
            packet = wp.GaussianPacket(center_x0=-1.0 - 6.0 * sigma,
                                       width_sigma=sigma, central_kappa=kappa)
            run = wp.propagate(packet, pot)
            rep.t_wavepacket = wp.arrival_time(run)
        except Exception as exc:
            rep.errors["wavepacket"] = str(exc)

    if rep.t_quantum_peres is not None and rep.t_classical_exact is not None:
        rep.t_prime_measured = rep.t_quantum_peres - rep.t_classical_exact
    if rep.t_prime_closed is not None and rep.t_classical_exact is not None:
        rep.ratio_eq222 = rep.t_prime_closed / rep.t_classical_exact * kappa ** 2
    if rep.t_prime_closed is not None and atilde != 0.0:
        classical_correction = atilde / (3.0 * kappa ** 3)
        rep.quantum_regime = abs(rep.t_prime_closed) >= 0.5 * abs(classical_correction)
    return rep


def check_invariants(rep: TransitReport) -> list[str]:
    """Cross-column consistency gates; returns human-readable violations."""
    out = []

    def close(a, b, tol, label):
        if abs(a - b) > tol:
            out.append(f"{label}: |{a:.12g} - {b:.12g}| = {abs(a - b):.3g} "
                       f"> {tol:.3g}")

    if rep.t_classical_pert is not None and rep.t_highk is not None:
        # identical formulas through two code paths
        close(rep.t_classical_pert, rep.t_highk,
              1e-14 * abs(rep.t_highk), "high-k time vs classical first order")

    if rep.t_prime_measured is not None and rep.t_prime_closed is not None:
        # first-order identity: tolerance floors at the second-order scale
        # |atilde|*|T'| and at 1e-6 of the transit time (clock accuracy)
        tol = max(1e-6 * rep.t_classical_exact,
                  5.0 * abs(rep.atilde) * abs(rep.t_prime_closed))
        close(rep.t_prime_measured, rep.t_prime_closed, tol,
              "measured vs closed-form quantum correction")

    if rep.reflection_unitarity is not None and rep.reflection_unitarity > 1e-10:
        out.append(f"unitarity: ||r|-1| = {rep.reflection_unitarity:.3g} > 1e-10")

    if rep.delta_theta_updown is not None and rep.chiao_phase is not None:
        close(rep.delta_theta_updown, rep.chiao_phase,
              1e-14 * max(abs(rep.chiao_phase), 1e-300),
              "up/down split vs orbit-interferometer phase")

    if rep.atilde == 0.0:
        if rep.theta_exact is not None and abs(rep.theta_exact) > 1e-10:
            out.append(f"free case: theta = {rep.theta_exact:.3g} != 0")
        if rep.t_quantum_peres is not None:
            close(rep.t_quantum_peres, 2.0 / rep.kappa,
                  1e-8 * (2.0 / rep.kappa), "free case: clock time vs 2/kappa")

    if rep.theta_exact is not None and rep.theta_firstorder is not None:
        # agreement to second order in the tide
        tol = max(50.0 * rep.atilde ** 2 / max(rep.kappa, 1.0), 1e-10)
        close(rep.theta_exact, rep.theta_firstorder, tol,
              "exact vs first-order tidal phase")
    return out


def _fmt(v) -> str:
    if v is None:
        return "NA"
    return f"{v:.12g}"


def csv_header() -> str:
    return ",".join(_COLUMNS)


def csv_row(rep: TransitReport) -> str:
    vals = []
    for name in _COLUMNS:
        if name == "error":
            msg = "; ".join(f"{k}: {v}" for k, v in rep.errors.items())
            vals.append('"' + msg.replace('"', "'") + '"' if msg else "")
        else:
            vals.append(_fmt(getattr(rep, name)))
    return ",".join(vals)


def csv_footer(extra: dict | None = None) -> list[str]:
    meta = {
        "artifact_version": __version__,
        "quad_rel_tol": "1e-13",
        "classical_quad_rel_tol": "1e-12",
        "stationary_default_nodes": "max(2000, 64 per wavelength)",
        "clock_fd_relative_step": f"{st.DEFAULT_ETA:g}",
        "clock_richardson_levels": "1",
        "wavepacket_nodes_per_unit": "512",
    }
    if extra:
        meta.update(extra)
    return [f"# {k} = {v}" for k, v in meta.items()]


def render_table(rep: TransitReport) -> str:
    """Aligned human-readable block for one report (6 significant digits)."""
    rows = [("kappa", rep.kappa), ("atilde", rep.atilde)]
    rows += [(name, getattr(rep, name)) for name in _COLUMNS[2:-1]]
    width = max(len(n) for n, _ in rows)
    lines = []
    for name, val in rows:
        text = "NA" if val is None else f"{val:.6g}"
        lines.append(f"  {name:<{width}}  {text}")
    if rep.quantum_regime:
        lines.append("  [quantum regime: correction comparable to the "
                     "classical tidal correction]")
    for engine, msg in rep.errors.items():
        lines.append(f"  [{engine} error: {msg}]")
    return "\n".join(lines)


class SweepAxis(enum.Enum):
    KAPPA = "kappa"
    ATILDE = "atilde"


@dataclass(frozen=True)
class SweepSpec:
    axis: SweepAxis
    lo: float
    hi: float
    points: int
    scale: str = "linear"
    fixed: float = 0.0
    engines: tuple = ALL_ENGINES[:3]

    def __post_init__(self):
        if self.points < 2:
            raise ValueError(f"points must be >= 2, got {self.points}")
        if not self.lo < self.hi:
            raise ValueError(f"need lo < hi, got [{self.lo}, {self.hi}]")
        if self.scale not in ("linear", "log"):
            raise ValueError(f"scale must be linear or log, got {self.scale!r}")
        if self.scale == "log":
            if self.axis is SweepAxis.KAPPA and not self.lo > 0.0:
                raise ValueError("log kappa sweep requires lo > 0")
            if self.axis is SweepAxis.ATILDE and not (self.lo > 0.0
                                                      or self.hi < 0.0):
                raise ValueError("log atilde sweep requires lo > 0 or both "
                                 "endpoints negative (swept in |atilde|)")
        bad = set(self.engines) - set(ALL_ENGINES)
        if bad:
            raise ValueError(f"unknown engines: {sorted(bad)}")

    def values(self) -> np.ndarray:
        if self.scale == "linear":
            return np.linspace(self.lo, self.hi, self.points)
        if self.hi < 0.0:  # negative band, log in magnitude, ascending value
            return -np.geomspace(-self.lo, -self.hi, self.points)
        return np.geomspace(self.lo, self.hi, self.points)


def run_sweep(spec: SweepSpec, output_path=None) -> list[TransitReport]:
    """One report per axis point, in ascending axis order; optional CSV.

    Evaluation is sequential and the output carries no timestamps, so the
    bytes are identical across repeated runs.
    """
    reports = []
    for v in spec.values():
        if spec.axis is SweepAxis.KAPPA:
            kappa, atilde = float(v), spec.fixed
        else:
            kappa, atilde = spec.fixed, float(v)
        reports.append(build_report(kappa, atilde, engines=spec.engines))
    if output_path is not None:
        lines = [csv_header()]
        lines += [csv_row(r) for r in reports]
        lines += csv_footer({"sweep_axis": spec.axis.value,
                             "sweep_scale": spec.scale,
                             "sweep_points": str(spec.points)})
        with open(output_path, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    return reports
