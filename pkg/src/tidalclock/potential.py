"""The three-region tidal potential in scaled units.

Scaled geometry: start line at x = -1, hard wall at x = 0.  The potential is

    V(x) = 0                      x < -1
    V(x) = atilde (x+1)^2 / 2     -1 <= x < 0
    V(x) = infinity               x = 0   (Dirichlet condition, not a value)

with this normalization the stationary equation reads

    u'' = (atilde (x+1)^2 - kappa^2) u,

i.e. ``schrodinger_form`` (= 2 V) is the coefficient that enters u''.
Earth-like runs have atilde < 0; positive atilde is accepted for
sign-flipped synthetic tests (the classical engine then guards turning
points).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

WALL_X = 0.0
START_X = -1.0


@dataclass(frozen=True)
class PiecewisePotential:
    atilde: float

    def __post_init__(self):
        if not math.isfinite(self.atilde):
            raise ValueError(f"atilde must be finite, got {self.atilde}")

    def evaluate(self, x):
        """Potential in scaled energy form; scalar or ndarray, all x < 0."""
        arr = np.asarray(x, dtype=float)
        if np.any(arr >= WALL_X):
            raise ValueError("x >= 0 is the hard wall; the potential is not "
                             "defined there (Dirichlet boundary)")
        s = np.where(arr >= START_X, arr + 1.0, 0.0)
        v = 0.5 * self.atilde * s * s
        return float(v) if np.isscalar(x) or arr.ndim == 0 else v

    def schrodinger_form(self, x):
        """2 V(x): the potential term of u'' = (2V - kappa^2) u."""
        v = self.evaluate(x)
        return 2.0 * v

    def derivative(self, x):
        """dV/dx in energy form (force is its negative)."""
        arr = np.asarray(x, dtype=float)
        if np.any(arr >= WALL_X):
            raise ValueError("x >= 0 is the hard wall")
        d = np.where(arr >= START_X, self.atilde * (arr + 1.0), 0.0)
        return float(d) if np.isscalar(x) or arr.ndim == 0 else d

    def integral_V(self) -> float:
        """Closed form of the potential integral over [-1, 0]: atilde/6."""
        return self.atilde / 6.0
