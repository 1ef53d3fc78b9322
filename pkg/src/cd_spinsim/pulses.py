"""Tanh vector-potential pulses and their reduced electric fields.

Each dot sees a monotone ramp A0*(tanh[(t - a*t_f)/(w*t_f)] + 1) that starts
near zero, passes through A0 at t = a*t_f and saturates at 2*A0.  Time
derivatives are analytic; the reduced electric field is eps = -du/dt
(rad/ns**2), the factor 1/c being absorbed into the reduced units.

Reported potentials and fields in :class:`PulseTrace` carry the Rashba-channel
scaling ``A0_alpha``; the detuning channel uses the same dimensionless shapes
with ``A0_beta`` and is assembled in :mod:`cd_spinsim.hamiltonians`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import DotParams


class GridError(ValueError):
    """Raised for unusable time grids."""


@dataclass(frozen=True)
class PulseShape:
    """One dot's ramp: ``amplitude * (tanh[(t - center*t_f)/(width*t_f)] + 1)``.

    ``center`` and ``width`` are fractions of the operation time ``t_f`` (ns);
    ``amplitude`` is in rad/ns.  The value is monotone nondecreasing, stays in
    [0, 2*amplitude) for finite t and equals ``amplitude`` exactly at the
    centre.
    """

    amplitude: float
    center: float
    width: float
    t_f: float

    def _arg(self, t):
        return (np.asarray(t, dtype=float) - self.center * self.t_f) / (self.width * self.t_f)

    def value(self, t):
        """Reduced vector potential in rad/ns."""
        return self.amplitude * (np.tanh(self._arg(t)) + 1.0)

    def rate(self, t):
        """Analytic time derivative in rad/ns**2."""
        th = np.tanh(self._arg(t))
        return self.amplitude * (1.0 - th * th) / (self.width * self.t_f)

    def curvature(self, t):
        """Analytic second time derivative in rad/ns**3."""
        th = np.tanh(self._arg(t))
        sech2 = 1.0 - th * th
        return -2.0 * self.amplitude * sech2 * th / (self.width * self.t_f) ** 2


def potential(shape: PulseShape, t):
    """Evaluate a pulse's reduced vector potential at time ``t`` (ns)."""
    return shape.value(t)


def potential_rate(shape: PulseShape, t):
    """Evaluate a pulse's analytic rate dA/dt at time ``t``."""
    return shape.rate(t)


def shapes_for(params: DotParams, amplitude: float) -> tuple[PulseShape, PulseShape]:
    """Left and right pulse shapes sharing ``params``'s schedule, at the given amplitude."""
    left = PulseShape(amplitude, params.a_L, params.w_L, params.t_f)
    right = PulseShape(amplitude, params.a_R, params.w_R, params.t_f)
    return left, right


@dataclass(frozen=True)
class PulseTrace:
    """Sampled pulses on a uniform grid covering [0, t_f].

    ``uL``/``uR`` are the Rashba-scaled reduced potentials (rad/ns), ``duL``/
    ``duR`` their analytic rates, and ``epsL``/``epsR`` the reduced fields
    ``-du/dt`` (rad/ns**2).
    """

    grid: np.ndarray
    uL: np.ndarray
    uR: np.ndarray
    duL: np.ndarray
    duR: np.ndarray
    epsL: np.ndarray
    epsR: np.ndarray


# Default grid density for sampled traces; propagators pick their own step.
DEFAULT_TRACE_POINTS = 2000


def trace(params: DotParams, n_points: int = DEFAULT_TRACE_POINTS) -> PulseTrace:
    """Sample both pulses on a uniform grid over [0, t_f].

    Fields come from the analytic derivative, not from numerical differencing.
    """
    if n_points < 2:
        raise GridError(f"need at least 2 grid points, got {n_points}")
    grid = np.linspace(0.0, params.t_f, n_points)
    left, right = shapes_for(params, params.A0_alpha)
    uL, uR = left.value(grid), right.value(grid)
    duL, duR = left.rate(grid), right.rate(grid)
    return PulseTrace(grid=grid, uL=uL, uR=uR, duL=duL, duR=duR, epsL=-duL, epsR=-duR)
