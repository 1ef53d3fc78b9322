"""Propagation of the two-level state: unitary spinor and dissipative Bloch.

Both integrators are classical fixed-step RK4.  Coefficients are evaluated at
the RK4 substages exactly: every stage time lies on the half-step grid
t_k, t_k + h/2, t_k + h, so a source is asked once, vectorised, for the whole
half-grid.  Analytic sources evaluate closed forms there; the rotated-picture
source interpolates its grid trace with a cubic spline.

The dissipative equation is the Bloch form of
``drho/dt = -i/hbar [H, rho] - (gamma/2) sum_i [sigma_i, [sigma_i, rho]]``:
expanding the double commutators over all three Pauli channels gives an
isotropic contraction, ``dr/dt = h x r - 4*gamma*r`` with h = (X, -Y, Z).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.interpolate import CubicSpline

from .config import DotParams, reduce
from .hamiltonians import (
    REFERENCE,
    ROTATED,
    TOTAL,
    _coefficients_full,
    _gap_squared,
    coefficient_trace,
    rotated_picture,
)

DEFAULT_MIN_STEPS = 4000
# Cap on gap angle advanced per step, sqrt(X^2+Y^2+Z^2)*h; keeps unitary norm
# drift a couple of orders below the 1e-8 budget.
MAX_PHASE_PER_STEP = 0.05

NORM_DRIFT_LIMIT = 1e-6


class NormDriftError(RuntimeError):
    """Raised when unitary propagation loses more norm than the step allows."""


class NegativeRateError(ValueError):
    """Raised for a negative dephasing rate."""


class ConstantSource:
    """Time-independent coefficient triple; mostly a test harness."""

    def __init__(self, X: float = 0.0, Y: float = 0.0, Z: float = 0.0):
        self._xyz = (float(X), float(Y), float(Z))

    def coefficients(self, times):
        times = np.asarray(times, dtype=float)
        x, y, z = self._xyz
        return np.full_like(times, x), np.full_like(times, y), np.full_like(times, z)

    def omega_max(self) -> float:
        return math.sqrt(sum(c * c for c in self._xyz))


class AnalyticSource:
    """Closed-form coefficients of the reference or total picture."""

    def __init__(self, params: DotParams, picture: str = REFERENCE, probe_points: int = 2000):
        if picture not in (REFERENCE, TOTAL):
            raise ValueError(f"analytic source supports reference/total, not {picture!r}")
        self.params = params
        self.picture = picture
        self._trace = coefficient_trace(params, probe_points)

    def coefficients(self, times):
        y, dy, _, z, dz, _ = _coefficients_full(self.params, times)
        if self.picture == TOTAL:
            x = (z * dy - y * dz) / _gap_squared(y, z)
        else:
            x = np.zeros_like(y)
        return x, y, z

    def omega_max(self) -> float:
        tr = self._trace
        x = tr.X if self.picture == TOTAL else 0.0
        return float(np.sqrt(x**2 + tr.Y**2 + tr.Z**2).max())


class RotatedSource:
    """Spline interpolation of the rotated-picture trace (Q, Ztilde).

    ``drive_scale`` multiplies the time-dependent parts only (Q and
    Ztilde - Z0); the static detuning Z0 is not an electric field and is
    never scaled.  Picture label: rotated.
    """

    picture = ROTATED

    def __init__(
        self,
        params: DotParams,
        n_points: int = 2000,
        drive_scale: float = 1.0,
        eps_reg: float | None = None,
    ):
        self.params = params
        self.drive_scale = float(drive_scale)
        self._z0 = reduce(params).Z0
        kwargs = {} if eps_reg is None else {"eps_reg": eps_reg}
        rot = rotated_picture(coefficient_trace(params, n_points), **kwargs)
        self.trace = rot
        self._spline_q = CubicSpline(rot.grid, rot.Q)
        self._spline_dz = CubicSpline(rot.grid, rot.Ztilde - self._z0)

    def scaled(self, drive_scale: float) -> "RotatedSource":
        """Cheap view of the same trace with a different drive scale."""
        other = object.__new__(RotatedSource)
        other.params = self.params
        other.drive_scale = float(drive_scale)
        other._z0 = self._z0
        other.trace = self.trace
        other._spline_q = self._spline_q
        other._spline_dz = self._spline_dz
        return other

    def coefficients(self, times):
        times = np.asarray(times, dtype=float)
        s = self.drive_scale
        q = s * self._spline_q(times)
        z = self._z0 + s * self._spline_dz(times)
        return np.zeros_like(q), q, z

    def omega_max(self) -> float:
        s = self.drive_scale
        q = s * self.trace.Q
        z = self._z0 + s * (self.trace.Ztilde - self._z0)
        return float(np.sqrt(q**2 + z**2).max())


@dataclass
class StateTrajectory:
    """Time-resolved state with final fidelity and integration diagnostics.

    ``states`` is (n+1, 2) complex for spinors or (n+1, 3) float for Bloch
    vectors.  ``norm_drift`` tracks ||psi|| - 1 for unitary runs and
    |r| * exp(4*gamma*t) - |r0| for Bloch runs (both vanish for the exact
    solution).
    """

    times: np.ndarray
    states: np.ndarray
    kind: str  # "spinor" | "bloch"
    fidelity: float
    max_norm_drift: float
    min_purity: float
    gamma: float = 0.0
    norm_drift: np.ndarray = field(default=None, repr=False)

    def populations(self) -> np.ndarray:
        """Pointwise populations of |1> and |-1>, shape (n+1, 2)."""
        if self.kind == "spinor":
            return np.abs(self.states) ** 2
        pop1 = 0.5 * (1.0 + self.states[:, 2])
        return np.column_stack([pop1, 1.0 - pop1])


def resolve_steps(source, t_f: float, n_steps: int | None = None) -> int:
    """Fixed step count honouring h <= min(t_f/2000, 0.1/Omega_max) with margin."""
    if n_steps is not None:
        return int(n_steps)
    return max(DEFAULT_MIN_STEPS, math.ceil(t_f * source.omega_max() / MAX_PHASE_PER_STEP))


def propagate_schrodinger(
    source,
    psi0,
    t_f: float,
    n_steps: int | None = None,
    drift_tol: float = NORM_DRIFT_LIMIT,
) -> StateTrajectory:
    """Unitary RK4 propagation of a spinor under the source's Hamiltonian.

    The norm is monitored, never renormalised; a drift beyond ``drift_tol``
    raises :class:`NormDriftError` (the step was too large).
    """
    psi0 = np.asarray(psi0, dtype=complex)
    norm0 = abs(np.vdot(psi0, psi0).real - 1.0)
    if norm0 > 1e-8:
        raise ValueError("initial spinor must be normalised")
    n = resolve_steps(source, t_f, n_steps)
    h = t_f / n
    half_grid = np.linspace(0.0, t_f, 2 * n + 1)
    xs, ys, zs = (arr.tolist() for arr in source.coefficients(half_grid))

    states = np.empty((n + 1, 2), dtype=complex)
    drift = np.empty(n + 1)
    c1, c2 = complex(psi0[0]), complex(psi0[1])
    states[0] = (c1, c2)
    drift[0] = math.sqrt(abs(c1) ** 2 + abs(c2) ** 2) - 1.0
    sixth = h / 6.0
    for i in range(n):
        k = 2 * i
        x0, y0, z0 = xs[k], ys[k], zs[k]
        x1, y1, z1 = xs[k + 1], ys[k + 1], zs[k + 1]
        x2, y2, z2 = xs[k + 2], ys[k + 2], zs[k + 2]

        a1 = -0.5j * (z0 * c1 + (x0 + 1j * y0) * c2)
        b1 = -0.5j * ((x0 - 1j * y0) * c1 - z0 * c2)
        u1, v1 = c1 + 0.5 * h * a1, c2 + 0.5 * h * b1
        a2 = -0.5j * (z1 * u1 + (x1 + 1j * y1) * v1)
        b2 = -0.5j * ((x1 - 1j * y1) * u1 - z1 * v1)
        u2, v2 = c1 + 0.5 * h * a2, c2 + 0.5 * h * b2
        a3 = -0.5j * (z1 * u2 + (x1 + 1j * y1) * v2)
        b3 = -0.5j * ((x1 - 1j * y1) * u2 - z1 * v2)
        u3, v3 = c1 + h * a3, c2 + h * b3
        a4 = -0.5j * (z2 * u3 + (x2 + 1j * y2) * v3)
        b4 = -0.5j * ((x2 - 1j * y2) * u3 - z2 * v3)

        c1 = c1 + sixth * (a1 + 2.0 * (a2 + a3) + a4)
        c2 = c2 + sixth * (b1 + 2.0 * (b2 + b3) + b4)
        states[i + 1] = (c1, c2)
        drift[i + 1] = math.sqrt(abs(c1) ** 2 + abs(c2) ** 2) - 1.0

    max_drift = float(np.abs(drift).max())
    if max_drift > drift_tol:
        raise NormDriftError(
            f"norm drift {max_drift:.3e} exceeds {drift_tol:.1e}; decrease the step"
        )
    return StateTrajectory(
        times=np.linspace(0.0, t_f, n + 1),
        states=states,
        kind="spinor",
        fidelity=abs(c1) ** 2,
        max_norm_drift=max_drift,
        min_purity=1.0,
        norm_drift=drift,
    )


def propagate_bloch(
    source,
    r0,
    gamma: float,
    t_f: float,
    n_steps: int | None = None,
) -> StateTrajectory:
    """RK4 integration of dr/dt = h(t) x r - 4*gamma*r with h = (X, -Y, Z)."""
    if gamma < 0:
        raise NegativeRateError(f"dephasing rate must be nonnegative, got {gamma}")
    r0 = np.asarray(r0, dtype=float)
    if np.linalg.norm(r0) > 1.0 + 1e-8:
        raise ValueError("initial Bloch vector must satisfy |r| <= 1")
    n = resolve_steps(source, t_f, n_steps)
    h = t_f / n
    half_grid = np.linspace(0.0, t_f, 2 * n + 1)
    cx, cy, cz = source.coefficients(half_grid)
    # Bloch field components h = (X, -Y, Z)
    hx, hy, hz = cx.tolist(), (-cy).tolist(), cz.tolist()

    states = np.empty((n + 1, 3))
    drift = np.empty(n + 1)
    rx, ry, rz = (float(v) for v in r0)
    rnorm0 = math.sqrt(rx * rx + ry * ry + rz * rz)
    states[0] = (rx, ry, rz)
    drift[0] = 0.0
    g4 = 4.0 * gamma
    sixth = h / 6.0
    for i in range(n):
        k = 2 * i
        # stage 1
        ax = hy[k] * rz - hz[k] * ry - g4 * rx
        ay = hz[k] * rx - hx[k] * rz - g4 * ry
        az = hx[k] * ry - hy[k] * rx - g4 * rz
        # stage 2
        px, py, pz = rx + 0.5 * h * ax, ry + 0.5 * h * ay, rz + 0.5 * h * az
        bx = hy[k + 1] * pz - hz[k + 1] * py - g4 * px
        by = hz[k + 1] * px - hx[k + 1] * pz - g4 * py
        bz = hx[k + 1] * py - hy[k + 1] * px - g4 * pz
        # stage 3
        px, py, pz = rx + 0.5 * h * bx, ry + 0.5 * h * by, rz + 0.5 * h * bz
        cx3 = hy[k + 1] * pz - hz[k + 1] * py - g4 * px
        cy3 = hz[k + 1] * px - hx[k + 1] * pz - g4 * py
        cz3 = hx[k + 1] * py - hy[k + 1] * px - g4 * pz
        # stage 4
        px, py, pz = rx + h * cx3, ry + h * cy3, rz + h * cz3
        dx = hy[k + 2] * pz - hz[k + 2] * py - g4 * px
        dy = hz[k + 2] * px - hx[k + 2] * pz - g4 * py
        dz = hx[k + 2] * py - hy[k + 2] * px - g4 * pz

        rx += sixth * (ax + 2.0 * (bx + cx3) + dx)
        ry += sixth * (ay + 2.0 * (by + cy3) + dy)
        rz += sixth * (az + 2.0 * (bz + cz3) + dz)
        states[i + 1] = (rx, ry, rz)
        rnorm = math.sqrt(rx * rx + ry * ry + rz * rz)
        drift[i + 1] = rnorm * math.exp(g4 * (i + 1) * h) - rnorm0

    norms = np.linalg.norm(states, axis=1)
    return StateTrajectory(
        times=np.linspace(0.0, t_f, n + 1),
        states=states,
        kind="bloch",
        fidelity=0.5 * (1.0 + rz),
        max_norm_drift=float(np.abs(drift).max()),
        min_purity=float((0.5 * (1.0 + norms**2)).min()),
        gamma=gamma,
        norm_drift=drift,
    )


def fidelity(trajectory: StateTrajectory) -> float:
    """Final population of |1>: |c1(t_f)|**2 or (1 + rz(t_f))/2."""
    return trajectory.fidelity
