"""Coefficient frames for the two-level Hamiltonians in all three pictures.

The drive enters through the angular-frequency triple (X, Y, Z):

* reference picture: ``H0/hbar = (1/2) [[Z, iY], [-iY, -Z]]`` with
  Y = -(uL - uR) from the Rashba-scaled potentials and
  Z = Z0 + (uL + uR) from the Dresselhaus-scaled potentials;
* total picture: adds the counter-diabatic term ``(1/2) [[0, X], [X, 0]]``
  with X = (Z*dY - Y*dZ)/(Y**2 + Z**2), the unique traceless sigma_x
  correction that makes the exact dynamics follow the instantaneous
  eigenstates of H0;
* rotated picture: a z-axis frame rotation through pi/2 - phi with
  tan(phi) = Y/X removes the sigma_x component, leaving
  ``(1/2) [[Z + dphi, iQ], [-iQ, -(Z + dphi)]]`` with Q = sqrt(X**2 + Y**2).

All matrix entries are H/hbar in rad/ns.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import DotParams, reduce
from .numerics import derivative
from .pulses import shapes_for

REFERENCE = "reference"
TOTAL = "total"
ROTATED = "rotated"
PICTURES = (REFERENCE, TOTAL, ROTATED)

# Fraction of max(X**2 + Y**2) below which dphi is held rather than evaluated;
# there phi is numerically indeterminate because X and Y both vanish.
PHI_REGULARISATION = 1e-8


class DegenerateGapError(ZeroDivisionError):
    """Raised when Y**2 + Z**2 vanishes and the gap direction is undefined."""


class PictureMismatchError(ValueError):
    """Raised when a coefficient frame is used in the wrong picture."""


@dataclass(frozen=True)
class CoefficientFrame:
    """Coefficient triple and rates at one instant, tagged with its picture."""

    picture: str
    t: float
    X: float
    Y: float
    Z: float
    dX: float = 0.0
    dY: float = 0.0
    dZ: float = 0.0


@dataclass(frozen=True)
class CoefficientTrace:
    """Analytic coefficients and rates sampled on a uniform grid."""

    grid: np.ndarray
    Y: np.ndarray
    dY: np.ndarray
    Z: np.ndarray
    dZ: np.ndarray
    X: np.ndarray
    dX: np.ndarray


@dataclass(frozen=True)
class RotatedTrace:
    """Rotated-picture quantities on a grid: unwrapped phi, its rate, Q and Ztilde."""

    grid: np.ndarray
    phi: np.ndarray
    dphi: np.ndarray
    Q: np.ndarray
    Ztilde: np.ndarray


@dataclass(frozen=True)
class SynthesizedFields:
    """Single-component drive reconstructed from the rotated picture.

    ``u_nL``/``u_nR`` are the new Rashba-scaled potentials whose coefficient
    images are (Q, Ztilde); ``eps_xnL``/``eps_xnR`` are the corresponding
    reduced fields from 4th-order grid differentiation.
    """

    grid: np.ndarray
    u_nL: np.ndarray
    u_nR: np.ndarray
    eps_xnL: np.ndarray
    eps_xnR: np.ndarray


def coefficients_of_drive(params: DotParams, uL, uR):
    """Map Rashba-scaled potentials (uL, uR) to the coefficient pair (Y, Z).

    The two channels share the same dimensionless shapes, so the detuning
    contribution carries the amplitude ratio A0_beta/A0_alpha.
    """
    z0 = reduce(params).Z0
    ratio = params.A0_beta / params.A0_alpha
    uL = np.asarray(uL, dtype=float)
    uR = np.asarray(uR, dtype=float)
    return -(uL - uR), z0 + ratio * (uL + uR)


def reference_coefficients(params: DotParams, t):
    """(Y, Z, dY, dZ) of the reference Hamiltonian at time ``t`` (scalar or array)."""
    z0 = reduce(params).Z0
    aL, aR = shapes_for(params, params.A0_alpha)
    bL, bR = shapes_for(params, params.A0_beta)
    y = -(aL.value(t) - aR.value(t))
    dy = -(aL.rate(t) - aR.rate(t))
    z = z0 + bL.value(t) + bR.value(t)
    dz = bL.rate(t) + bR.rate(t)
    return y, z, dy, dz


def _coefficients_full(params: DotParams, t):
    """Y, Z and their first two rates at ``t``; shared by X and dX."""
    z0 = reduce(params).Z0
    aL, aR = shapes_for(params, params.A0_alpha)
    bL, bR = shapes_for(params, params.A0_beta)
    y = -(aL.value(t) - aR.value(t))
    dy = -(aL.rate(t) - aR.rate(t))
    ddy = -(aL.curvature(t) - aR.curvature(t))
    z = z0 + bL.value(t) + bR.value(t)
    dz = bL.rate(t) + bR.rate(t)
    ddz = bL.curvature(t) + bR.curvature(t)
    return y, dy, ddy, z, dz, ddz


def _gap_squared(Y, Z):
    den = np.asarray(Y, dtype=float) ** 2 + np.asarray(Z, dtype=float) ** 2
    if np.any(den == 0.0):
        raise DegenerateGapError("Y**2 + Z**2 vanishes; gap direction undefined")
    return den


def adiabaticity_metric(Y, Z, dY, dZ):
    """Dimensionless diabatic-coupling measure |Z*dY - Y*dZ| / (Y**2 + Z**2)**1.5."""
    den = _gap_squared(Y, Z)
    return np.abs(Z * dY - Y * dZ) / den**1.5


def counterdiabatic_coefficient(Y, Z, dY, dZ):
    """Counter-diabatic coupling X = (Z*dY - Y*dZ) / (Y**2 + Z**2)."""
    den = _gap_squared(Y, Z)
    return (Z * dY - Y * dZ) / den


def counterdiabatic_with_rate(params: DotParams, t):
    """X and its analytic time derivative at ``t``.

    dX uses the exact second derivatives of the pulses, so the rotated-frame
    rate dphi below needs no numerical differencing.
    """
    y, dy, ddy, z, dz, ddz = _coefficients_full(params, t)
    den = _gap_squared(y, z)
    num = z * dy - y * dz
    x = num / den
    dnum = z * ddy - y * ddz
    dden = 2.0 * (y * dy + z * dz)
    dx = dnum / den - num * dden / den**2
    return x, dx


def coefficient_trace(params: DotParams, n_points: int = 2000) -> CoefficientTrace:
    """Sample the full coefficient set on a uniform grid over [0, t_f]."""
    grid = np.linspace(0.0, params.t_f, n_points)
    y, dy, ddy, z, dz, ddz = _coefficients_full(params, grid)
    den = _gap_squared(y, z)
    num = z * dy - y * dz
    x = num / den
    dx = (z * ddy - y * ddz) / den - num * 2.0 * (y * dy + z * dz) / den**2
    return CoefficientTrace(grid=grid, Y=y, dY=dy, Z=z, dZ=dz, X=x, dX=dx)


def cd_field_synthesis(params: DotParams, grid) -> tuple[np.ndarray, np.ndarray]:
    """Counter-diabatic y-potential difference v_D and its reduced field.

    In reduced units v_D(t) = X(t); the field eps_yD = -dv_D/dt comes from
    4th-order stencils on the grid (one-sided at the endpoints).
    """
    grid = np.asarray(grid, dtype=float)
    v_d, _ = counterdiabatic_with_rate(params, grid)
    eps_yd = -derivative(v_d, grid[1] - grid[0])
    return v_d, eps_yd


def rotated_picture(trace: CoefficientTrace, eps_reg: float = PHI_REGULARISATION) -> RotatedTrace:
    """Rotate the sigma_x component away: phi, dphi, Q and Ztilde on the grid.

    ``phi = atan2(Y, X)`` is unwrapped to be continuous.  Where
    X**2 + Y**2 < eps_reg * max(X**2 + Y**2) the rate dphi is held at its
    nearest non-degenerate neighbour instead of evaluated.
    """
    p2 = trace.X**2 + trace.Y**2
    phi = np.unwrap(np.arctan2(trace.Y, trace.X))
    with np.errstate(divide="ignore", invalid="ignore"):
        dphi = (trace.dY * trace.X - trace.Y * trace.dX) / p2
    degenerate = (p2 < eps_reg * p2.max()) | (p2 == 0.0)
    if degenerate.all():
        dphi = np.zeros_like(dphi)
    elif degenerate.any():
        valid = np.flatnonzero(~degenerate)
        for k in np.flatnonzero(degenerate):
            dphi[k] = dphi[valid[np.argmin(np.abs(valid - k))]]
    q = np.hypot(trace.X, trace.Y)
    return RotatedTrace(grid=trace.grid, phi=phi, dphi=dphi, Q=q, Ztilde=trace.Z + dphi)


def _invert_channel(target: np.ndarray, amplitude: float, name: str) -> np.ndarray:
    """Shape samples realising ``target`` at the given channel amplitude.

    A zero-amplitude channel can only realise an identically-zero target.
    """
    if amplitude != 0.0:
        return target / amplitude
    if np.max(np.abs(target)) > 0.0:
        raise DegenerateGapError(f"cannot synthesize a {name} drive with zero amplitude")
    return np.zeros_like(target)


def synthesize_x_only_fields(rotated: RotatedTrace, params: DotParams) -> SynthesizedFields:
    """Invert the coefficient maps with Q in the Y role and Ztilde in the Z role.

    Solves, per grid point, u_nL - u_nR = -Q (Rashba-scaled) and
    u_nL + u_nR = Ztilde - Z0 (Dresselhaus-scaled) for the shared
    dimensionless shapes, then reports Rashba-scaled potentials and their
    fields by grid differentiation.
    """
    z0 = reduce(params).Z0
    shape_sum = _invert_channel(rotated.Ztilde - z0, params.A0_beta, "detuning")
    shape_diff = _invert_channel(-rotated.Q, params.A0_alpha, "transverse")
    g_l = 0.5 * (shape_sum + shape_diff)
    g_r = 0.5 * (shape_sum - shape_diff)
    u_nl = params.A0_alpha * g_l
    u_nr = params.A0_alpha * g_r
    dt = rotated.grid[1] - rotated.grid[0]
    return SynthesizedFields(
        grid=rotated.grid,
        u_nL=u_nl,
        u_nR=u_nr,
        eps_xnL=-derivative(u_nl, dt),
        eps_xnR=-derivative(u_nr, dt),
    )


def matrix(picture: str, frame: CoefficientFrame) -> np.ndarray:
    """Hermitian traceless 2x2 matrix H/hbar (rad/ns) for the given picture.

    The frame must be tagged with the same picture, and pictures without a
    sigma_x component (reference, rotated) require frame.X == 0.
    """
    if picture not in PICTURES:
        raise PictureMismatchError(f"unknown picture {picture!r}")
    if frame.picture != picture:
        raise PictureMismatchError(f"frame is tagged {frame.picture!r}, not {picture!r}")
    if picture in (REFERENCE, ROTATED) and frame.X != 0.0:
        raise PictureMismatchError(f"{picture} picture has no sigma_x component")
    x = frame.X if picture == TOTAL else 0.0
    off = x + 1j * frame.Y
    return 0.5 * np.array([[frame.Z, off], [np.conj(off), -frame.Z]], dtype=complex)
