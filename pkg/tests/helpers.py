"""Oracles shared between test modules.

These deliberately avoid the production code paths they check: the density
matrix integrator works on raw 2x2 matrices and the tracked eigenstate comes
from the closed-form two-level spectrum.
"""

import math

import numpy as np

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)


def propagate_density_matrix(source, rho0, gamma, t_f, n_steps):
    """RK4 integration of the full master equation on 2x2 density matrices.

    drho/dt = -i [H/hbar, rho] - (gamma/2) sum_i [sigma_i, [sigma_i, rho]];
    oracle for the Bloch-vector integrator and its -4*gamma contraction.
    """
    h = t_f / n_steps
    half_grid = np.linspace(0.0, t_f, 2 * n_steps + 1)
    xs, ys, zs = source.coefficients(half_grid)

    def rhs(k, rho):
        ham = 0.5 * (xs[k] * SX - ys[k] * SY + zs[k] * SZ)
        d = -1j * (ham @ rho - rho @ ham)
        for s in (SX, SY, SZ):
            d -= (gamma / 2.0) * (s @ s @ rho - 2.0 * s @ rho @ s + rho @ s @ s)
        return d

    rho = np.array(rho0, dtype=complex)
    for i in range(n_steps):
        k = 2 * i
        k1 = rhs(k, rho)
        k2 = rhs(k + 1, rho + 0.5 * h * k1)
        k3 = rhs(k + 1, rho + 0.5 * h * k2)
        k4 = rhs(k + 2, rho + h * k3)
        rho = rho + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
    return rho


def bloch_of_rho(rho):
    return np.array([np.trace(rho @ s).real for s in (SX, SY, SZ)])


def followed_eigenstate(y, z):
    """Reference-picture eigenvector continuously connected to |-1>.

    Chooses between the two algebraic forms of the same ray to avoid
    cancellation; the branch starts at |-1> for z < 0 and ends at |1>.
    """
    g = math.hypot(y, z)
    if z < 0:
        v = np.array([1j * y, g - z], dtype=complex)
    else:
        v = np.array([z + g, -1j * y], dtype=complex)
    return v / np.linalg.norm(v)


def min_tracking_overlap(trajectory, y, z):
    """Smallest overlap with the followed instantaneous eigenstate along a run."""
    worst = 1.0
    for k in range(len(trajectory.times)):
        overlap = abs(np.vdot(followed_eigenstate(y[k], z[k]), trajectory.states[k])) ** 2
        worst = min(worst, overlap)
    return worst
