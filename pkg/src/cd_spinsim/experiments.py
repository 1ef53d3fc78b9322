"""Figure-reproducing numerical experiments.

Each routine returns plain data (fidelities, field maxima, fit results); the
CLI layer turns them into CSV tables and plots.  Sweep points are independent
and deterministic: rerunning any sweep with the same inputs yields identical
tables.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .config import DotParams
from .dynamics import (
    AnalyticSource,
    RotatedSource,
    propagate_bloch,
    propagate_schrodinger,
)
from .hamiltonians import (
    REFERENCE,
    ROTATED,
    TOTAL,
    cd_field_synthesis,
    coefficient_trace,
    rotated_picture,
    synthesize_x_only_fields,
)
from .numerics import log_log_fit
from .pulses import trace as pulse_trace

SPIN_DOWN = (0.0, 1.0)          # |-1>, the initial state of every protocol
BLOCH_DOWN = (0.0, 0.0, -1.0)

DEFAULT_TF_SWEEP = tuple(np.geomspace(11.0, 0.2, 25))
DEFAULT_GAMMA_GRID = tuple(np.linspace(0.0, 0.05, 26))
DEFAULT_LAMBDA_GRID = tuple(np.linspace(-0.2, 0.2, 41))
FIGURE_TF_TRIO = (2.0, 3.0, 4.0)


@dataclass(frozen=True)
class FieldTable:
    """All drive quantities of one schedule on a common grid.

    Columns that are not defined for the requested picture are ``None``:
    the reference picture has no CD quantities, the total picture has no
    rotated-frame quantities.
    """

    picture: str
    grid: np.ndarray
    uL: np.ndarray
    uR: np.ndarray
    Y: np.ndarray
    Z: np.ndarray
    eps_xL: np.ndarray
    eps_xR: np.ndarray
    X: np.ndarray | None = None
    eps_yD: np.ndarray | None = None
    Q: np.ndarray | None = None
    phi: np.ndarray | None = None
    dphi: np.ndarray | None = None
    u_nL: np.ndarray | None = None
    u_nR: np.ndarray | None = None
    eps_xnL: np.ndarray | None = None
    eps_xnR: np.ndarray | None = None


@dataclass(frozen=True)
class SweepResult:
    """One swept parameter against one observable, with optional fit metadata."""

    parameter_name: str
    parameter_values: np.ndarray
    observable_name: str
    observable_values: np.ndarray
    fit: dict | None
    metadata: dict

    def __post_init__(self):
        if len(self.parameter_values) != len(self.observable_values):
            raise ValueError("parameter and observable lengths differ")
        if not np.all(np.isfinite(self.observable_values)):
            raise ValueError("observable values must be finite")


def field_table(params: DotParams, picture: str = ROTATED, n_points: int = 2000) -> FieldTable:
    """Assemble the drive table for one picture; shared by CLI and sweeps."""
    pt = pulse_trace(params, n_points)
    tr = coefficient_trace(params, n_points)
    table = dict(
        picture=picture,
        grid=tr.grid,
        uL=pt.uL,
        uR=pt.uR,
        Y=tr.Y,
        Z=tr.Z,
        eps_xL=pt.epsL,
        eps_xR=pt.epsR,
    )
    if picture == REFERENCE:
        return FieldTable(**table)
    v_d, eps_yd = cd_field_synthesis(params, tr.grid)
    table.update(X=v_d, eps_yD=eps_yd)
    if picture == TOTAL:
        return FieldTable(**table)
    rot = rotated_picture(tr)
    synth = synthesize_x_only_fields(rot, params)
    table.update(
        Q=rot.Q,
        phi=rot.phi,
        dphi=rot.dphi,
        u_nL=synth.u_nL,
        u_nR=synth.u_nR,
        eps_xnL=synth.eps_xnL,
        eps_xnR=synth.eps_xnR,
    )
    return FieldTable(**table)


def eps_max(table: FieldTable) -> float:
    """Largest synthesized-field magnitude, max(|eps_xnL|, |eps_xnR|)."""
    if table.eps_xnL is None:
        raise ValueError("eps_max needs a rotated-picture field table")
    return float(max(np.abs(table.eps_xnL).max(), np.abs(table.eps_xnR).max()))


@dataclass(frozen=True)
class BenchmarkResult:
    fidelity: float
    table: FieldTable


def adiabatic_benchmark(params: DotParams) -> float:
    """Final |1> population under the reference Hamiltonian alone."""
    traj = propagate_schrodinger(AnalyticSource(params, REFERENCE), SPIN_DOWN, params.t_f)
    return traj.fidelity


def cd_benchmark(params: DotParams, picture: str = TOTAL) -> BenchmarkResult:
    """Shortcut fidelity plus the driving-field table for the chosen picture."""
    if picture == TOTAL:
        source = AnalyticSource(params, TOTAL)
    elif picture == ROTATED:
        source = RotatedSource(params)
    else:
        raise ValueError(f"cd_benchmark runs the total or rotated picture, not {picture!r}")
    traj = propagate_schrodinger(source, SPIN_DOWN, params.t_f)
    return BenchmarkResult(fidelity=traj.fidelity, table=field_table(params, picture))


def smallest_decade_mask(values: np.ndarray) -> np.ndarray:
    """Select the lowest factor-of-10 span of a positive value set."""
    values = np.asarray(values, dtype=float)
    return values <= values.min() * 10.0 * (1.0 + 1e-12)


def sweep_operation_time(params: DotParams, tf_values=None, n_points: int = 2000) -> SweepResult:
    """eps_max versus operation time, with a power-law fit on the smallest decade."""
    tfs = np.asarray(DEFAULT_TF_SWEEP if tf_values is None else tf_values, dtype=float)
    if np.any(tfs <= 0):
        raise ValueError("operation times must be positive")
    maxima = np.array(
        [eps_max(field_table(params.with_t_f(tf), ROTATED, n_points)) for tf in tfs]
    )
    sel = smallest_decade_mask(tfs)
    fit = log_log_fit(tfs[sel], maxima[sel])
    fit["n_points"] = int(sel.sum())
    return SweepResult(
        parameter_name="t_f",
        parameter_values=tfs,
        observable_name="eps_max",
        observable_values=maxima,
        fit=fit,
        metadata={"params": asdict(params)},
    )


def sweep_dephasing(params: DotParams, gamma_values=None, tf_values=FIGURE_TF_TRIO) -> list[SweepResult]:
    """Final fidelity versus dephasing rate, one sweep per operation time.

    Rotated-picture Bloch dynamics from |-1>; the dissipator acts over all
    three Pauli channels, so the decay is isotropic.
    """
    gammas = np.asarray(DEFAULT_GAMMA_GRID if gamma_values is None else gamma_values, dtype=float)
    results = []
    for tf in tf_values:
        source = RotatedSource(params.with_t_f(tf))
        fids = np.array(
            [propagate_bloch(source, BLOCH_DOWN, g, tf).fidelity for g in gammas]
        )
        results.append(
            SweepResult(
                parameter_name="gamma",
                parameter_values=gammas,
                observable_name="fidelity",
                observable_values=fids,
                fit=None,
                metadata={"t_f": float(tf), "params": asdict(params)},
            )
        )
    return results


def sweep_systematic_error(params: DotParams, lambda_values=None, tf_values=FIGURE_TF_TRIO) -> list[SweepResult]:
    """Final fidelity versus relative drive deviation, one sweep per operation time.

    The synthesized potentials' time-dependent parts are scaled by (1 + lambda)
    and propagated unitarily; the static detuning is never scaled.
    """
    lams = np.asarray(DEFAULT_LAMBDA_GRID if lambda_values is None else lambda_values, dtype=float)
    results = []
    for tf in tf_values:
        base = RotatedSource(params.with_t_f(tf))
        fids = np.array(
            [
                propagate_schrodinger(base.scaled(1.0 + lam), SPIN_DOWN, tf).fidelity
                for lam in lams
            ]
        )
        results.append(
            SweepResult(
                parameter_name="lambda",
                parameter_values=lams,
                observable_name="fidelity",
                observable_values=fids,
                fit=None,
                metadata={"t_f": float(tf), "params": asdict(params)},
            )
        )
    return results
