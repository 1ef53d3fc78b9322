"""Figure rendering for the CLI report path.

Figures are drawn straight onto ``matplotlib.figure.Figure`` objects and
saved to file, so no interactive backend is ever touched.  Each function
mirrors one of the CSV products: drive fields, a state trajectory, or a
parameter sweep.
"""

from __future__ import annotations

import numpy as np
from matplotlib.figure import Figure

from .experiments import FieldTable, SweepResult


def _new_figure(nrows: int = 1) -> tuple[Figure, list]:
    fig = Figure(figsize=(6.4, 2.9 * nrows), dpi=150)
    axes = fig.subplots(nrows, 1, squeeze=False)[:, 0]
    return fig, list(axes)


def plot_fields(table: FieldTable, path) -> None:
    """Coefficients and drive fields of one schedule, one panel each."""
    fig, (ax_c, ax_f) = _new_figure(2)
    t = table.grid
    ax_c.plot(t, table.Y, label="Y")
    ax_c.plot(t, table.Z, "--", label="Z")
    if table.Q is not None:
        ax_c.plot(t, table.Q, ":", label="Q")
        ax_c.plot(t, table.Z + table.dphi, "-.", label="Z + dphi")
    ax_c.set_ylabel("coefficient (rad/ns)")
    ax_c.legend(loc="best", fontsize=8)

    ax_f.plot(t, table.eps_xL, label="eps_xL")
    ax_f.plot(t, table.eps_xR, "--", label="eps_xR")
    if table.eps_yD is not None:
        ax_f.plot(t, table.eps_yD, "-.", label="eps_yD")
    if table.eps_xnL is not None:
        ax_f.plot(t, table.eps_xnL, label="eps_xnL")
        ax_f.plot(t, table.eps_xnR, "--", label="eps_xnR")
    ax_f.set_xlabel("t (ns)")
    ax_f.set_ylabel("field (rad/ns$^2$)")
    ax_f.legend(loc="best", fontsize=8)

    fig.suptitle(f"{table.picture} picture drive", fontsize=10)
    fig.tight_layout()
    fig.savefig(path)


def plot_evolution(times, bloch, pop1, path, title: str = "") -> None:
    """Bloch components and target population along one trajectory."""
    fig, (ax_r, ax_p) = _new_figure(2)
    for idx, name in enumerate(("rx", "ry", "rz")):
        ax_r.plot(times, bloch[:, idx], label=name)
    ax_r.set_ylabel("Bloch components")
    ax_r.legend(loc="best", fontsize=8)
    ax_p.plot(times, pop1, color="tab:red")
    ax_p.set_xlabel("t (ns)")
    ax_p.set_ylabel("population of |1>")
    ax_p.set_ylim(-0.02, 1.02)
    if title:
        fig.suptitle(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path)


def plot_tf_sweep(result: SweepResult, path) -> None:
    """Log-log field maximum versus operation time with the fitted power law."""
    fig, (ax,) = _new_figure(1)
    tf = result.parameter_values
    ax.loglog(tf, result.observable_values, "o-", ms=3, label="eps_max")
    if result.fit:
        lo = tf.min()
        span = np.geomspace(lo, lo * 10.0, 50)
        ax.loglog(
            span,
            np.exp(result.fit["intercept"]) * span ** result.fit["slope"],
            "--",
            label=f"slope {result.fit['slope']:.2f}",
        )
    ax.set_xlabel("t_f (ns)")
    ax.set_ylabel("eps_max (rad/ns$^2$)")
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path)


def plot_fidelity_sweeps(results: list[SweepResult], path) -> None:
    """Fidelity curves versus gamma or lambda, one line per operation time."""
    fig, (ax,) = _new_figure(1)
    styles = ("-", "--", "-.", ":")
    for res, style in zip(results, styles * (1 + len(results) // 4)):
        ax.plot(
            res.parameter_values,
            res.observable_values,
            style,
            label=f"t_f = {res.metadata.get('t_f', '?')} ns",
        )
    ax.set_xlabel(results[0].parameter_name)
    ax.set_ylabel("fidelity")
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path)
