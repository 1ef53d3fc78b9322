"""Command-line interface: field traces, state evolution and parameter sweeps.

Every command writes a CSV data file, a JSON run summary next to it, and (by
default) a rendered PNG figure alongside the delimited output.  CSV numbers
use 17 significant digits, so reruns with identical inputs are byte-stable.

Exit codes: 0 success, 2 configuration or argument error, 3 numerical
failure, 4 norm-drift failure during unitary propagation.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .config import ConfigError, DotParams, ValidationError, load_config
from .dynamics import (
    AnalyticSource,
    NegativeRateError,
    NormDriftError,
    RotatedSource,
    propagate_bloch,
    propagate_schrodinger,
)
from .experiments import (
    FIGURE_TF_TRIO,
    field_table,
    sweep_dephasing,
    sweep_operation_time,
    sweep_systematic_error,
)
from .hamiltonians import DegenerateGapError, PICTURES, ROTATED, TOTAL
from . import plotting

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3
EXIT_NORM_DRIFT = 4

FIELDS_HEADER = "t_ns,uL,uR,Y,Z,X,Q,phi,dphi,eps_xL,eps_xR,eps_yD,eps_xnL,eps_xnR"
EVOLVE_HEADER = "t_ns,rx,ry,rz,pop1,norm_drift"


@dataclass
class RunManifest:
    """What a command ran and what it produced."""

    command: str
    params: dict
    files: list = field(default_factory=list)
    fidelity: float | None = None
    slope: float | None = None
    version: str = __version__
    duration_s: float = 0.0

    def to_json(self) -> str:
        payload = {"command": self.command, "params": self.params}
        if self.fidelity is not None:
            payload["fidelity"] = self.fidelity
        if self.slope is not None:
            payload["slope"] = self.slope
        payload["files"] = self.files
        payload["version"] = self.version
        payload["duration_s"] = self.duration_s
        return json.dumps(payload, indent=2, sort_keys=False) + "\n"


def _fmt(value) -> str:
    return "" if value is None else format(float(value), ".17g")


def _write_csv(path: Path, header: str, columns: list) -> None:
    n = max(len(c) for c in columns if c is not None)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(header + "\n")
        for i in range(n):
            fh.write(",".join("" if col is None else _fmt(col[i]) for col in columns) + "\n")


def _resolve_params(args) -> DotParams:
    params = load_config(args.config) if args.config else DotParams()
    if getattr(args, "tf", None) is not None:
        params = params.with_t_f(args.tf)
    return params


def _parse_range(spec: str) -> np.ndarray:
    parts = spec.split(":")
    log = False
    if len(parts) == 4:
        if parts[3] != "log":
            raise ConfigError(f"bad range suffix {parts[3]!r}; expected 'log'")
        log = True
        parts = parts[:3]
    if len(parts) != 3:
        raise ConfigError(f"bad range {spec!r}; expected start:stop:count[:log]")
    try:
        start, stop = float(parts[0]), float(parts[1])
        count = int(parts[2])
    except ValueError as exc:
        raise ConfigError(f"bad range {spec!r}: {exc}") from exc
    if count < 2:
        raise ConfigError(f"range needs at least 2 points, got {count}")
    if log:
        if start <= 0 or stop <= 0:
            raise ConfigError("log range needs positive endpoints")
        return np.geomspace(start, stop, count)
    return np.linspace(start, stop, count)


def cmd_fields(args) -> RunManifest:
    started = time.perf_counter()
    params = _resolve_params(args)
    table = field_table(params, args.picture, args.points)
    out = Path(args.out)
    _write_csv(
        out,
        FIELDS_HEADER,
        [
            table.grid,
            table.uL,
            table.uR,
            table.Y,
            table.Z,
            table.X,
            table.Q,
            table.phi,
            table.dphi,
            table.eps_xL,
            table.eps_xR,
            table.eps_yD,
            table.eps_xnL,
            table.eps_xnR,
        ],
    )
    manifest = RunManifest(command="fields", params=asdict(params), files=[str(out)])
    if not args.no_plot:
        fig_path = out.with_suffix(".png")
        plotting.plot_fields(table, fig_path)
        manifest.files.append(str(fig_path))
    return _finish(manifest, out, started)


def cmd_evolve(args) -> RunManifest:
    started = time.perf_counter()
    params = _resolve_params(args)
    if args.picture == ROTATED:
        source = RotatedSource(params)
    else:
        source = AnalyticSource(params, args.picture)
    if args.gamma == 0.0:
        traj = propagate_schrodinger(source, (0.0, 1.0), params.t_f, n_steps=args.steps)
        c1, c2 = traj.states[:, 0], traj.states[:, 1]
        inner = np.conj(c1) * c2
        bloch = np.column_stack([2.0 * inner.real, 2.0 * inner.imag, np.abs(c1) ** 2 - np.abs(c2) ** 2])
        pop1 = np.abs(c1) ** 2
    else:
        traj = propagate_bloch(source, (0.0, 0.0, -1.0), args.gamma, params.t_f, n_steps=args.steps)
        bloch = traj.states
        pop1 = 0.5 * (1.0 + bloch[:, 2])
    out = Path(args.out)
    _write_csv(
        out,
        EVOLVE_HEADER,
        [traj.times, bloch[:, 0], bloch[:, 1], bloch[:, 2], pop1, traj.norm_drift],
    )
    manifest = RunManifest(
        command="evolve", params=asdict(params), files=[str(out)], fidelity=traj.fidelity
    )
    if not args.no_plot:
        fig_path = out.with_suffix(".png")
        plotting.plot_evolution(
            traj.times, bloch, pop1, fig_path,
            title=f"{args.picture} picture, gamma = {args.gamma:g}/ns",
        )
        manifest.files.append(str(fig_path))
    return _finish(manifest, out, started)


def cmd_sweep(args) -> RunManifest:
    started = time.perf_counter()
    params = _resolve_params(args)
    values = _parse_range(args.range)
    tf_list = FIGURE_TF_TRIO if args.tf_list is None else tuple(
        float(v) for v in args.tf_list.split(",")
    )
    out = Path(args.out)
    manifest = RunManifest(command=f"sweep-{args.kind}", params=asdict(params), files=[str(out)])

    if args.kind == "tf":
        result = sweep_operation_time(params, values)
        _write_csv(out, "t_f_ns,eps_max", [result.parameter_values, result.observable_values])
        manifest.slope = result.fit["slope"]
        if not args.no_plot:
            fig_path = out.with_suffix(".png")
            plotting.plot_tf_sweep(result, fig_path)
            manifest.files.append(str(fig_path))
    else:
        if args.kind == "gamma":
            if np.any(values < 0):
                raise NegativeRateError("dephasing rates must be nonnegative")
            results = sweep_dephasing(params, values, tf_list)
            first_col = "gamma_per_ns"
        else:
            results = sweep_systematic_error(params, values, tf_list)
            first_col = "lambda"
        header = ",".join([first_col] + [f"F_tf{tf:g}" for tf in tf_list])
        _write_csv(out, header, [values] + [r.observable_values for r in results])
        if not args.no_plot:
            fig_path = out.with_suffix(".png")
            plotting.plot_fidelity_sweeps(results, fig_path)
            manifest.files.append(str(fig_path))
    return _finish(manifest, out, started)


def _finish(manifest: RunManifest, out: Path, started: float) -> RunManifest:
    summary_path = out.with_suffix(".json")
    manifest.files.append(str(summary_path))
    manifest.duration_s = round(time.perf_counter() - started, 6)
    summary_path.write_text(manifest.to_json(), encoding="utf-8")
    missing = [f for f in manifest.files if not Path(f).exists()]
    if missing:
        raise RuntimeError(f"manifest lists missing files: {missing}")
    return manifest


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cd-spinsim",
        description="Counter-diabatic driving of a two-electron double quantum dot.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="flat key-value parameter file (defaults used if omitted)")
        p.add_argument("--tf", type=float, help="override the operation time t_f (ns)")
        p.add_argument("--out", required=True, help="output CSV path")
        p.add_argument("--no-plot", action="store_true", help="skip the PNG figure")

    p_fields = sub.add_parser("fields", help="drive potentials, coefficients and fields")
    common(p_fields)
    p_fields.add_argument("--picture", choices=PICTURES, default=ROTATED)
    p_fields.add_argument("--points", type=int, default=2000, help="grid points")
    p_fields.set_defaults(handler=cmd_fields)

    p_evolve = sub.add_parser("evolve", help="propagate the state and report fidelity")
    common(p_evolve)
    p_evolve.add_argument("--picture", choices=PICTURES, default=TOTAL)
    p_evolve.add_argument("--gamma", type=float, default=0.0, help="dephasing rate (1/ns)")
    p_evolve.add_argument("--steps", type=int, help="override the RK4 step count")
    p_evolve.set_defaults(handler=cmd_evolve)

    p_sweep = sub.add_parser("sweep", help="sweep t_f, gamma or lambda")
    common(p_sweep)
    p_sweep.add_argument("--kind", choices=("tf", "gamma", "lambda"), required=True)
    p_sweep.add_argument(
        "--range",
        required=True,
        help="start:stop:count[:log]; use --range=-0.2:0.2:41 for negative starts",
    )
    p_sweep.add_argument("--tf-list", help="comma-separated operation times for gamma/lambda sweeps")
    p_sweep.set_defaults(handler=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        manifest = args.handler(args)
    except (ConfigError, ValidationError, NegativeRateError, OSError) as exc:
        print(f"cd-spinsim: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NormDriftError as exc:
        print(f"cd-spinsim: {exc}", file=sys.stderr)
        return EXIT_NORM_DRIFT
    except (DegenerateGapError, FloatingPointError, np.linalg.LinAlgError) as exc:
        print(f"cd-spinsim: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    print(manifest.to_json(), end="")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
