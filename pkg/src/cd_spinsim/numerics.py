"""Small numerical utilities shared across modules."""

from __future__ import annotations

import numpy as np

# Fourth-order finite-difference weights on a uniform grid.
_CENTRAL = np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12.0
_FORWARD = np.array([-25.0, 48.0, -36.0, 16.0, -3.0]) / 12.0


def derivative(y: np.ndarray, dt: float) -> np.ndarray:
    """First derivative of uniformly sampled data, 4th-order accurate.

    Central five-point stencils in the interior, one-sided stencils of the
    same order at the two points next to each boundary.
    """
    y = np.asarray(y, dtype=float)
    if y.ndim != 1 or y.size < 5:
        raise ValueError("need a 1-d array with at least 5 samples")
    d = np.empty_like(y)
    d[2:-2] = (y[:-4] - 8.0 * y[1:-3] + 8.0 * y[3:-1] - y[4:]) / (12.0 * dt)
    d[0] = _FORWARD @ y[:5] / dt
    d[1] = _FORWARD @ y[1:6] / dt
    d[-1] = -(_FORWARD @ y[-1:-6:-1]) / dt
    d[-2] = -(_FORWARD @ y[-2:-7:-1]) / dt
    return d


def log_log_fit(x: np.ndarray, y: np.ndarray) -> dict:
    """Least-squares power-law fit; returns slope, intercept and r**2."""
    lx, ly = np.log(np.asarray(x, dtype=float)), np.log(np.asarray(y, dtype=float))
    slope, intercept = np.polyfit(lx, ly, 1)
    resid = ly - (slope * lx + intercept)
    ss_tot = np.sum((ly - ly.mean()) ** 2)
    r2 = 1.0 - float(np.sum(resid**2) / ss_tot) if ss_tot > 0 else 1.0
    return {"slope": float(slope), "intercept": float(intercept), "r2": r2}
