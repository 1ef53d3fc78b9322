import math

import numpy as np
import pytest

from cd_spinsim import GridError, PulseShape, potential, potential_rate, trace


@pytest.fixture
def shape():
    return PulseShape(amplitude=3.0, center=0.54, width=0.1, t_f=11.0)


def test_potential_starts_near_zero(shape):
    # tanh(5.4) = 0.99995840..., so the ramp starts at ~4.2e-5 of amplitude
    expected = shape.amplitude * (1.0 - math.tanh(5.4))
    assert potential(shape, 0.0) == pytest.approx(expected, rel=1e-12)
    assert potential(shape, 0.0) < 1e-3 * shape.amplitude


def test_potential_center_value_exact(shape):
    assert potential(shape, shape.center * shape.t_f) == shape.amplitude


def test_potential_saturates(shape):
    assert potential(shape, 1e6) == pytest.approx(2.0 * shape.amplitude, rel=1e-12)


def test_potential_monotone_and_bounded(shape):
    # strict upper bound checked where tanh has not saturated to 1.0 in float
    t = np.linspace(-shape.t_f, 2 * shape.t_f, 4001)
    v = potential(shape, t)
    assert np.all(np.diff(v) >= 0)
    assert np.all(v >= 0)
    assert np.all(v < 2.0 * shape.amplitude)


def test_rate_maximum_at_center(shape):
    peak = potential_rate(shape, shape.center * shape.t_f)
    assert peak == pytest.approx(shape.amplitude / (shape.width * shape.t_f), rel=1e-12)
    t = np.linspace(0.0, shape.t_f, 2001)
    assert np.all(potential_rate(shape, t) <= peak * (1 + 1e-12))


def test_rate_tail_value(shape):
    sech2 = 1.0 - math.tanh(5.4) ** 2
    assert potential_rate(shape, 0.0) == pytest.approx(
        shape.amplitude * sech2 / (shape.width * shape.t_f), rel=1e-12
    )


def test_zero_amplitude_rate_is_zero():
    shape = PulseShape(amplitude=0.0, center=0.5, width=0.1, t_f=2.0)
    t = np.linspace(0.0, 2.0, 101)
    assert np.all(potential_rate(shape, t) == 0.0)


def test_rate_matches_finite_difference(shape):
    # spec'd consistency: centred difference at step 1e-4 * t_f, relative 1e-6
    h = 1e-4 * shape.t_f
    t = np.linspace(0.05 * shape.t_f, 0.95 * shape.t_f, 37)
    fd = (potential(shape, t + h) - potential(shape, t - h)) / (2 * h)
    assert potential_rate(shape, t) == pytest.approx(fd, rel=1e-6)


def test_curvature_matches_finite_difference(shape):
    h = 1e-4 * shape.t_f
    t = np.linspace(0.1 * shape.t_f, 0.9 * shape.t_f, 17)
    fd = (potential_rate(shape, t + h) - potential_rate(shape, t - h)) / (2 * h)
    assert shape.curvature(t) == pytest.approx(fd, rel=1e-5, abs=1e-12)


def test_trace_requires_two_points(params):
    with pytest.raises(GridError):
        trace(params, 1)


def test_trace_grid_and_field_sign(params):
    tr = trace(params, 501)
    assert tr.grid[0] == 0.0 and tr.grid[-1] == params.t_f
    assert np.all(np.diff(tr.grid) > 0)
    np.testing.assert_allclose(np.diff(tr.grid), tr.grid[1] - tr.grid[0], rtol=1e-9)
    # eps = -du/dt pointwise, analytic rates
    np.testing.assert_array_equal(tr.epsL, -tr.duL)
    np.testing.assert_array_equal(tr.epsR, -tr.duR)


def test_trace_zero_amplitude(params):
    import dataclasses

    silent = dataclasses.replace(params, A0_alpha=0.0)
    tr = trace(silent, 101)
    assert np.all(tr.uL == 0.0) and np.all(tr.epsR == 0.0)


def test_trace_field_peaks_near_pulse_centres(params):
    tr = trace(params, 4001)
    s = tr.grid / params.t_f
    assert s[np.argmax(np.abs(tr.epsL))] == pytest.approx(params.a_L, abs=2e-3)
    assert s[np.argmax(np.abs(tr.epsR))] == pytest.approx(params.a_R, abs=2e-3)


@pytest.mark.parametrize("tf_other", [2.0, 5.5, 17.0])
def test_potential_depends_on_scaled_time_only(params, tf_other):
    tr_a = trace(params, 401)
    tr_b = trace(params.with_t_f(tf_other), 401)
    np.testing.assert_allclose(tr_b.uL, tr_a.uL, rtol=1e-12)
    np.testing.assert_allclose(tr_b.uR, tr_a.uR, rtol=1e-12)


@pytest.mark.parametrize("tf_other", [2.0, 5.5])
def test_fields_scale_inversely_with_operation_time(params, tf_other):
    tr_a = trace(params, 401)
    tr_b = trace(params.with_t_f(tf_other), 401)
    np.testing.assert_allclose(tr_b.epsL, (params.t_f / tf_other) * tr_a.epsL, rtol=1e-12)
