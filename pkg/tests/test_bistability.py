import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ring_ob import (
    CavityConfig,
    MediumParams,
    NonlinearCoefficient,
    ParameterError,
    RangeError,
    default_x_max,
    eta_closed_form,
    hysteresis,
    scaling_collapse,
    trace_curve,
    transmission,
    transmission_profile,
)
from ring_ob.cavity import input_slope

from conftest import figure_medium

FIG5_X_MAX = default_x_max(eta_closed_form(figure_medium()))


def on_curve_residual(eta, cav, rows):
    """Steady states satisfy I_t = T(I_t) * I_i."""
    i_in, i_out = rows[:, 0], rows[:, 1]
    return np.abs(i_out - transmission(eta, cav, i_out) * i_in) / np.maximum(i_out, 1)


def test_linear_cavity_limit():
    eta = NonlinearCoefficient(1e-300, 1e-300)
    cav = CavityConfig(0.4, cavity_detuning=0.7)
    curve = trace_curve(eta, cav, x_max=2.0, n_samples=101)
    assert curve.turning_points == ()
    t_airy = 0.4**2 / (0.4**2 + 4 * 0.6 * math.sin(0.35) ** 2)
    assert np.allclose(curve.i_out[1:] / curve.i_in[1:], t_airy, rtol=1e-13)


def test_curve_starts_at_origin(eta, cavity):
    curve = trace_curve(eta, cavity, n_samples=501)
    assert curve.samples[0][:3] == (0.0, 0.0, 0.0)
    assert np.all(np.diff(curve.x) > 0)
    assert curve.x[-1] == pytest.approx(default_x_max(eta))


def test_small_detuning_has_no_bistability(cavity):
    curve = trace_curve(eta_closed_form(figure_medium(delta_p=1.0)), cavity, FIG5_X_MAX, 20001)
    assert len(curve.turning_points) == 0
    assert curve.n_bistable_regions == 0


def test_large_detuning_is_multistable(eta, cavity):
    curve = trace_curve(eta, cavity, FIG5_X_MAX, 20001)
    assert len(curve.turning_points) >= 4
    assert curve.n_bistable_regions == len(curve.turning_points) // 2


def test_folds_alternate_and_are_refined(eta, cavity):
    curve = trace_curve(eta, cavity, n_samples=4001)
    kinds = [tp.kind for tp in curve.turning_points]
    assert kinds == ["fold-down", "fold-up"] * (len(kinds) // 2) + ["fold-down"] * (len(kinds) % 2)
    for tp in curve.turning_points:
        lo, hi = input_slope(eta, cavity, tp.x * (1 - 1e-9)), input_slope(eta, cavity, tp.x * (1 + 1e-9))
        assert lo * hi < 0
        assert (lo > 0) == (tp.kind == "fold-down")


def test_fold_location_independent_of_grid(eta, cavity):
    coarse = trace_curve(eta, cavity, n_samples=2001).turning_points
    fine = trace_curve(eta, cavity, n_samples=30001).turning_points
    assert len(coarse) == len(fine)
    for a, b in zip(coarse, fine):
        assert a.x == pytest.approx(b.x, rel=1e-9)
        assert a.i_in == pytest.approx(b.i_in, rel=1e-9)


@settings(max_examples=50)
@given(st.floats(1, 6), st.floats(-10, 10), st.floats(0.05, 0.95), st.floats(0, 2 * np.pi))
def test_monotone_start(oc, dp, t, delta):
    eta = eta_closed_form(MediumParams(omega_c=oc, delta_p=dp, c6=2e4, density=0.24, alpha=70))
    assert input_slope(eta, CavityConfig(t, delta), 0.0) > 0


def test_hysteresis_without_folds_is_reversible(cavity):
    eta = eta_closed_form(figure_medium(delta_p=1.0))
    curve = trace_curve(eta, cavity, n_samples=2001)
    trace = hysteresis(curve, 0.5 * curve.i_in.max(), n_steps=200)
    assert trace.jumps == ()
    assert np.allclose(trace.upward, trace.downward[::-1], rtol=1e-12, atol=0)


def test_hysteresis_first_region(eta, cavity):
    curve = trace_curve(eta, cavity)
    down, up = curve.turning_points[0], curve.turning_points[1]
    # stop inside the second stable branch but below the next fold
    trace = hysteresis(curve, 0.5 * (down.i_in + curve.turning_points[2].i_in), n_steps=400)
    assert [j.direction for j in trace.jumps] == ["up", "down"]
    up_jump, down_jump = trace.jumps
    assert up_jump.i_in == pytest.approx(down.i_in, rel=1e-12)
    assert up_jump.i_out_before == pytest.approx(down.i_out, rel=1e-9)
    assert up_jump.i_out_after > up_jump.i_out_before
    assert down_jump.i_in == pytest.approx(up.i_in, rel=1e-12)
    assert down_jump.i_out_after < down_jump.i_out_before


def test_hysteresis_states_lie_on_curve(eta, cavity):
    curve = trace_curve(eta, cavity)
    trace = hysteresis(curve, 0.6, n_steps=300)
    for rows in (trace.upward, trace.downward):
        assert np.all(on_curve_residual(eta, cavity, rows) < 1e-8)
        # monotone input sweeps with output continuous except at recorded jumps
        assert np.all(np.diff(rows[:, 0]) * np.sign(rows[-1, 0] - rows[0, 0]) >= 0)
    for jump in trace.jumps:
        for state in (jump.i_out_before, jump.i_out_after):
            row = np.array([[jump.i_in, state]])
            assert on_curve_residual(eta, cavity, row)[0] < 1e-8


def test_hysteresis_jumps_bracketed_by_sweep_levels(eta, cavity):
    curve = trace_curve(eta, cavity)
    n_steps, top = 300, 0.6
    trace = hysteresis(curve, top, n_steps)
    step = top / n_steps
    folds_down = [tp.i_in for tp in curve.turning_points if tp.kind == "fold-down"]
    folds_up = [tp.i_in for tp in curve.turning_points if tp.kind == "fold-up"]
    for jump in trace.jumps:
        pool = folds_down if jump.direction == "up" else folds_up
        assert min(abs(jump.i_in - f) for f in pool) <= 1e-6 * jump.i_in
        levels = trace.upward[:, 0] if jump.direction == "up" else trace.downward[:, 0]
        grid = levels[np.isclose(levels / step, np.round(levels / step), rtol=0, atol=1e-9)]
        assert np.min(np.abs(grid - jump.i_in)) <= step


def test_hysteresis_outside_coverage(eta, cavity):
    curve = trace_curve(eta, cavity, x_max=0.05)
    with pytest.raises(RangeError):
        hysteresis(curve, 1.001 * curve.i_in.max())
    with pytest.raises(ParameterError):
        hysteresis(curve, 0.0)


def test_scaling_self_collapse(eta, cavity):
    curve = trace_curve(eta, cavity, n_samples=1001)
    assert scaling_collapse([curve], [1.0], 3.0) == 0.0
    assert scaling_collapse([curve, curve], [1.0, 1.0], 3.0) < 1e-15


def test_scaling_collapse_coupling(cavity):
    curves = [trace_curve(eta_closed_form(figure_medium(omega_c=oc)), cavity) for oc in (2, 3, 4, 5)]
    eps = [oc / 2 for oc in (2, 3, 4, 5)]
    assert scaling_collapse(curves, eps, 3.0, "omega_c") < 1e-9
    # the wrong exponent must not collapse
    assert scaling_collapse(curves, eps, 2.0, "omega_c") > 1e-3


def test_scaling_collapse_on_unaligned_grids(cavity):
    # different sample positions, both ranges ending on the same falling branch
    ref = trace_curve(eta_closed_form(figure_medium(omega_c=2.0)), cavity, x_max=0.45, n_samples=40001)
    other = trace_curve(eta_closed_form(figure_medium(omega_c=3.0)), cavity, x_max=0.44 * 1.5**3,
                        n_samples=30001)
    assert scaling_collapse([ref, other], [1.0, 1.5], 3.0) < 1e-9


def test_scaling_collapse_density(cavity):
    base = figure_medium()
    eps = [1.0, 0.75, 0.5, 0.25]
    curves = [trace_curve(eta_closed_form(base.evolve(density=e * base.density, alpha=e * base.alpha)),
                          cavity) for e in eps]
    assert scaling_collapse(curves, eps, 2.0, "density") < 1e-9


def test_scaling_collapse_rejects_mixed_cavities(eta):
    a = trace_curve(eta, CavityConfig(0.5), n_samples=101)
    b = trace_curve(eta, CavityConfig(0.3), n_samples=101)
    with pytest.raises(ParameterError):
        scaling_collapse([a, b], [1.0, 1.0], 3.0)
    with pytest.raises(ParameterError):
        scaling_collapse([a, a], [2.0, 1.0], 3.0)
    with pytest.raises(ParameterError):
        scaling_collapse([a, a], [1.0, 1.0], 3.0, "alpha")


def test_profile_peaks_degrade(eta, cavity):
    prof = transmission_profile(eta, cavity, n_samples=8001)
    assert len(prof.peak_heights) >= 4
    assert np.all(np.diff(prof.peak_heights) < 0)
    assert np.all(np.diff(np.diff(prof.peak_positions)) < 0)


def test_profile_peak_shift_with_cavity_detuning(eta):
    first = {}
    for delta in (0.0, math.pi):
        cav = CavityConfig(0.5, delta)
        prof = transmission_profile(eta, cav, n_samples=20001)
        first[delta] = prof.peak_positions[0]
        # first interior resonance: phase(I_t) = delta - 2 pi
        target = delta - 2 * math.pi if delta > 0 else -2 * math.pi
        damping = target * 2 * eta.b / eta.a
        root = cav.t_mirror / (2 * eta.b) * -math.expm1(-damping)
        assert abs(first[delta] - root) < 0.05 * root
    assert first[math.pi] < first[0.0]


def test_profile_airy_comb():
    eta = NonlinearCoefficient(-2.0, 0.0)
    cav = CavityConfig(0.5, 0.0)
    prof = transmission_profile(eta, cav, i_t_max=10.0, n_samples=20001)
    phases = eta.a * prof.peak_positions / cav.t_mirror
    assert len(phases) >= 5
    assert np.allclose(np.diff(phases), -2 * math.pi, rtol=1e-6)
    assert np.allclose(prof.peak_heights, 1.0, atol=1e-6)


def test_profile_range_checks(eta, cavity):
    with pytest.raises(RangeError):
        transmission_profile(eta, cavity, i_t_max=cavity.t_mirror / (2 * eta.b))
    with pytest.raises(ParameterError):
        transmission_profile(NonlinearCoefficient(-1.0, 0.0), cavity)
