"""Steady-state input-output curves, folds, hysteresis and scaling collapses.

Curves are parametrized by the intracavity intensity ``x``; ``I_i(x)`` and
``I_t(x)`` are single valued and smooth, so the multivalued ``I_t(I_i)``
relation comes out without solving the implicit transmission equation.
Branches with ``dI_i/dx > 0`` are treated as stable (slope criterion); this
is a modeling convention, no dynamical stability analysis is done.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import interpolate, optimize

from .cavity import CavityConfig, input_slope, io_from_intracavity, max_output_intensity, transmission
from .errors import ParameterError, RangeError
from .nonlinearity import NonlinearCoefficient

__all__ = [
    "TurningPoint",
    "SteadyStateCurve",
    "Jump",
    "HysteresisTrace",
    "TransmissionProfile",
    "MAX_DAMPING",
    "default_x_max",
    "default_i_t_max",
    "trace_curve",
    "hysteresis",
    "scaling_collapse",
    "transmission_profile",
]

# Sweeps stop once the single-pass field attenuation reaches 30 dB.
MAX_DAMPING = math.log(1e3)

FOLD_DOWN = "fold-down"  # local maximum of I_i(x)
FOLD_UP = "fold-up"  # local minimum of I_i(x)


@dataclass(frozen=True)
class TurningPoint:
    x: float
    i_in: float
    i_out: float
    kind: str


@dataclass(frozen=True, eq=False)
class SteadyStateCurve:
    """Samples ``(x, i_in, i_out, transmission)`` with ``x`` increasing."""

    eta: NonlinearCoefficient
    cav: CavityConfig
    x: np.ndarray
    i_in: np.ndarray
    i_out: np.ndarray
    transmission: np.ndarray
    turning_points: tuple[TurningPoint, ...] = ()

    @property
    def samples(self) -> list[tuple[float, float, float, float]]:
        return list(zip(self.x.tolist(), self.i_in.tolist(), self.i_out.tolist(),
                        self.transmission.tolist()))

    @property
    def n_bistable_regions(self) -> int:
        return len(self.turning_points) // 2

    @classmethod
    def empty(cls, eta: NonlinearCoefficient, cav: CavityConfig) -> "SteadyStateCurve":
        nothing = np.empty(0)
        return cls(eta, cav, nothing, nothing, nothing, nothing)


@dataclass(frozen=True)
class Jump:
    i_in: float
    i_out_before: float
    i_out_after: float
    direction: str  # "up" or "down"


@dataclass(frozen=True, eq=False)
class HysteresisTrace:
    """Quasi-static up-then-down sweep; rows of ``upward``/``downward`` are ``(I_i, I_t)``.

    A jump happens exactly at the fold input level, so both the pre- and
    post-jump states appear in the trace at that ``I_i``.
    """

    upward: np.ndarray
    downward: np.ndarray
    jumps: tuple[Jump, ...] = ()


@dataclass(frozen=True, eq=False)
class TransmissionProfile:
    i_out: np.ndarray
    transmission: np.ndarray
    peak_positions: np.ndarray = field(default_factory=lambda: np.empty(0))
    peak_heights: np.ndarray = field(default_factory=lambda: np.empty(0))


def default_x_max(eta: NonlinearCoefficient, max_damping: float = MAX_DAMPING) -> float:
    """Intracavity intensity at which ``ln(1 + 2bx)`` reaches ``max_damping``."""
    if not eta.b > 0:
        raise ParameterError("default sweep range needs Im(eta) > 0; pass x_max", "x_max")
    return math.expm1(max_damping) / (2.0 * eta.b)


def default_i_t_max(eta: NonlinearCoefficient, cav: CavityConfig,
                    max_damping: float = MAX_DAMPING) -> float:
    """Output intensity reached at ``x = default_x_max``."""
    if not eta.b > 0:
        raise ParameterError("default range needs Im(eta) > 0; pass i_t_max", "i_t_max")
    return cav.t_mirror / (2.0 * eta.b) * -math.expm1(-max_damping)


def trace_curve(eta: NonlinearCoefficient, cav: CavityConfig, x_max: float | None = None,
                n_samples: int = 4001) -> SteadyStateCurve:
    """Sample the steady state on ``x in [0, x_max]`` and locate its folds.

    Folds are bracketed by sign changes of the analytic slope ``dI_i/dx``
    between neighbouring samples and refined with brentq. A pair of folds
    closer together than the grid spacing is not resolved.
    """
    if x_max is None:
        x_max = default_x_max(eta)
    if not x_max > 0:
        raise ParameterError(f"x_max must be positive, got {x_max!r}", "x_max")
    if n_samples < 2:
        raise ParameterError(f"n_samples must be >= 2, got {n_samples}", "n_samples")

    x = np.linspace(0.0, x_max, n_samples)
    i_in, i_out = io_from_intracavity(eta, cav, x)
    trans = transmission(eta, cav, i_out)

    slope = input_slope(eta, cav, x)
    rising = slope > 0
    folds = []
    for k in np.flatnonzero(rising[1:] != rising[:-1]):
        lo, hi = x[k], x[k + 1]
        if slope[k + 1] == 0.0:
            xf = hi
        else:
            xf = optimize.brentq(lambda s: input_slope(eta, cav, s), lo, hi,
                                 xtol=1e-14 * hi, rtol=1e-12)
        fi, fo = io_from_intracavity(eta, cav, xf)
        folds.append(TurningPoint(float(xf), fi, fo, FOLD_DOWN if rising[k] else FOLD_UP))
    return SteadyStateCurve(eta, cav, x, i_in, i_out, trans, tuple(folds))


@dataclass(frozen=True)
class _Branch:
    x_lo: float
    x_hi: float
    i_lo: float
    i_hi: float


def _stable_branches(curve: SteadyStateCurve) -> list[_Branch]:
    tps = curve.turning_points
    edges = [(0.0, 0.0)] + [(tp.x, tp.i_in) for tp in tps] + [(curve.x[-1], curve.i_in[-1])]
    # segments alternate rising/falling starting with a rising one
    return [_Branch(edges[j][0], edges[j + 1][0], edges[j][1], edges[j + 1][1])
            for j in range(0, len(edges) - 1, 2)]


def _solve_on_branch(curve, br: _Branch, level: float) -> float:
    if level <= br.i_lo:
        x = br.x_lo
    elif level >= br.i_hi:
        x = br.x_hi
    else:
        x = optimize.brentq(lambda s: io_from_intracavity(curve.eta, curve.cav, s)[0] - level,
                            br.x_lo, br.x_hi, xtol=1e-15 * max(br.x_hi, 1e-300), rtol=1e-15)
    return io_from_intracavity(curve.eta, curve.cav, x)[1]


def hysteresis(curve: SteadyStateCurve, i_i_max: float, n_steps: int = 2000) -> HysteresisTrace:
    """Replay an adiabatic sweep of the input intensity from 0 to ``i_i_max`` and back.

    The state follows its current stable branch until that branch ends at a
    fold, then jumps at the fold's input level to the nearest stable branch
    in the direction of the sweep (larger ``x`` going up, smaller going down).
    """
    if not i_i_max > 0:
        raise ParameterError("i_i_max must be positive", "i_i_max")
    if n_steps < 1:
        raise ParameterError("n_steps must be >= 1", "n_steps")
    if curve.x.size < 2 or i_i_max > float(np.max(curve.i_in)):
        raise RangeError(
            f"i_i_max={i_i_max:.6g} exceeds the input range covered by the curve", "i_i_max"
        )
    branches = _stable_branches(curve)
    levels = np.linspace(0.0, i_i_max, n_steps + 1)
    jumps = []

    def target(k, level, step):
        candidates = range(k + 1, len(branches)) if step > 0 else range(k - 1, -1, -1)
        for j in candidates:
            if branches[j].i_lo <= level <= branches[j].i_hi:
                return j
        raise RangeError(f"no stable branch covers I_i={level:.6g}; extend x_max", "i_i_max")

    def sweep(start, ordered, step):
        k, rows = start, []
        for level in ordered:
            while (level > branches[k].i_hi) if step > 0 else (level < branches[k].i_lo):
                edge = branches[k].i_hi if step > 0 else branches[k].i_lo
                before = _solve_on_branch(curve, branches[k], edge)
                k = target(k, edge, step)
                after = _solve_on_branch(curve, branches[k], edge)
                rows += [(edge, before), (edge, after)]
                jumps.append(Jump(edge, before, after, "up" if step > 0 else "down"))
            rows.append((level, _solve_on_branch(curve, branches[k], level)))
        return k, np.array(rows, dtype=float).reshape(-1, 2)

    k_top, upward = sweep(0, levels, +1)
    _, downward = sweep(k_top, levels[::-1], -1)
    return HysteresisTrace(upward, downward, tuple(jumps))


def scaling_collapse(curves, factors, exponent: float, parameter: str = "omega_c") -> float:
    """Largest deviation of rescaled curves from the reference ``curves[0]``.

    Intensities are rescaled by ``eps**-exponent`` for ``parameter="omega_c"``
    and ``eps**+exponent`` for ``parameter="density"``. Since ``I_t`` grows
    monotonically along a curve, each one is a smooth single-valued map
    ``I_t -> I_i`` even when bistable; rescaled curves are interpolated with a
    cubic spline onto the reference's ``I_t`` samples in the shared range.
    Deviations are relative to the reference's largest input intensity;
    ``inf`` when a curve shares no range with the reference.
    """
    curves, factors = list(curves), [float(f) for f in factors]
    if len(curves) != len(factors) or not curves:
        raise ParameterError("need one scaling factor per curve", "factors")
    if factors[0] != 1.0:
        raise ParameterError("factors[0] must be 1 (reference curve)", "factors")
    if any(f <= 0 for f in factors):
        raise ParameterError("scaling factors must be positive", "factors")
    if parameter == "omega_c":
        sign = -1.0
    elif parameter == "density":
        sign = 1.0
    else:
        raise ParameterError(f"unknown scaling parameter {parameter!r}", "parameter")
    ref = curves[0]
    if any(c.cav != ref.cav for c in curves):
        raise ParameterError("curves must share the same cavity configuration", "cavity")

    norm = float(np.max(ref.i_in))
    worst = 0.0
    for curve, eps in zip(curves[1:], factors[1:]):
        s = eps ** (sign * exponent)
        c_out, c_in = curve.i_out * s, curve.i_in * s
        keep = (ref.i_out >= c_out[0]) & (ref.i_out <= c_out[-1])
        if len(c_out) < 4 or not np.any(keep):
            return math.inf
        model = interpolate.CubicSpline(c_out, c_in)
        dev = np.abs(model(ref.i_out[keep]) - ref.i_in[keep]) / norm
        worst = max(worst, float(np.max(dev)))
    return worst


def transmission_profile(eta: NonlinearCoefficient, cav: CavityConfig,
                         i_t_max: float | None = None, n_samples: int = 4001) -> TransmissionProfile:
    """Transmission versus output intensity with interior peaks located.

    Peaks are interior local maxima of the sampled profile refined by a
    three-point parabola.
    """
    if i_t_max is None:
        i_t_max = default_i_t_max(eta, cav)
    if not i_t_max > 0:
        raise ParameterError("i_t_max must be positive", "i_t_max")
    if eta.b > 0 and i_t_max >= max_output_intensity(eta, cav):
        raise RangeError(f"i_t_max={i_t_max:.6g} must stay below T/(2b) = "
                         f"{max_output_intensity(eta, cav):.6g}", "i_t_max")
    if n_samples < 3:
        raise ParameterError("n_samples must be >= 3", "n_samples")
    i_t = np.linspace(0.0, i_t_max, n_samples)
    trans = transmission(eta, cav, i_t)

    y0, y1, y2 = trans[:-2], trans[1:-1], trans[2:]
    k = np.flatnonzero((y1 > y0) & (y1 >= y2))
    curvature = y0[k] - 2.0 * y1[k] + y2[k]
    offset = np.where(curvature < 0, 0.5 * (y0[k] - y2[k]) / np.where(curvature < 0, curvature, 1.0), 0.0)
    h = i_t[1] - i_t[0]
    positions = i_t[k + 1] + offset * h
    heights = y1[k] - 0.25 * (y0[k] - y2[k]) * offset
    return TransmissionProfile(i_t, trans, positions, heights)
