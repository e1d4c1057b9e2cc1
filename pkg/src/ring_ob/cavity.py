"""Unidirectional ring-cavity boundary conditions and transmission.

Input and output intensities are parametrized by the intracavity intensity
``x = |E(0)|^2`` at the medium entrance. The closed-form transmission is
expressed in terms of the output intensity alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError, RangeError
from .nonlinearity import NonlinearCoefficient
from .propagation import log1p_ratio, propagate_analytic

__all__ = [
    "CavityConfig",
    "io_from_intracavity",
    "input_slope",
    "transmission",
    "max_output_intensity",
    "consistency_check",
]


@dataclass(frozen=True)
class CavityConfig:
    """Mirror transmission ``t_mirror`` and cavity detuning (radians)."""

    t_mirror: float
    cavity_detuning: float = 0.0

    def __post_init__(self):
        if not (0.0 < self.t_mirror < 1.0):
            raise ParameterError(f"t_mirror must lie in (0, 1), got {self.t_mirror!r}", "t_mirror")
        if not math.isfinite(self.cavity_detuning):
            raise ParameterError("cavity_detuning must be finite", "cavity_detuning")

    @property
    def r_mirror(self) -> float:
        return 1.0 - self.t_mirror


def io_from_intracavity(eta: NonlinearCoefficient, cav: CavityConfig, x):
    """Input and output intensities ``(I_i, I_t)`` for intracavity intensity ``x``.

    ``E(0)`` is taken real positive; any other global phase gives the same
    intensities.
    """
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise ParameterError("intracavity intensity must be >= 0", "x")
    res = propagate_analytic(eta, np.sqrt(x))
    round_trip = cav.r_mirror * np.exp(
        -1j * cav.cavity_detuning - res.damping / 2.0 + 1j * res.phase_shift
    )
    i_out = cav.t_mirror * x * np.exp(-res.damping)
    i_in = x / cav.t_mirror * np.abs(1.0 - round_trip) ** 2
    if i_in.ndim == 0:
        return float(i_in), float(i_out)
    return i_in, i_out


def input_slope(eta: NonlinearCoefficient, cav: CavityConfig, x):
    """Analytic ``dI_i/dx``.

    With ``w(x) = (1 + 2bx)^(i eta / 2b)`` the round-trip factor is
    ``g = 1 - R e^{-i delta} w`` and ``dw/dx = i eta w / (1 + 2bx)``.
    """
    x = np.asarray(x, dtype=float)
    res = propagate_analytic(eta, np.sqrt(x))
    w = np.exp(-res.damping / 2.0 + 1j * res.phase_shift)
    feedback = cav.r_mirror * np.exp(-1j * cav.cavity_detuning)
    g = 1.0 - feedback * w
    dg = -feedback * w * 1j * eta.value / (1.0 + 2.0 * eta.b * x)
    slope = (np.abs(g) ** 2 + 2.0 * x * np.real(np.conj(g) * dg)) / cav.t_mirror
    return float(slope) if slope.ndim == 0 else slope


def max_output_intensity(eta: NonlinearCoefficient, cav: CavityConfig) -> float:
    """Supremum ``T / 2b`` of reachable output intensities (inf when ``b = 0``)."""
    return math.inf if eta.b == 0 else cav.t_mirror / (2.0 * eta.b)


def transmission(eta: NonlinearCoefficient, cav: CavityConfig, i_t):
    """Field transmission ``I_t / I_i`` as a function of output intensity.

    The damping is reconstructed from ``i_t`` as ``-ln(1 - 2b i_t / T)``, so
    ``e^{-damping} = 1 - 2b i_t / T`` exactly. ``b = 0`` gives the linear
    Airy response with phase ``a i_t / T``.
    """
    if eta.b < 0:
        raise ParameterError(f"Im(eta) must be >= 0, got {eta.b!r}", "eta")
    i_t = np.asarray(i_t, dtype=float)
    if np.any(i_t < 0):
        raise RangeError("output intensity must be >= 0", "i_t")
    t, r = cav.t_mirror, cav.r_mirror
    z = 2.0 * eta.b * i_t / t
    if np.any(z >= 1.0):
        raise RangeError(
            f"output intensity must stay below T/(2b) = {max_output_intensity(eta, cav):.6g}",
            "i_t",
        )
    decay = 1.0 - z
    half = np.sqrt(decay)
    # phase = -(a/2b) ln(1 - z), continuous through b = 0
    phase = eta.a * i_t / t * log1p_ratio(-z)
    denom = (1.0 - r * half) ** 2 + 4.0 * r * half * np.sin((cav.cavity_detuning - phase) / 2.0) ** 2
    result = t**2 * decay / denom
    return float(result) if result.ndim == 0 else result


def consistency_check(eta: NonlinearCoefficient, cav: CavityConfig, x):
    """``|I_t - T(I_t) I_i|`` between the boundary-condition and closed-form routes."""
    i_in, i_out = io_from_intracavity(eta, cav, x)
    residual = np.abs(i_out - transmission(eta, cav, i_out) * i_in)
    return float(residual) if np.ndim(residual) == 0 else residual
