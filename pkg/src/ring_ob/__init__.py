"""Optical bistability of a Rydberg-EIT medium in a unidirectional ring cavity."""

from .bistability import (
    HysteresisTrace,
    Jump,
    SteadyStateCurve,
    TransmissionProfile,
    TurningPoint,
    default_i_t_max,
    default_x_max,
    hysteresis,
    scaling_collapse,
    trace_curve,
    transmission_profile,
)
from .cavity import CavityConfig, consistency_check, io_from_intracavity, transmission
from .errors import ParameterError, QuadratureError, RangeError
from .nonlinearity import (
    Coherence,
    NonlinearCoefficient,
    eta_appendix_form,
    eta_closed_form,
    rho21,
    vdw_integral_closed_form,
    vdw_integral_numeric,
)
from .params import BlockadeDerived, MediumParams, derive_blockade
from .propagation import PropagationResult, propagate_analytic, propagate_numeric

__version__ = "0.1.0"
