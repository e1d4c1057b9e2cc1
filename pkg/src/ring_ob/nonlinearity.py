"""Complex Kerr coefficient of a Rydberg-EIT medium.

The coefficient ``eta = a + ib`` enters the dimensionless propagation
equation ``dE/dzeta = i eta |E|^2 E``. Two closed forms are provided (the
blockade-sphere form and the equivalent form in terms of ``c6``), together
with a quadrature of the van der Waals radial integral that serves as an
independent check on both.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from scipy import integrate

from .errors import QuadratureError
from .params import BlockadeDerived, MediumParams, derive_blockade

__all__ = [
    "NonlinearCoefficient",
    "Coherence",
    "eta_closed_form",
    "eta_appendix_form",
    "vdw_integral_numeric",
    "vdw_integral_closed_form",
    "rho21",
    "EIT_PROBE_RATIO",
]

# Largest |Omega_p|/|Omega_c| for which the low-intensity EIT treatment is trusted.
EIT_PROBE_RATIO = 0.2


@dataclass(frozen=True)
class NonlinearCoefficient:
    """``eta = a + ib``: ``a`` is nonlinear dispersion, ``b`` nonlinear absorption."""

    a: float
    b: float

    @classmethod
    def from_complex(cls, value: complex) -> "NonlinearCoefficient":
        return cls(float(value.real), float(value.imag))

    @property
    def value(self) -> complex:
        return complex(self.a, self.b)

    @property
    def magnitude(self) -> float:
        return math.hypot(self.a, self.b)

    @property
    def theta(self) -> float:
        """Polar angle in (-pi, pi]."""
        return math.atan2(self.b, self.a)

    def scaled(self, factor: float) -> "NonlinearCoefficient":
        return NonlinearCoefficient(self.a * factor, self.b * factor)


@dataclass(frozen=True)
class Coherence:
    """Steady-state probe coherence split into its linear and nonlinear parts.

    ``eit_warning`` is set when the probe exceeds the EIT validity window;
    the values are still returned.
    """

    linear: complex
    nonlinear: complex
    eit_warning: str | None = None

    @property
    def total(self) -> complex:
        return self.linear + self.nonlinear

    @property
    def eit_valid(self) -> bool:
        return self.eit_warning is None


def _detuning_factor(p: MediumParams) -> complex:
    # principal branch; Re(1 - 2i delta_p/gamma2) = 1 keeps us off the cut
    return 1.0 / cmath.sqrt(complex(1.0, -2.0 * p.delta_p / p.gamma2))


def eta_closed_form(p: MediumParams, d: BlockadeDerived | None = None) -> NonlinearCoefficient:
    """Kerr coefficient from the blockade radius and atoms per blockade sphere."""
    if d is None:
        d = derive_blockade(p)
    prefactor = (
        math.pi * p.alpha / (2.0 * math.sqrt(2.0))
        * (p.gamma2 / p.omega_c) ** 2
        * (4.0 / 3.0 * math.pi * d.r_c**3 * p.density)
    )
    return NonlinearCoefficient.from_complex(prefactor * complex(-1.0, 1.0) * _detuning_factor(p))


def eta_appendix_form(p: MediumParams) -> NonlinearCoefficient:
    """Kerr coefficient written directly in terms of ``c6`` and ``density``.

    Algebraically identical to :func:`eta_closed_form` once
    ``c6 / r_c**6 = 2 omega_c**2 / gamma2`` is used.
    """
    prefactor = (
        math.pi**2 * p.alpha / 3.0
        * p.density
        * (p.gamma2 / p.omega_c) ** 3
        * math.sqrt(p.c6 / p.gamma2)
    )
    return NonlinearCoefficient.from_complex(prefactor * complex(-1.0, 1.0) * _detuning_factor(p))


def _omega_sq(p: MediumParams, omega_sq: complex | None) -> complex:
    return complex(p.omega_c**2) if omega_sq is None else complex(omega_sq)


def vdw_integral_closed_form(p: MediumParams, omega_sq: complex | None = None) -> complex:
    """``pi^2 c6 |c6|^(-1/2) (1 - i) / (3 sqrt(Gamma) Omega)``, principal roots."""
    omega = cmath.sqrt(_omega_sq(p, omega_sq))
    return math.pi**2 * p.c6 / math.sqrt(abs(p.c6)) * complex(1.0, -1.0) / (
        3.0 * cmath.sqrt(p.gamma) * omega
    )


def _quad_complex(f, lo, hi, epsrel):
    re, re_err = integrate.quad(lambda t: f(t).real, lo, hi, epsabs=0.0, epsrel=epsrel, limit=200)
    im, im_err = integrate.quad(lambda t: f(t).imag, lo, hi, epsabs=0.0, epsrel=epsrel, limit=200)
    return complex(re, im), math.hypot(re_err, im_err)


def vdw_integral_numeric(
    p: MediumParams, omega_sq: complex | None = None, rtol: float = 1e-9
) -> complex:
    """``4 pi int_0^inf R^2 c6 / (Omega^2 R^6 + 2i Gamma c6) dR`` by adaptive quadrature.

    With ``u = R**3`` the integrand becomes ``(1/3) c6 / (Omega^2 u^2 + 2i Gamma c6)``.
    ``u`` is rescaled by ``sqrt(|2 Gamma c6| / |Omega^2|)`` so the integrand is
    O(1), and the tail ``[1, inf)`` is folded onto ``(0, 1]`` by ``u -> 1/u``.
    ``omega_sq`` defaults to ``omega_c**2``.
    """
    w2 = _omega_sq(p, omega_sq)
    b_coef = 2j * p.gamma * p.c6
    scale = math.sqrt(abs(b_coef) / abs(w2))
    a_unit = w2 / abs(w2)
    b_unit = b_coef / abs(b_coef)

    def integrand(t):
        t2 = t * t
        return 1.0 / (a_unit * t2 + b_unit) + 1.0 / (a_unit + b_unit * t2)

    value, err = _quad_complex(integrand, 0.0, 1.0, epsrel=rtol * 1e-2)
    if not math.isfinite(err) or err > rtol * abs(value):
        raise QuadratureError("vdW radial integral did not converge", err)
    # (4 pi / 3) * c6 * scale / |b_coef| undoes the substitutions
    return 4.0 * math.pi / 3.0 * p.c6 * scale / abs(b_coef) * value


def rho21(p: MediumParams, omega_p: complex, include_linear: bool = False) -> Coherence:
    """Steady-state coherence for a locally uniform probe ``omega_p`` (units of gamma2).

    Uses the unsimplified ``Omega^2 = |omega_c|^2 + 2 Gamma gamma13``. In the
    dimensionless convention ``E = omega_p / gamma2`` the nonlinear part obeys
    ``(alpha / 2) * nonlinear == eta * |E|^2 * E``, i.e. the propagation
    equation reads ``dE/dzeta = i (alpha/2) rho21``.
    """
    omega_p = complex(omega_p)
    warning = None
    if abs(omega_p) > EIT_PROBE_RATIO * p.omega_c:
        warning = (
            f"|omega_p| = {abs(omega_p):.4g} exceeds {EIT_PROBE_RATIO} * omega_c = "
            f"{EIT_PROBE_RATIO * p.omega_c:.4g}; EIT approximation not guaranteed"
        )
    if omega_p == 0:
        return Coherence(0j, 0j, warning)

    w2 = p.omega_c**2 + 2.0 * p.gamma * p.gamma13
    linear = 2j * p.gamma13 / w2 * omega_p if include_linear else 0j
    radial = 2.0 * abs(omega_p) ** 2 * vdw_integral_numeric(p, w2)
    nonlinear = -omega_p * p.omega_c**4 / (w2 * abs(w2) ** 2) * p.density * radial
    return Coherence(linear, nonlinear, warning)
