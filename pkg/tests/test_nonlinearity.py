import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ring_ob import (
    MediumParams,
    NonlinearCoefficient,
    derive_blockade,
    eta_appendix_form,
    eta_closed_form,
    rho21,
    vdw_integral_closed_form,
    vdw_integral_numeric,
)

from conftest import figure_medium


def medium_at(delta_p=0.0, omega_c=3.0, c6=2e4, density=0.24, alpha=70.0, **kw):
    return MediumParams(omega_c=omega_c, c6=c6, density=density, alpha=alpha,
                        delta_p=delta_p, **kw)


def test_resonant_phase_is_three_quarter_pi():
    eta = eta_closed_form(medium_at(0.0))
    assert eta.theta == pytest.approx(3 * math.pi / 4, abs=1e-15)
    assert eta.a == pytest.approx(-eta.magnitude / math.sqrt(2), rel=1e-14)
    assert eta.b == pytest.approx(eta.magnitude / math.sqrt(2), rel=1e-14)


def test_eta_scales_as_inverse_cube_of_coupling():
    p = medium_at(5.0, omega_c=2.5)
    ratio = eta_closed_form(p).value / eta_closed_form(p.evolve(omega_c=5.0)).value
    assert abs(ratio - 8.0) < 1e-12 * 8.0


def test_eta_figure_value_against_hand_formula():
    # |eta| = (pi^2 alpha / 3) n omega_c^-3 sqrt(c6) sqrt(2) (1 + 4 dp^2)^(-1/4)
    eta = eta_closed_form(figure_medium())
    mag = (math.pi**2 * 70 / 3) * 0.24 / 27 * math.sqrt(2e4) * math.sqrt(2) * 101**-0.25
    theta = 3 * math.pi / 4 + math.atan(10.0) / 2
    assert eta.magnitude == pytest.approx(mag, rel=1e-13)
    assert eta.a == pytest.approx(mag * math.cos(theta), rel=1e-13)
    assert eta.b == pytest.approx(mag * math.sin(theta), rel=1e-12)


def test_eta_matches_quadrature_route():
    # eta |E|^2 E = (alpha / 2) * nonlinear coherence, with the radial integral done numerically
    p = figure_medium()
    e_p = 0.2 * p.omega_c
    coh = rho21(p, e_p)
    via_quadrature = p.alpha / 2 * coh.nonlinear / (abs(e_p) ** 2 * e_p)
    closed = eta_closed_form(p).value
    assert abs(via_quadrature - closed) < 1e-6 * abs(closed)


@given(st.floats(-20, 20), st.floats(0.5, 8), st.floats(1.0, 1e6), st.floats(1e-3, 10),
       st.floats(1, 300))
def test_appendix_form_equals_blockade_form(dp, oc, c6, n, alpha):
    p = medium_at(dp, omega_c=oc, c6=c6, density=n, alpha=alpha)
    a = eta_appendix_form(p).value
    b = eta_closed_form(p, derive_blockade(p)).value
    assert abs(a - b) <= 1e-12 * abs(b)


def test_appendix_form_unit_normalization():
    # prefactor pi^2 alpha n sqrt(c6) / (3 omega_c^3) = 1
    p = medium_at(0.0, omega_c=1.0, c6=1.0, density=3.0 / math.pi**2, alpha=1.0)
    eta = eta_appendix_form(p)
    assert eta.a == pytest.approx(-1.0, rel=1e-15)
    assert eta.b == pytest.approx(1.0, rel=1e-15)


def test_appendix_form_coupling_ratio():
    p = medium_at(1.3, omega_c=2.0)
    ratio = eta_appendix_form(p).magnitude / eta_appendix_form(p.evolve(omega_c=4.0)).magnitude
    assert ratio == pytest.approx(8.0, rel=1e-12)


@pytest.mark.parametrize("dp", [-5, -2, -1, 0, 1, 2, 5])
@pytest.mark.parametrize("c6", [1.0, 10.0, 1e2, 1e3, 1e4])
def test_vdw_quadrature_matches_closed_form(dp, c6):
    p = medium_at(dp, c6=c6)
    numeric = vdw_integral_numeric(p)
    # closed form written out independently of the library helper
    gamma = complex(1.0, -2.0 * dp)
    expected = math.pi**2 * math.sqrt(c6) * (1 - 1j) / (3 * cmath.sqrt(gamma) * 3.0)
    assert abs(numeric - expected) < 1e-6 * abs(expected)
    assert vdw_integral_closed_form(p) == pytest.approx(expected, rel=1e-14)


def test_vdw_quadrature_against_brute_force_radial_sum():
    # direct trapezoid in R on a fine log grid, no substitution
    p = medium_at(1.5, c6=300.0)
    r = np.logspace(-4, 4, 400001)
    integrand = r**2 * p.c6 / (p.omega_c**2 * r**6 + 2j * p.gamma * p.c6)
    brute = 4 * np.pi * np.trapezoid(integrand, r)
    assert abs(vdw_integral_numeric(p) - brute) < 1e-6 * abs(brute)


def test_vdw_scales_with_root_c6():
    p = medium_at(2.0, c6=10.0)
    ratio = vdw_integral_numeric(p.evolve(c6=640.0)) / vdw_integral_numeric(p)
    assert abs(ratio - 8.0) < 1e-8


def test_vdw_resonant_phase():
    val = vdw_integral_numeric(medium_at(0.0, c6=55.0))
    assert cmath.phase(val) == pytest.approx(-math.pi / 4, abs=1e-9)


def test_vdw_complex_omega_squared():
    p = medium_at(1.0, gamma13=0.3)
    w2 = p.omega_c**2 + 2 * p.gamma * p.gamma13
    assert vdw_integral_numeric(p, w2) == pytest.approx(vdw_integral_closed_form(p, w2), rel=1e-8)


def test_phase_law_branch_and_limits():
    dps = np.linspace(-10, 10, 401)
    thetas = np.array([eta_closed_form(medium_at(d)).theta for d in dps])
    assert np.all(np.diff(thetas) > 0)
    assert np.all((thetas > math.pi / 2) & (thetas < math.pi))
    assert eta_closed_form(medium_at(-1e3)).theta == pytest.approx(math.pi / 2, abs=1e-3)
    assert eta_closed_form(medium_at(1e3)).theta == pytest.approx(math.pi, abs=1e-3)


def test_density_scaling_is_quadratic():
    p = medium_at(3.0)
    for eps in (0.25, 0.5, 0.75, 2.0):
        scaled = eta_closed_form(p.evolve(density=eps * p.density, alpha=eps * p.alpha)).value
        assert abs(scaled - eps**2 * eta_closed_form(p).value) < 1e-13 * abs(scaled)


@pytest.mark.parametrize("dp", [-7.0, -1.0, 0.3, 4.0, 9.0])
def test_magnitude_detuning_factor(dp):
    ratio = eta_closed_form(medium_at(dp)).magnitude / eta_closed_form(medium_at(0.0)).magnitude
    assert ratio == pytest.approx((1 + 4 * dp**2) ** -0.25, rel=1e-12)


def test_coefficient_polar_fields():
    eta = NonlinearCoefficient(-3.0, 4.0)
    assert eta.magnitude == 5.0
    assert eta.magnitude**2 == pytest.approx(eta.a**2 + eta.b**2, rel=1e-12)
    assert eta.value == complex(-3, 4)
    assert NonlinearCoefficient.from_complex(eta.value) == eta


def test_rho21_zero_probe():
    coh = rho21(medium_at(1.0, gamma13=0.1), 0.0, include_linear=True)
    assert coh.linear == 0 and coh.nonlinear == 0


def test_rho21_linear_part_needs_dephasing():
    assert rho21(medium_at(1.0), 0.3, include_linear=True).linear == 0
    coh = rho21(medium_at(1.0, gamma13=0.1), 0.3, include_linear=True)
    assert coh.linear != 0
    assert rho21(medium_at(1.0, gamma13=0.1), 0.3).linear == 0


def test_rho21_linear_part_is_absorptive():
    p = medium_at(0.0, gamma13=0.05)
    coh = rho21(p, 0.1, include_linear=True)
    # dE/dzeta = i (alpha/2) rho21: the linear term must attenuate
    assert (1j * coh.linear).real < 0


def test_rho21_warns_outside_eit_window():
    p = medium_at(1.0)
    assert rho21(p, 0.2 * p.omega_c).eit_valid
    coh = rho21(p, 0.3 * p.omega_c)
    assert not coh.eit_valid and "EIT" in coh.eit_warning
    assert coh.nonlinear != 0


@settings(max_examples=30)
@given(st.floats(-8, 8), st.floats(1e-3, 0.6))
def test_rho21_nonlinear_is_cubic_kerr(dp, e_abs):
    p = medium_at(dp)
    coh = rho21(p, e_abs * cmath.exp(0.4j))
    e = e_abs * cmath.exp(0.4j)
    expected = eta_closed_form(p).value * abs(e) ** 2 * e
    assert abs(p.alpha / 2 * coh.nonlinear - expected) < 1e-6 * abs(expected)
