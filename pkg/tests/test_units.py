"""Tests for physical constants, conversions, and force prefactors."""
import math

import pytest
from hypothesis import given, strategies as st

from cpslab.units import (
    CONSTANTS,
    PhysicalConstants,
    ReducedVariables,
    force_prefactor_electric,
    force_prefactor_magnetic,
    to_angular_frequency,
)


def test_constants_em_identity():
    c = CONSTANTS
    assert abs(c.eps0 * c.mu0 * c.c**2 - 1.0) < 1e-12


def test_constants_positive():
    c = CONSTANTS
    for name in ("hbar", "c", "mu0", "eps0", "muB", "g_S", "kB", "eV", "m_e"):
        assert getattr(c, name) > 0.0


def test_eps0_value():
    assert CONSTANTS.eps0 == pytest.approx(8.854187812800385e-12, rel=1e-12)


def test_compton_wavelength():
    lam = CONSTANTS.compton_wavelength
    assert lam == pytest.approx(3.8615926796e-13, rel=1e-6)


def test_to_angular_frequency_ev():
    assert to_angular_frequency(9.0, "ev") == pytest.approx(
        1.3673407039285595e16, rel=1e-12
    )


def test_to_angular_frequency_hz():
    assert to_angular_frequency(5.6e5, "hz") == pytest.approx(
        2.0 * math.pi * 5.6e5, rel=1e-15
    )


@pytest.mark.parametrize("bad", [0.0, -1.0, -1e-30])
def test_to_angular_frequency_domain(bad):
    with pytest.raises(ValueError):
        to_angular_frequency(bad, "ev")


def test_to_angular_frequency_kind_error():
    with pytest.raises(ValueError):
        to_angular_frequency(1.0, "kelvin")


@given(st.floats(min_value=1e-6, max_value=1e6),
       st.floats(min_value=1.0001, max_value=10.0))
def test_to_angular_frequency_monotone_linear(v, factor):
    for kind in ("ev", "hz"):
        w1 = to_angular_frequency(v, kind)
        w2 = to_angular_frequency(v * factor, kind)
        assert w2 > w1
        assert w2 == pytest.approx(factor * w1, rel=1e-12)


def test_force_prefactor_magnetic_regression():
    assert force_prefactor_magnetic(1e-6) == pytest.approx(
        4.3103414726852607e-30, rel=1e-12
    )


def test_force_prefactor_magnetic_doubling():
    assert force_prefactor_magnetic(2e-6) == pytest.approx(
        force_prefactor_magnetic(1e-6) / 16.0, rel=1e-12
    )


@given(st.floats(min_value=1e-9, max_value=1e-3))
def test_force_prefactor_scaling_invariant(z):
    assert force_prefactor_magnetic(z) * z**4 == pytest.approx(
        force_prefactor_magnetic(1.0), rel=1e-12
    )


@pytest.mark.parametrize("bad", [0.0, -1e-6])
def test_force_prefactor_magnetic_domain(bad):
    with pytest.raises(ValueError):
        force_prefactor_magnetic(bad)


def test_force_prefactor_electric_value():
    # |d|^2 / (32 pi eps0 z^4) with d = 1e-29 C m at z = 1 um
    d, z = 1e-29, 1e-6
    expect = d**2 / (32.0 * math.pi * CONSTANTS.eps0 * z**4)
    assert force_prefactor_electric(d, z) == pytest.approx(expect, rel=1e-14)


def test_reduced_variables_validation():
    ReducedVariables(x=1.0, alpha=0.0, nu_bar=0.0)
    ReducedVariables(x=0.5, alpha=2.0, nu_bar=0.1, q=3.0, xi=1.0)
    with pytest.raises(ValueError):
        ReducedVariables(x=0.0)
    with pytest.raises(ValueError):
        ReducedVariables(x=1.0, alpha=-1.0)
    with pytest.raises(ValueError):
        ReducedVariables(x=1.0, nu_bar=-0.5)
    with pytest.raises(ValueError):
        ReducedVariables(x=1.0, q=0.0)


def test_custom_constants_override():
    c = PhysicalConstants(g_S=2.0)
    assert c.g_S == 2.0
    assert abs(c.eps0 * c.mu0 * c.c**2 - 1.0) < 1e-12
