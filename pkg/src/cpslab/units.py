"""Physical constants, unit conversions, and dimensionless-variable conventions.

All internal physics in this package is computed in dimensionless variables;
SI units enter only at the interfaces.  This module holds the CODATA constants
used for those boundary conversions, the record type for the reduced variables,
and the dimensional force prefactors that convert the dimensionless force
kernels back to newtons.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field


@dataclass(frozen=True)
class PhysicalConstants:
    """CODATA-2018 SI constants used at the unit boundaries.

    ``eps0`` is derived from ``mu0`` and ``c`` so that eps0*mu0*c**2 == 1
    holds to machine precision.
    """

    hbar: float = 1.054571817e-34       # J s
    c: float = 299792458.0              # m / s
    mu0: float = 1.25663706212e-6       # N / A^2
    muB: float = 9.2740100783e-24       # J / T
    g_S: float = 2.002319               # electron spin g-factor
    kB: float = 1.380649e-23            # J / K
    eV: float = 1.602176634e-19         # J
    m_e: float = 9.1093837015e-31       # kg
    eps0: float = field(init=False)     # F / m, derived

    def __post_init__(self) -> None:
        object.__setattr__(self, "eps0", 1.0 / (self.mu0 * self.c**2))
        for name in ("hbar", "c", "mu0", "muB", "g_S", "kB", "eV", "m_e", "eps0"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"constant {name} must be strictly positive")

    @property
    def compton_wavelength(self) -> float:
        """Reduced electron Compton wavelength hbar/(m_e c) in metres."""
        return self.hbar / (self.m_e * self.c)


#: Module-level singleton; every other module imports this.
CONSTANTS = PhysicalConstants()


@dataclass(frozen=True)
class ReducedVariables:
    """Dimensionless variables of the reduced formulation.

    x
        k_A z, the atom-surface distance scaled by the transition wavenumber.
    alpha
        omega_p / omega_A, plasma frequency over transition frequency.
    nu_bar
        nu / omega_A, Drude relaxation rate over transition frequency.
    q
        Delta / (hbar omega), superconducting gap over photon energy
        (``None`` when not applicable).
    xi
        The scaled imaginary-axis integration variable (``None`` outside
        integrand contexts).
    """

    x: float
    alpha: float = 0.0
    nu_bar: float = 0.0
    q: float | None = None
    xi: float | None = None

    def __post_init__(self) -> None:
        if not self.x > 0.0:
            raise ValueError(f"x must be > 0, got {self.x}")
        if self.alpha < 0.0:
            raise ValueError(f"alpha must be >= 0, got {self.alpha}")
        if self.nu_bar < 0.0:
            raise ValueError(f"nu_bar must be >= 0, got {self.nu_bar}")
        if self.q is not None and not self.q > 0.0:
            raise ValueError(f"q must be > 0, got {self.q}")


def to_angular_frequency(value: float, kind: str = "ev") -> float:
    """Convert an energy in eV or a frequency in Hz to angular frequency.

    Parameters
    ----------
    value:
        Strictly positive energy (eV) or plain frequency (Hz).
    kind:
        ``"ev"`` for energies, ``"hz"`` for frequencies (case-insensitive).

    Returns
    -------
    float
        Angular frequency in rad/s: value*eV/hbar for energies,
        2*pi*value for frequencies.
    """
    if not value > 0.0:
        raise ValueError(f"value must be > 0, got {value}")
    tag = kind.lower()
    if tag in ("ev", "energy"):
        return value * CONSTANTS.eV / CONSTANTS.hbar
    if tag in ("hz", "frequency"):
        return 2.0 * math.pi * value
    raise ValueError(f"unknown kind {kind!r}; expected 'ev' or 'hz'")


def force_prefactor_magnetic(z: float) -> float:
    """Dimensional prefactor mu0*(muB*g_S)^2/(32 pi z^4) in newtons.

    The dimensional magnetic force is this prefactor times the dimensionless
    force kernel evaluated at x = k_A z.
    """
    if not z > 0.0:
        raise ValueError(f"z must be > 0, got {z}")
    moment = CONSTANTS.muB * CONSTANTS.g_S
    return CONSTANTS.mu0 * moment**2 / (32.0 * math.pi * z**4)


def force_prefactor_electric(d_moment: float, z: float) -> float:
    """Dimensional prefactor |d|^2/(32 pi eps0 z^4) in newtons.

    ``d_moment`` is the electric transition dipole magnitude in C m.  The
    dimensional electric force is this prefactor times the (negative)
    dimensionless electric force kernel.
    """
    if not z > 0.0:
        raise ValueError(f"z must be > 0, got {z}")
    if d_moment < 0.0:
        raise ValueError(f"d_moment must be >= 0, got {d_moment}")
    return d_moment**2 / (32.0 * math.pi * CONSTANTS.eps0 * z**4)
