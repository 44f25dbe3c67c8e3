"""Scattering Green-tensor building blocks for a planar slab.

Provides the imaginary-axis reflection coefficients and thickness-corrected
scattering coefficients, the two curl-curl kernel integrals that drive
ground-state level shifts and forces, and the real-axis curl-curl tensor
whose imaginary part drives spontaneous spin-flip rates.

Only the scattering (slab-induced) part of the Green tensor is ever
computed; the free-space contribution is handled analytically elsewhere, so
a vacuum slab yields identically zero.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .materials import (
    MaterialModel,
    PerfectConductor,
    Vacuum,
    epsilon_imag_axis,
    epsilon_real_axis,
)
from .quadrature import NonConvergenceError, QuadratureSpec, integrate_adaptive
from .units import CONSTANTS

__all__ = [
    "SlabGeometry",
    "KernelPair",
    "fresnel_imag",
    "scatter_coeffs",
    "kernel_batch_imag_axis",
    "kernels_imag_axis",
    "curl_green_real",
]


@dataclass(frozen=True)
class SlabGeometry:
    """Atom at distance z above a slab of thickness h (vacuum both sides)."""

    z: float
    h: float = math.inf

    def __post_init__(self) -> None:
        if not self.z > 0.0:
            raise ValueError("z must be > 0")
        if not self.h > 0.0:
            raise ValueError("h must be > 0 (math.inf for a half-space)")


@dataclass(frozen=True)
class KernelPair:
    """The two curl-curl kernel integrals at one imaginary frequency.

    ``parallel`` and ``perp`` carry units of m^-3 and are <= 0 for any
    passive slab; ``reduced_parallel`` and ``reduced_perp`` are the same
    quantities scaled by (2z)^3.
    """

    parallel: float
    perp: float
    reduced_parallel: float
    reduced_perp: float


def fresnel_imag(lam, omega: float, eps):
    """Reflection coefficients (r_s, r_p) on the imaginary frequency axis.

    ``lam`` is the transverse wavenumber (scalar or array, >= 0); ``eps``
    is epsilon(i omega) >= 1.  Both coefficients are computed in forms with
    the (eps - 1) factor extracted, so they vanish smoothly as eps -> 1
    instead of cancelling catastrophically.
    """
    if not omega > 0.0:
        raise ValueError("omega must be > 0")
    lam = np.asarray(lam, dtype=float)
    eps = np.asarray(eps, dtype=float)
    if np.any(lam < 0.0):
        raise ValueError("lambda must be >= 0")
    if np.any(eps < 1.0):
        raise ValueError("eps must be >= 1 on the imaginary axis")
    k = omega / CONSTANTS.c
    eta0_sq = lam * lam + k * k
    eta0 = np.sqrt(eta0_sq)
    eta = np.sqrt(lam * lam + eps * k * k)
    r_s = -(k * k) * (eps - 1.0) / (eta0 + eta) ** 2
    r_p = (eps - 1.0) * ((eps + 1.0) * eta0_sq - k * k) / (eps * eta0 + eta) ** 2
    if r_s.ndim == 0:
        return float(r_s), float(r_p)
    return r_s, r_p


def _thickness_factor(r, decay):
    """C = r (1 - E) / (1 - r^2 E) for E = exp(-decay); decay may be inf."""
    E = np.exp(-np.minimum(decay, 745.0))
    E = np.where(np.isinf(decay), 0.0, E)
    return r * (1.0 - E) / (1.0 - r * r * E)


def scatter_coeffs(lam, omega: float, eps, h: float):
    """Thickness-corrected scattering coefficients (C_N, C_M).

    C_N derives from r_p and C_M from r_s; an infinite h returns the bare
    half-space reflection coefficients exactly, and h -> 0 removes the slab.
    An infinite eps (ideal mirror) gives exactly (1, -1) for any h.
    """
    if not (h > 0.0):
        raise ValueError("h must be > 0 (math.inf for a half-space)")
    if np.all(np.isinf(np.asarray(eps, dtype=float))):
        one = np.ones(np.shape(lam))
        if one.ndim == 0:
            return 1.0, -1.0
        return one, -one
    r_s, r_p = fresnel_imag(lam, omega, eps)
    lam = np.asarray(lam, dtype=float)
    eps = np.asarray(eps, dtype=float)
    k = omega / CONSTANTS.c
    if math.isinf(h):
        decay = np.full(np.broadcast(lam, eps).shape, math.inf)
    else:
        eta = np.sqrt(lam * lam + eps * k * k)
        decay = 2.0 * eta * h
    c_n = _thickness_factor(np.asarray(r_p), decay)
    c_m = _thickness_factor(np.asarray(r_s), decay)
    if c_n.ndim == 0:
        return float(c_n), float(c_m)
    return c_n, c_m


def _reduced_scatter(H0, xi, eps, h_over_z: float):
    """(C_N, C_M) as functions of the reduced axial variable H0 = eta0*z.

    Same algebra as :func:`scatter_coeffs` with all lengths scaled by z:
    xi = omega*z/c and eta*z = sqrt(H0^2 + (eps-1)*xi^2).  Written in terms
    of 1/eps so the expressions stay finite and smooth from eps = 1 all the
    way to the mirror limit eps -> infinity.
    """
    inv = 1.0 / eps
    one_m = 1.0 - inv
    # A = eta*z/sqrt(eps); finite for any eps >= 1.
    A = np.sqrt(inv * H0 * H0 + one_m * xi * xi)
    sqi = np.sqrt(inv)
    r_s = -(xi * xi) * one_m / (A + sqi * H0) ** 2
    r_p = one_m * ((1.0 + inv) * H0 * H0 - inv * xi * xi) / (H0 + sqi * A) ** 2
    if math.isinf(h_over_z):
        return r_p, r_s
    decay = 2.0 * (A / sqi) * h_over_z
    return _thickness_factor(r_p, decay), _thickness_factor(r_s, decay)


def kernel_batch_imag_axis(omega, geom: SlabGeometry, model: MaterialModel,
                           quad: QuadratureSpec | None = None,
                           gradient: bool = False,
                           coupling: str = "magnetic") -> np.ndarray:
    """Reduced kernel integrals for a batch of imaginary-axis frequencies.

    Returns an (n, 2) array of [parallel, perp] values, one row per entry
    of ``omega``.  With ``gradient=False`` these are the level kernels
    z^3*(-I_par), z^3*(-I_perp); with ``gradient=True`` they are the
    distance-derivative (force) kernels, normalized so the mirror limit
    integrates to 8 over the reduced frequency.  ``coupling="electric"``
    exchanges the roles of C_N and C_M, which flips the overall sign for
    good conductors.

    All rows share one radial quadrature so frequency sweeps refine a
    common panel set; the shared exponential scale exp(-2u) makes that
    safe across the whole batch.
    """
    if coupling not in ("magnetic", "electric"):
        raise ValueError(f"unknown coupling {coupling!r}")
    quad = quad or QuadratureSpec()
    omega = np.atleast_1d(np.asarray(omega, dtype=float))
    if np.any(omega <= 0.0):
        raise ValueError("omega must be > 0")
    n = omega.size
    if isinstance(model, Vacuum):
        return np.zeros((n, 2))

    z = geom.z
    xi = omega * z / CONSTANTS.c
    scale = np.where(xi < 372.0, np.exp(-2.0 * np.minimum(xi, 372.0)), 0.0)
    active = scale > 0.0
    out = np.zeros((n, 2))
    if not np.any(active):
        return out
    xi_a = xi[active]
    pc = isinstance(model, PerfectConductor)
    eps_a = None if pc else np.atleast_1d(epsilon_imag_axis(model, omega[active]))
    h_over_z = geom.h / z
    swap = coupling == "electric"

    def integrand(u):
        uu = u[:, None]
        H0 = uu + xi_a[None, :]
        if pc:
            c_n = np.ones_like(H0)
            c_m = -c_n
        else:
            c_n, c_m = _reduced_scatter(H0, xi_a[None, :], eps_a[None, :],
                                        h_over_z)
        if swap:
            c_n, c_m = c_m, c_n
        damp = np.exp(-2.0 * uu)
        par = 0.5 * damp * (xi_a[None, :] ** 2 * c_n - H0 * H0 * c_m)
        perp = uu * (uu + 2.0 * xi_a[None, :]) * damp * (-c_m)
        if gradient:
            par = 16.0 * H0 * par
            perp = 16.0 * H0 * perp
        return np.concatenate([par, perp], axis=1)

    res = integrate_adaptive(integrand, 0.0, math.inf, quad)
    if not res.converged:
        raise NonConvergenceError(
            "kernel integral did not converge "
            f"(error estimate {np.max(res.error_estimate):.3e})")
    vals = np.asarray(res.value).reshape(2, -1)
    out[active, 0] = scale[active] * vals[0]
    out[active, 1] = scale[active] * vals[1]
    return out


def kernels_imag_axis(omega: float, geom: SlabGeometry, model: MaterialModel,
                      quad: QuadratureSpec | None = None) -> KernelPair:
    """Curl-curl kernel integrals I_par(omega), I_perp(omega), imaginary axis.

    Both are semi-infinite integrals over the transverse wavenumber,
    computed in the reduced variable u = eta0*z - xi so the exponential
    scale is O(1) for every combination of omega and z.  The perfect
    conductor uses the exact scattering constants (C_N, C_M) = (1, -1); a
    vacuum slab returns exact zeros.
    """
    if not omega > 0.0:
        raise ValueError("omega must be > 0")
    j_par, j_perp = kernel_batch_imag_axis([omega], geom, model, quad)[0]
    z = geom.z
    z3 = z * z * z
    return KernelPair(
        parallel=-j_par / z3,
        perp=-j_perp / z3,
        reduced_parallel=-8.0 * j_par,
        reduced_perp=-8.0 * j_perp,
    )


def _fresnel_complex(eta0, k: float, eps: complex):
    """Reflection coefficients off the real axis for complex eta0, eps.

    Uses the same (eps - 1)-extracted forms as the imaginary-axis path;
    valid wherever eta = sqrt(k^2 eps - lam^2) is taken with Im eta >= 0
    and lam^2 = k^2 - eta0^2.
    """
    em1 = eps - 1.0
    eta = np.sqrt(k * k * em1 + eta0 * eta0 + 0.0j)
    r_s = -(k * k) * em1 / (eta0 + eta) ** 2
    r_p = em1 * ((eps + 1.0) * eta0 * eta0 - k * k) / (eps * eta0 + eta) ** 2
    return r_s, r_p, eta


def _scatter_complex(eta0, k: float, eps: complex, h: float):
    r_s, r_p, eta = _fresnel_complex(eta0, k, eps)
    if math.isinf(h):
        return r_p, r_s
    E = np.exp(2.0j * eta * h)
    return (r_p * (1.0 - E) / (1.0 - r_p * r_p * E),
            r_s * (1.0 - E) / (1.0 - r_s * r_s * E))


def curl_green_real(omega: float, geom: SlabGeometry, eps_real,
                    quad: QuadratureSpec | None = None) -> tuple[complex, complex]:
    """Diagonal curl-curl scattering tensor (g_par, g_perp) at real omega.

    ``eps_real`` may be the complex dielectric value at omega, or a material
    model (resolved internally; the perfect conductor uses its exact
    scattering constants).  The transverse-wavenumber integral is split at
    lam = k: the propagating range is integrated in eta0 with subdivisions
    at half-periods of the phase 2*eta0*z, the evanescent range in the
    decay constant kappa with an exponential tail bound.  The imaginary
    parts feed spin-flip rates; the real parts feed resonant shifts.
    """
    if not omega > 0.0:
        raise ValueError("omega must be > 0")
    quad = quad or QuadratureSpec()
    pc = False
    if isinstance(eps_real, PerfectConductor):
        pc = True
        eps = None
    elif isinstance(eps_real, Vacuum):
        return 0.0 + 0.0j, 0.0 + 0.0j
    elif isinstance(eps_real, (int, float, complex)):
        eps = complex(eps_real)
    else:
        eps = epsilon_real_axis(eps_real, omega)
    if not pc:
        if eps == 1.0:
            return 0.0 + 0.0j, 0.0 + 0.0j
        if eps.imag < 0.0:
            raise ValueError("Im eps must be >= 0 (passive medium)")
        if eps.imag == 0.0 and eps.real < -1.0:
            raise ValueError(
                "lossless eps < -1 puts a surface-mode pole on the "
                "integration path; add dissipation to the model")

    k = omega / CONSTANTS.c
    z, h = geom.z, geom.h

    def coeffs(eta0):
        if pc:
            one = np.ones_like(np.asarray(eta0, dtype=complex))
            return one, -one
        return _scatter_complex(eta0, k, eps, h)

    def as_quad(g_par, g_perp):
        return np.stack([g_par.real, g_par.imag, g_perp.real, g_perp.imag],
                        axis=-1)

    # Propagating range: eta0 in [0, k], oscillatory phase exp(2i eta0 z).
    def prop(eta0):
        c_n, c_m = coeffs(eta0 + 0.0j)
        phase = np.exp(2.0j * eta0 * z)
        g_par = (1.0j / (8.0 * math.pi)) * phase * (
            k * k * c_n - eta0 * eta0 * c_m)
        g_perp = (1.0j / (4.0 * math.pi)) * (k * k - eta0 * eta0) * phase * c_m
        return as_quad(g_par, g_perp)

    half_period = math.pi / (2.0 * z)
    breaks = [j * half_period for j in range(1, int(k / half_period) + 1)
              if j * half_period < k]
    res_p = integrate_adaptive(prop, 0.0, k, quad, breakpoints=breaks or None)

    # Evanescent range: eta0 = i kappa, kappa in [0, inf).
    def evan(kappa):
        c_n, c_m = coeffs(1.0j * kappa)
        damp = np.exp(-2.0 * kappa * z)
        g_par = damp * (k * k * c_n + kappa * kappa * c_m) / (8.0 * math.pi)
        g_perp = damp * (k * k + kappa * kappa) * c_m / (4.0 * math.pi)
        return as_quad(g_par, g_perp)

    res_e = integrate_adaptive(evan, 0.0, math.inf, quad)

    if not (res_p.converged and res_e.converged):
        parts = []
        if not res_p.converged:
            parts.append(
                f"oscillatory part error {np.max(res_p.error_estimate):.3e}")
        if not res_e.converged:
            parts.append(
                f"evanescent part error {np.max(res_e.error_estimate):.3e}")
        raise NonConvergenceError(
            "curl-curl tensor integral did not converge: " + "; ".join(parts))

    v = res_p.value + res_e.value
    return complex(v[0], v[1]), complex(v[2], v[3])
