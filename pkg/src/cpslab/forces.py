"""Casimir-Polder forces on a ground-state atom near a slab.

The distance derivative of the level shift is taken analytically inside the
kernel integrands (never by numeric differencing), yielding dimensionless
rescaled forces F_M (magnetic coupling, repulsive) and F_E (electric
coupling, attractive), plus the dimensional force in newtons.

A free-electron-specific integral representation in the transverse
wavenumber is kept as an independent second code path and cross-checked
against the general dielectric path in the tests.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .materials import MaterialModel, PerfectConductor, Vacuum
from .quadrature import NonConvergenceError, QuadratureSpec, integrate_adaptive, modular_split
from .shifts import Transition, TransitionSet
from .slabgreen import SlabGeometry, kernel_batch_imag_axis
from .units import CONSTANTS

__all__ = [
    "ForcePoint",
    "force_kernels",
    "force_kernels_plasma_form",
    "F_M",
    "F_E",
    "F_dimensional",
    "regime_classify",
]


@dataclass(frozen=True)
class ForcePoint:
    """One point of a force sweep: reduced distance, scaled and SI force."""

    x: float
    F: float
    F_dimensional: float
    regime_prediction: float | None = None


def _check_weights(weights) -> tuple[float, float]:
    if len(weights) != 3 or any(not (w >= 0.0 and math.isfinite(w))
                                for w in weights):
        raise ValueError("weights must be three finite values >= 0")
    return weights[0] + weights[1], weights[2]


def _ibar_pc(xi: np.ndarray) -> np.ndarray:
    """Closed-form mirror force integrands [parallel, perp], shape (n, 2)."""
    damp = np.exp(-2.0 * xi)
    par = (3.0 + 6.0 * xi + 8.0 * xi * xi + 8.0 * xi**3) * damp
    perp = 2.0 * (3.0 + 6.0 * xi + 4.0 * xi * xi) * damp
    return np.stack([par, perp], axis=-1)


def force_kernels(x: float, model: MaterialModel, geom: SlabGeometry,
                  quad: QuadratureSpec | None = None,
                  coupling: str = "magnetic") -> tuple[float, float]:
    """Dimensionless force kernels (ibar_parallel, ibar_perp) at x = k_A z.

    These carry all material and thickness dependence of the rescaled
    force; the dielectric function is sampled at omega' = (c x / geom.z) *
    xi / x along the imaginary axis.  The mirror uses closed-form reduced
    integrands; electric coupling swaps the two scattering coefficients,
    making both kernels negative for good conductors.
    """
    if not x > 0.0:
        raise ValueError("x must be > 0")
    if isinstance(model, Vacuum):
        return 0.0, 0.0
    if isinstance(model, PerfectConductor):
        sgn = 1.0 if coupling == "magnetic" else -1.0
        if coupling not in ("magnetic", "electric"):
            raise ValueError(f"unknown coupling {coupling!r}")
        val = modular_split(lambda xi: sgn * _ibar_pc(xi), x, spec=quad)
        return float(val[0]), float(val[1])

    scale = CONSTANTS.c / geom.z

    def F(xi):
        return kernel_batch_imag_axis(np.asarray(xi) * scale, geom, model,
                                      quad, gradient=True, coupling=coupling)

    val = modular_split(F, x, spec=quad)
    return float(val[0]), float(val[1])


def force_kernels_plasma_form(x: float, alpha: float, nu_bar: float = 0.0,
                              quad: QuadratureSpec | None = None,
                              coupling: str = "magnetic") -> tuple[float, float]:
    """Second, independent route to the free-electron force kernels.

    Integrates directly over the transverse wavenumber (in units of 1/z)
    for a half-space with reduced plasma frequency ``alpha`` = omega_p /
    omega_A and reduced relaxation rate ``nu_bar`` = nu / omega_A; the
    relaxation enters through the frequency-dependent replacement
    (alpha x)^2 -> (alpha x)^2 xi / (xi + nu_bar x) of the squared plasma
    parameter.  Exists to cross-check :func:`force_kernels`.
    """
    if not x > 0.0:
        raise ValueError("x must be > 0")
    if not alpha > 0.0 or nu_bar < 0.0:
        raise ValueError("alpha must be > 0 and nu_bar >= 0")
    if coupling not in ("magnetic", "electric"):
        raise ValueError(f"unknown coupling {coupling!r}")
    quad_inner = quad or QuadratureSpec()
    electric = coupling == "electric"
    g2_static = (alpha * x) ** 2

    def F(xi):
        xi = np.atleast_1d(np.asarray(xi, dtype=float))
        scale = np.where(xi < 372.0, np.exp(-2.0 * np.minimum(xi, 372.0)),
                         0.0)
        active = scale > 0.0
        out = np.zeros((xi.size, 2))
        if not np.any(active):
            return out
        xa = xi[active]
        if nu_bar > 0.0:
            g2 = g2_static * xa / (xa + nu_bar * x)
        else:
            g2 = np.full_like(xa, g2_static)

        def inner(lam):
            ll = lam[:, None] ** 2
            xi2 = xa[None, :] ** 2
            H0 = np.sqrt(ll + xi2)
            # exp(-2 H0) with the exp(-2 xi) factor pulled outside.
            damp = np.exp(-2.0 * ll / (H0 + xa[None, :]))
            eta = np.sqrt(H0 * H0 + g2[None, :])
            s_ratio = g2[None, :] / (eta + H0) ** 2
            p_ratio = (g2[None, :] * (H0 * H0 * (2.0 * xi2 + g2[None, :])
                                      - xi2 * xi2)
                       / ((xi2 + g2[None, :]) * H0 + xi2 * eta) ** 2)
            if electric:
                s_ratio, p_ratio = -p_ratio, -s_ratio
            perp = 16.0 * lam[:, None] ** 3 * damp * s_ratio
            par = 8.0 * lam[:, None] * damp * (H0 * H0 * s_ratio
                                               + xi2 * p_ratio)
            return np.concatenate([par, perp], axis=1)

        res = integrate_adaptive(inner, 0.0, math.inf, quad_inner)
        if not res.converged:
            raise NonConvergenceError(
                "wavenumber-form force integral did not converge "
                f"(error estimate {np.max(res.error_estimate):.3e})")
        vals = np.asarray(res.value).reshape(2, -1)
        out[active, 0] = scale[active] * vals[0]
        out[active, 1] = scale[active] * vals[1]
        return out

    val = modular_split(F, x, spec=quad)
    return float(val[0]), float(val[1])


def F_M(x: float, weights, model: MaterialModel, geom: SlabGeometry,
        quad: QuadratureSpec | None = None) -> float:
    """Dimensionless magnetic Casimir-Polder force (positive: repulsive)."""
    w_par, w_perp = _check_weights(weights)
    ip, iq = force_kernels(x, model, geom, quad, coupling="magnetic")
    return w_par * ip + w_perp * iq


def F_E(x: float, weights, model: MaterialModel, geom: SlabGeometry,
        quad: QuadratureSpec | None = None) -> float:
    """Dimensionless electric Casimir-Polder force (negative: attractive)."""
    w_par, w_perp = _check_weights(weights)
    ip, iq = force_kernels(x, model, geom, quad, coupling="electric")
    return w_par * ip + w_perp * iq


def F_dimensional(z: float, omega_A: float, transitions: TransitionSet,
                  model: MaterialModel, geom: SlabGeometry | None = None,
                  quad: QuadratureSpec | None = None) -> float:
    """Total Casimir-Polder force in newtons (positive pushes the atom away).

    Each transition contributes its coupling prefactor over 32 pi z^4 times
    the dimensionless force at its own reduced distance omega_t z / c;
    ``omega_A`` fixes only the reported reduced-distance convention of
    derived sweeps and does not enter the physics.
    """
    if not z > 0.0:
        raise ValueError("z must be > 0")
    if not omega_A > 0.0:
        raise ValueError("omega_A must be > 0")
    eff = SlabGeometry(z=z, h=geom.h if geom is not None else math.inf)
    if isinstance(model, Vacuum):
        return 0.0
    total = 0.0
    for tr in transitions:
        x_t = tr.omega_t * z / CONSTANTS.c
        if tr.kind == "magnetic":
            pref = CONSTANTS.mu0 * tr.moment_scale**2
            f_val = F_M(x_t, tr.weights, model, eff, quad)
        else:
            pref = tr.moment_scale**2 / CONSTANTS.eps0
            f_val = F_E(x_t, tr.weights, model, eff, quad)
        total += pref * f_val / (32.0 * math.pi * z**4)
    return float(total)


def regime_classify(x: float, alpha: float,
                    nu_bar: float = 0.0) -> tuple[str, float | None]:
    """Asymptotic regime tag and the equal-weights F_M prediction there.

    Regimes for a free-electron slab with reduced plasma frequency alpha:
    ``quadratic-rise`` (alpha*x <= 0.1, force grows like (alpha x)^2),
    ``plateau`` (alpha*x >= 10 and x <= 0.1, mirror-like constant 3/2),
    ``far-field`` (x >= 10 and alpha*x >= 10, decay 6/(pi x)), otherwise
    ``unclassified`` with no prediction.  Thresholds gate predictions only.
    """
    if not (x > 0.0 and alpha > 0.0 and nu_bar >= 0.0):
        raise ValueError("x and alpha must be > 0, nu_bar >= 0")
    ax = alpha * x
    if ax <= 0.1:
        pred = (alpha * x) ** 2 * (0.5 * (0.25 + 1.0 / (2.0 + math.sqrt(2.0)
                                                        * alpha))
                                   + 0.25 * 0.5)
        return "quadratic-rise", pred
    if ax >= 10.0 and x <= 0.1:
        return "plateau", 1.5
    if x >= 10.0 and ax >= 10.0:
        return "far-field", 6.0 / (math.pi * x)
    return "unclassified", None
