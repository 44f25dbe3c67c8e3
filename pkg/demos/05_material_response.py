#!/usr/bin/env python3
"""Material response on the imaginary frequency axis, and the BCS gap.

Dispersion forces and shifts are integrals of the reflection response
over imaginary frequency, so what matters about a material is the smooth
real function eps(i w).  This script evaluates it for

  * a gold-like Drude metal        eps = 1 + wp^2 / (w (w + nu)),
  * a two-plateau dielectric       two flat shelves, static value ~8.42,
  * a zero-temperature BCS         pole ~ 1/w^2 from the condensate plus
    superconductor (niobium-like)  a gapped continuum,

and compares the superconductor with its normal state to show the
missing absorption below the gap.  The second half evaluates the
underlying complex conductivity on the real axis: sigma_1 vanishes
identically below photon energy 2*Delta (no pair breaking), while
sigma_2 carries the inductive condensate response ~ pi q at large q,
reduced by the impurity factor f(y) when the elastic scattering time is
finite.  Output: tables and two figures in demos/output/.
"""
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from cpslab import (
    CONSTANTS,
    Drude,
    SuperconductorMB,
    TwoPlateau,
    epsilon_imag_axis,
    f_impurity,
    sigma_mb_clean,
    sigma_mb_impure,
)

OUT = Path(__file__).resolve().parent / "output"
EV = CONSTANTS.eV / CONSTANTS.hbar

GOLD = Drude(omega_p=9.03 * EV, nu=0.0347 * EV)
SAPPHIRE = TwoPlateau(omega_p1=0.16 * EV, omega_p2=30.8 * EV,
                      omega_1=0.07 * EV, omega_2=20.8 * EV)

# Niobium-like superconductor: gap from Tc = 9.2 K via 2*Delta = 3.53 kB Tc,
# spectral weight of a 2.4 eV plasma energy, impurity parameter y = 13.61.
DELTA = 3.53 * CONSTANTS.kB * 9.2 / 2.0
SIGMA_N = CONSTANTS.eps0 * CONSTANTS.hbar * (2.4 * EV) ** 2 / (math.pi * DELTA)
Y = 13.61
NIOBIUM = SuperconductorMB(delta=DELTA, sigma_n=SIGMA_N,
                           tau=CONSTANTS.hbar / (Y * DELTA))


def main() -> None:
    OUT.mkdir(exist_ok=True)

    print("epsilon on the imaginary axis\n")
    ws_ev = (1e-4, 1e-3, 1e-2, 0.1, 1.0, 10.0)
    print(f"{'hbar*w (eV)':>12} {'gold (Drude)':>14} {'sapphire':>12}")
    for w_ev in ws_ev:
        e_au = epsilon_imag_axis(GOLD, w_ev * EV)
        e_al = epsilon_imag_axis(SAPPHIRE, w_ev * EV)
        print(f"{w_ev:12.1e} {e_au:14.5e} {e_al:12.6f}")
    print("\nsapphire steps down its two shelves (8.42, then ~3.2, then "
          "1); the metal grows\nlike 1/w^2 toward low frequency.\n")

    gap_scale = DELTA / CONSTANTS.hbar
    print("niobium-like superconductor vs its normal state "
          "(w in units of Delta/hbar):\n")
    print(f"{'w*hbar/Delta':>13} {'eps_SC(iw)':>13} {'eps_normal(iw)':>15} "
          f"{'ratio':>8}")
    normal = Drude(omega_p=2.4 * EV, nu=1.0 / NIOBIUM.tau)
    for w_red in (0.01, 0.1, 1.0, 10.0):
        w = w_red * gap_scale
        e_sc = epsilon_imag_axis(NIOBIUM, w)
        e_n = epsilon_imag_axis(normal, w)
        print(f"{w_red:13.2f} {e_sc:13.4e} {e_n:15.4e} {e_sc / e_n:8.3f}")
    print("\nat low frequency the condensate pole ~1/w^2 beats the "
          "normal metal's 1/w;\nthe missing sub-gap absorption shows up "
          "as the ratio > 1.\n")

    # Real-axis conductivity indexed by q = Delta / (hbar w): large q is
    # LOW frequency; the pair-breaking threshold hbar w = 2 Delta is q = 1/2.
    qs = np.logspace(-2, 2, 81)
    clean = np.array([[sigma_mb_clean(gap_scale / q, DELTA)
                       .sigma1_over_sigman,
                       sigma_mb_clean(gap_scale / q, DELTA)
                       .sigma2_over_sigman] for q in qs])
    impure = np.array([[sigma_mb_impure(gap_scale / q, DELTA, NIOBIUM.tau)
                        .sigma1_over_sigman,
                        sigma_mb_impure(gap_scale / q, DELTA, NIOBIUM.tau)
                        .sigma2_over_sigman] for q in qs])

    subgap = qs >= 0.5
    print("real-axis conductivity sigma / sigma_n "
          "(q = Delta / (hbar w), so q >= 1/2 is below the gap):")
    print(f"  sigma_1 below the gap: max |value| = "
          f"{np.abs(clean[subgap, 0]).max():.1e} (exactly zero), both "
          "clean and impure")
    i100 = -1
    print(f"  sigma_2 at q = 100: clean {clean[i100, 1]:.3f} vs pi*q = "
          f"{math.pi * 100:.3f}")
    print(f"                      impure {impure[i100, 1]:.3f} vs "
          f"pi*q*(1-f(y)) = {math.pi * 100 * (1 - f_impurity(Y)):.3f}")
    print(f"  impurity factor: f(2) = {f_impurity(2.0):.8f} = 2/pi, "
          f"f({Y}) = {f_impurity(Y):.4f}")

    fig, axes = plt.subplots(1, 2, figsize=(9.5, 4.0))
    ws = np.logspace(-4, 1, 60) * EV
    axes[0].loglog([w / EV for w in ws],
                   [epsilon_imag_axis(GOLD, w) for w in ws],
                   label="gold (Drude)")
    axes[0].loglog([w / EV for w in ws],
                   [epsilon_imag_axis(SAPPHIRE, w) for w in ws],
                   label="sapphire (two-plateau)")
    axes[0].loglog([w / EV for w in ws],
                   [epsilon_imag_axis(NIOBIUM, w) for w in ws],
                   label="niobium (BCS)")
    axes[0].set_xlabel(r"$\hbar\omega$ (eV)")
    axes[0].set_ylabel(r"$\varepsilon(i\omega)$")
    axes[0].set_title("imaginary-axis permittivity")
    axes[0].legend(fontsize=8)
    axes[0].grid(True, which="both", alpha=0.3)

    axes[1].plot(qs, clean[:, 0], "-", label=r"$\sigma_1$ clean")
    axes[1].plot(qs, impure[:, 0], "--", label=r"$\sigma_1$ impure")
    axes[1].plot(qs, clean[:, 1], "-", label=r"$\sigma_2$ clean")
    axes[1].plot(qs, impure[:, 1], "--", label=r"$\sigma_2$ impure")
    axes[1].set_xscale("log")
    axes[1].set_yscale("log")
    axes[1].set_ylim(1e-3, 1e3)
    axes[1].axvline(0.5, color="0.6", lw=0.8)
    axes[1].text(0.52, 2e-3, "pair-breaking edge", fontsize=7,
                 color="0.4")
    axes[1].set_xlabel(r"$q = \Delta / \hbar\omega$  (large $q$ = low "
                       r"$\omega$)")
    axes[1].set_ylabel(r"$\sigma / \sigma_n$")
    axes[1].set_title("BCS conductivity, clean vs impure")
    axes[1].legend(fontsize=7)
    axes[1].grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    path = OUT / "material_response.png"
    fig.savefig(path, dpi=150)
    print(f"\nwrote {path}")


if __name__ == "__main__":
    main()
