#!/usr/bin/env python3
"""Ground-level frequency shift of a trapped atom near a planar surface.

An atom held at distance z from a half-space picks up a distance-dependent
shift of its transition frequency.  Deep in the near field the shift grows
like 1/z^3 with a material- and coupling-dependent coefficient, and the
sign tells the two couplings apart:

  * a spin magnetic moment is pushed UP in frequency (positive shift), and
    an ordinary metal only acts like a mirror once the magnetic near field
    can no longer diffuse through it -- so gold approaches the ideal-mirror
    value slowly, from far below, as z grows;
  * an electric dipole is pulled DOWN (negative shift), gold is
    indistinguishable from a perfect mirror at any of these distances, and
    a dielectric is reduced by the static contrast (eps-1)/(eps+1).

This script sweeps z for an idealized mirror, a gold-like Drude metal
(plasma energy 9.03 eV, collision energy 0.0347 eV), and a two-plateau
dielectric resembling sapphire (static epsilon about 8.42).  Output: two
tables on stdout and a log-log figure in demos/output/.
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
    PerfectConductor,
    TransitionSet,
    TwoPlateau,
    ground_shift,
)

OUT = Path(__file__).resolve().parent / "output"
EV = CONSTANTS.eV / CONSTANTS.hbar          # rad/s per eV
OMEGA_A = 2.0 * math.pi * 560e3             # spin precession, 560 kHz
DIPOLE = 1e-29                              # C m, atomic-scale dipole

GOLD = Drude(omega_p=9.03 * EV, nu=0.0347 * EV)
SAPPHIRE = TwoPlateau(omega_p1=0.16 * EV, omega_p2=30.8 * EV,
                      omega_1=0.07 * EV, omega_2=20.8 * EV)


def main() -> None:
    OUT.mkdir(exist_ok=True)
    spin = TransitionSet.single(omega_t=OMEGA_A)
    dipole = TransitionSet.single(omega_t=OMEGA_A, moment_scale=DIPOLE,
                                  kind="electric")
    zs = np.logspace(-6, -3, 13)            # 1 um .. 1 mm

    print("Magnetic coupling (electron spin moment, "
          f"{OMEGA_A / (2 * math.pi) / 1e3:.0f} kHz precession, "
          "equal weights): shift in rad/s\n")
    print(f"{'z (m)':>10} {'mirror':>12} {'gold':>12} {'gold/mirror':>12}")
    mag = []
    for z in zs:
        d_pc = ground_shift(z, spin, PerfectConductor()).delta_omega
        d_au = ground_shift(z, spin, GOLD).delta_omega
        mag.append((z, d_pc, d_au))
        print(f"{z:10.2e} {d_pc:12.4e} {d_au:12.4e} {d_au / d_pc:12.6f}")
    mag = np.array(mag)

    coeff = mag[:, 1] * mag[:, 0] ** 3
    drift = coeff.max() / coeff.min() - 1.0
    print(f"\nmirror shift * z^3 stays at {coeff.mean():.6e} "
          f"(relative drift {drift:.2e}: pure 1/z^3 here), and the\n"
          "gold/mirror ratio climbs with z because the low-frequency "
          "magnetic near field\nleaks through a metal thinner than its "
          "skin depth.\n")

    print("Electric-dipole coupling (|d| = 1e-29 C m, same frequency): "
          "shift in rad/s\n")
    print(f"{'z (m)':>10} {'mirror':>12} {'gold':>12} {'sapphire':>12} "
          f"{'sapph/mirror':>13}")
    ele = []
    for z in zs:
        e_pc = ground_shift(z, dipole, PerfectConductor()).delta_omega
        e_au = ground_shift(z, dipole, GOLD).delta_omega
        e_al = ground_shift(z, dipole, SAPPHIRE).delta_omega
        ele.append((z, e_pc, e_au, e_al))
        print(f"{z:10.2e} {e_pc:12.4e} {e_au:12.4e} {e_al:12.4e} "
              f"{e_al / e_pc:13.6f}")
    ele = np.array(ele)

    eps0 = 8.417167310711  # static epsilon of the two-plateau dielectric
    print(f"\nelectric shifts are negative; sapphire/mirror = "
          f"{ele[0, 3] / ele[0, 1]:.6f} matches the static contrast "
          f"(eps-1)/(eps+1) = {(eps0 - 1) / (eps0 + 1):.6f}")

    fig, axes = plt.subplots(1, 2, figsize=(9.5, 4.0))
    axes[0].loglog(mag[:, 0], mag[:, 1], "o-", ms=3, label="mirror")
    axes[0].loglog(mag[:, 0], mag[:, 2], "s-", ms=3, label="gold (Drude)")
    axes[0].set_title("magnetic: shift up, metal below mirror")
    axes[0].set_ylabel(r"$\delta\omega$ (rad/s)")
    axes[1].loglog(ele[:, 0], -ele[:, 1], "o-", ms=3, label="mirror")
    axes[1].loglog(ele[:, 0], -ele[:, 3], "^-", ms=3,
                   label="sapphire (two-plateau)")
    axes[1].set_title("electric: shift down, dielectric scaled")
    axes[1].set_ylabel(r"$-\delta\omega$ (rad/s)")
    for ax in axes:
        ax.set_xlabel("distance z (m)")
        ax.legend(fontsize=8)
        ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    path = OUT / "level_shift_vs_distance.png"
    fig.savefig(path, dpi=150)
    print(f"\nwrote {path}")


if __name__ == "__main__":
    main()
