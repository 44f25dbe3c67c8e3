#!/usr/bin/env python3
"""How magnetic and electric couplings mirror each other -- and when not.

Above a perfect mirror the dimensionless force on an electric dipole is
exactly minus the force on a magnetic moment: F_E(x) = -F_M(x) for every
x and any weights.  The mirror swaps the roles of the two field
polarizations, nothing else.

A real metal breaks the symmetry in the near field.  For a plasma with
plasma frequency alpha * omega_A:

  * the magnetic F_M dies quadratically, F_M ~ (alpha x)^2 * const,
    because weak screening reflects little magnetic field;
  * the electric F_E saturates at the constant
    -[ (w_x+w_y) * 3/2 + w_z * 3 ] * alpha / (sqrt2 + alpha),
    because even a poor metal still screens electrostatic fields.

The attractive electric force therefore dominates by orders of magnitude
close in, while far away |F_E| -> F_M again (retardation only sees the
total reflectivity).  Output: tables and a figure in demos/output/.
"""
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from cpslab import (
    CONSTANTS,
    F_E,
    F_M,
    PerfectConductor,
    Plasma,
    QuadratureSpec,
    SlabGeometry,
)

OUT = Path(__file__).resolve().parent / "output"
OMEGA_A = 2.0 * math.pi * 560e3
EQ = (0.25, 0.25, 0.25)
QUAD = QuadratureSpec(rel_tol=1e-7)


def geometry(x: float) -> SlabGeometry:
    return SlabGeometry(z=x * CONSTANTS.c / OMEGA_A)


def main() -> None:
    OUT.mkdir(exist_ok=True)

    print("perfect mirror: F_E = -F_M exactly\n")
    print(f"{'x':>9} {'F_M':>12} {'F_E':>13} {'|F_E|/F_M - 1':>14}")
    pc = PerfectConductor()
    for x in (1e-3, 1e-1, 1.0, 10.0, 100.0):
        fm = F_M(x, EQ, pc, geometry(x), quad=QUAD)
        fe = F_E(x, EQ, pc, geometry(x), quad=QUAD)
        print(f"{x:9.3e} {fm:12.5e} {fe:13.5e} {abs(fe) / fm - 1:14.2e}")

    alpha = 1.0
    model = Plasma(omega_p=alpha * OMEGA_A)
    sat = -(0.5 * 1.5 + 0.25 * 3.0) * alpha / (math.sqrt(2.0) + alpha)
    print(f"\nplasma with alpha = {alpha:g}: near-field saturation of "
          f"F_E at {sat:.5f}\n")
    print(f"{'x':>9} {'F_M':>12} {'F_E':>13} {'|F_E/F_M|':>11}")
    xs = np.logspace(-3, 2, 21)
    fms, fes = [], []
    for x in xs:
        fm = F_M(float(x), EQ, model, geometry(float(x)), quad=QUAD)
        fe = F_E(float(x), EQ, model, geometry(float(x)), quad=QUAD)
        fms.append(fm)
        fes.append(fe)
    fms, fes = np.array(fms), np.array(fes)
    for i in (0, 4, 8, 12, 16, 20):
        print(f"{xs[i]:9.3e} {fms[i]:12.4e} {fes[i]:13.4e} "
              f"{abs(fes[i] / fms[i]):11.3e}")
    print(f"\nat x = {xs[0]:.0e} the electric force exceeds the magnetic "
          f"one by a factor {abs(fes[0] / fms[0]):.1e};\nby x ~ 100 the "
          "two couplings have converged to the same retarded force.")

    fig, ax = plt.subplots(figsize=(6.4, 4.4))
    ax.loglog(xs, fms, "o-", ms=3, label=r"$F_M$ (magnetic, repulsive)")
    ax.loglog(xs, -fes, "s-", ms=3, label=r"$-F_E$ (electric, attractive)")
    ax.axhline(-sat, color="0.5", lw=0.8, ls="--")
    ax.text(2e-3, -sat * 1.15, "electric saturation", fontsize=7,
            color="0.4")
    ax.set_xlabel(r"$x = \omega_A z / c$")
    ax.set_ylabel("|dimensionless force|")
    ax.set_title(rf"Plasma, $\alpha$ = {alpha:g}: broken duality near, "
                 "restored far")
    ax.legend(fontsize=8)
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    path = OUT / "magnetic_electric_duality.png"
    fig.savefig(path, dpi=150)
    print(f"\nwrote {path}")


if __name__ == "__main__":
    main()
