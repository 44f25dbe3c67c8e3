#!/usr/bin/env python3
"""How thick does a slab have to be to act like a half-space?

All other demos use a semi-infinite medium.  Real coatings are films,
and the multiple reflections inside a film of thickness h reduce its
response.  This script fixes the reduced distance x = 0.1 for a
well-screening plasma metal (alpha = 1e4, so the bulk force sits on the
3/2 plateau) and sweeps the thickness-to-distance ratio h/z.

The answer has two scales.  Relative to the *distance*, the force is
converged to the bulk value already at h = z -- fields that have decayed
over the gap cannot probe deeper than another gap-width into the
material.  But a metal screens with its plasma skin depth c/omega_p,
which here is 1e-4 of the optical scale c/omega_A, so the force only
starts dropping once h falls toward that much smaller scale, and a film
thousands of times thinner than the gap still produces the full force.

Output: a table plus a figure in demos/output/.
"""
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from cpslab import (
    CONSTANTS,
    F_M,
    Plasma,
    QuadratureSpec,
    SlabGeometry,
)

OUT = Path(__file__).resolve().parent / "output"
OMEGA_A = 2.0 * math.pi * 560e3
EQ = (0.25, 0.25, 0.25)
QUAD = QuadratureSpec(rel_tol=1e-7)
ALPHA = 1e4
X = 0.1


def main() -> None:
    OUT.mkdir(exist_ok=True)
    model = Plasma(omega_p=ALPHA * OMEGA_A)
    z = X * CONSTANTS.c / OMEGA_A

    bulk = F_M(X, EQ, model, SlabGeometry(z=z), quad=QUAD)
    print(f"bulk (h = infinity) force at x = {X:g}, alpha = {ALPHA:g}: "
          f"F_M = {bulk:.6f}\n")

    ratios = (10.0, 3.0, 1.0, 0.3, 0.1, 1e-2, 1e-3, 2e-4, 1e-4, 5e-5,
              2e-5, 1e-5)
    print(f"{'h/z':>9} {'F_M':>12} {'F_M / bulk':>11}")
    rows = []
    for r in ratios:
        fm = F_M(X, EQ, model, SlabGeometry(z=z, h=r * z), quad=QUAD)
        rows.append((r, fm))
        print(f"{r:9.1e} {fm:12.6f} {fm / bulk:11.6f}")
    rows = np.array(rows)

    skin = 1.0 / (ALPHA * X)  # (c/omega_p) / z in units of z
    print(f"\nplasma screening length over distance: c/(omega_p z) = "
          f"{skin:.1e}.\nThe force is bulk-like until h/z approaches "
          "that scale, then a film thinner\nthan its own screening "
          "length reflects less and the force fades out.")

    fig, ax = plt.subplots(figsize=(6.0, 4.2))
    ax.semilogx(rows[:, 0], rows[:, 1] / bulk, "o-", ms=4)
    ax.axvline(skin, color="0.6", lw=0.8)
    ax.text(skin * 1.3, 0.5, "screening length", rotation=90, fontsize=7,
            color="0.4")
    ax.set_xlabel("thickness / distance  h/z")
    ax.set_ylabel(r"$F_M(h) / F_M(\infty)$")
    ax.set_title(rf"Finite slab at $x$ = {X:g}, $\alpha$ = {ALPHA:g}")
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    path = OUT / "finite_thickness.png"
    fig.savefig(path, dpi=150)
    print(f"\nwrote {path}")


if __name__ == "__main__":
    main()
