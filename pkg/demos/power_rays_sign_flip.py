"""
Sign flips for eigenvalues growing like a power
===============================================

Three rays of eigenvalues ``2 * j**3 * exp(i*alpha)``.  For power growth the
determinant has a closed form, and moving the cut across one ray multiplies
it by -1.
"""

import cmath
import math

from specdet import BranchCut, PowerRays, Spectrum, compare_cuts, determinant, rays_crossed

c1, c2 = 2.0, 3.0
angles = (math.pi / 3, math.pi, 3 * math.pi / 2)
spec = Spectrum.of(PowerRays(c1, c2, angles))

###############################################################################
# Closed form against the engine
# ------------------------------
# With the cut just above the positive real axis no ray has wrapped around.

n = len(angles)
formula = c1 ** (-n / 2) * (2 * math.pi) ** (c2 * n / 2) * cmath.exp(-0.5j * sum(angles))
got = determinant(spec, BranchCut(0.5)).determinant
print(f"engine : {got:.10f}")
print(f"formula: {formula:.10f}")

###############################################################################
# Ratios between cuts
# -------------------
# The ratio depends only on how many rays the cut sweeps over.

for beta in (2.0, 4.0, 5.0, 0.5 + 2 * math.pi):
    k = rays_crossed(spec, 0.5, beta)
    r = compare_cuts(spec, BranchCut(0.5), BranchCut(beta))
    print(f"0.5 -> {beta:.3f}: {k} rays crossed, ratio {r.real:+.12f}")

###############################################################################
# A full turn of the cut crosses every ray once, so an odd number of rays
# flips the sign for good.
