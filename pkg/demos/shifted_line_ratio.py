"""
Eigenvalues on a line that misses the origin
============================================

``b + i*j`` for every nonzero integer j.  Unlike rays through the origin,
moving the cut across the two accumulation directions changes the
determinant by ``-exp(2*pi*b)``, not by a sign.
"""

import math

from specdet import BranchCut, ShiftedLine, Spectrum, compare_cuts, determinant
from specdet.zetafuncs import hurwitz_zeta_ds

###############################################################################
# Ratio between the two half-plane cuts
# -------------------------------------

for b in (0.0, 0.25, 0.5, 1.0):
    spec = Spectrum.of(ShiftedLine(b))
    r = compare_cuts(spec, BranchCut(0.0), BranchCut(math.pi))
    print(f"b = {b:4.2f}: ratio {r.real:+14.6f}   -exp(2 pi b) = {-math.exp(2 * math.pi * b):+14.6f}")

###############################################################################
# A check that does not go through Euler-Maclaurin
# ------------------------------------------------
# The derivative of the Hurwitz zeta function at 0 is log Gamma(a) - log(2 pi)/2.
# For the cut on the positive axis this turns the determinant into an
# elementary function of b.

b = 0.5
det = determinant(Spectrum.of(ShiftedLine(b)), BranchCut(0.0)).determinant
closed = -math.exp(math.pi * b) * 2 * math.sinh(math.pi * b) / b
print(f"det = {det.real:.12f}, elementary form = {closed:.12f}")
a = 1 - 1j * b
print(f"d/ds zeta_H(0, {a}) = {hurwitz_zeta_ds(0, a):.12f}")

###############################################################################
# Cuts that pass between individual eigenvalues of the line cross only
# finitely many of them, which leaves the determinant unchanged.

spec = Spectrum.of(ShiftedLine(1.0))
for beta in (0.0, 0.7, 1.4, -1.5):
    print(f"beta = {beta:+.1f}: det = {determinant(spec, BranchCut(beta)).determinant:.10f}")
