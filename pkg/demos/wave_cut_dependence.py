"""
Where you put the cut changes the determinant
=============================================

The undamped wave operator on an interval of length T has eigenvalues
``+-i*j*pi/T``: two rays on the imaginary axis.  Its zeta-regularized
determinant is ``2T`` or ``-2T`` depending on which side of the plane the
branch cut of the logarithm sits on.
"""

import math

from specdet import BranchCut, PowerRays, Spectrum, build_zeta, determinant, eval_zeta, rays_crossed

T = 2.5
spec = Spectrum.of(PowerRays(math.pi / T, 1.0, (math.pi / 2, 3 * math.pi / 2)))

###############################################################################
# Two cuts, two answers
# ---------------------
# With the cut along the negative real axis both rays keep their principal
# arguments.  Along the positive axis the lower ray picks up 3*pi/2 instead of
# -pi/2.

for beta in (-math.pi, 0.0):
    rep = determinant(spec, BranchCut(beta))
    print(f"beta = {beta:+.4f}: det = {rep.determinant.real:+.12f}  (error estimate {rep.error_estimate:.1e})")

###############################################################################
# The zeta function itself differs by a phase
# -------------------------------------------
# Same moduli, different arguments: the two closed forms differ by the factor
# exp(-i*pi*s), which is 1 at s = 0 but has derivative -i*pi there.

s = 0.3 + 0.2j
left = eval_zeta(build_zeta(spec, BranchCut(-math.pi)), s)
right = eval_zeta(build_zeta(spec, BranchCut(0.0)), s)
print(f"zeta ratio at s = {s}: {right / left:.12f}")
print(f"exp(-i*pi*s)        : {complex(math.e ** (-1j * math.pi * s)):.12f}")

###############################################################################
# Rotating the cut
# ----------------
# Between rays nothing happens; each crossing flips the sign.

for beta in (-3.0, -2.0, -1.0, 1.0, 2.0, 4.0, 5.0):
    d = determinant(spec, BranchCut(beta)).determinant
    print(f"beta = {beta:+.1f}  crossings from -pi: {rays_crossed(spec, -math.pi, beta)}  det = {d.real:+.6f}")
