"""
Growth rates with no determinant
================================

Exponentially growing eigenvalues give a zeta function with a pole at s = 0,
so ``-zeta'(s)`` runs off to +infinity.  Logarithmically growing ones are worse:
the defining sum never converges, so there is no zeta function to continue.
"""

import math

from specdet import (
    BranchCut,
    ExponentialRay,
    LogarithmicRay,
    Spectrum,
    classify,
    direct_zeta,
    divergence_witness,
    exp_blowup_witness,
)

###############################################################################
# Exponential ray
# ---------------
# Brute-force summation agrees with the geometric series 1/(e^s - 1) ...

expo = Spectrum.of(ExponentialRay(1.0, 1.0, 0.0))
print(classify(expo).tag.value)
print("direct sum at s=1:", direct_zeta(expo, BranchCut(-math.pi), 1.0).value.real, " 1/(e-1) =", 1 / (math.e - 1))

###############################################################################
# ... and its derivative grows like 1/s**2 as s approaches 0.

svals = [10.0**-k for k in range(1, 6)]
for s, v in zip(svals, exp_blowup_witness(expo, svals)):
    print(f"s = {s:.0e}: |zeta'(s)| = {v:.6e}   s^2 |zeta'(s)| = {s * s * v:.9f}")

###############################################################################
# Logarithmic ray
# ---------------
# Partial sums of (log(e*j))**-s keep growing however large s is; the gaps
# between decades do not shrink geometrically.

logr = Spectrum.of(LogarithmicRay(1.0, math.e, 0.0))
print(classify(logr).tag.value)
checkpoints = [10**k for k in range(2, 7)]
for s in (1.0, 2.0, 4.0):
    sums = divergence_witness(logr, s, checkpoints)
    print(f"s = {s}: " + "  ".join(f"{v:10.3f}" for v in sums))
