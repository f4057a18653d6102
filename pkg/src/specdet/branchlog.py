"""Complex argument, logarithm and power on an explicit branch of the logarithm.

A branch is fixed by the angle ``beta`` of its cut; arguments are taken from
the half-open interval ``(beta, beta + 2*pi]``.  ``beta`` is never reduced
modulo ``2*pi``: ``BranchCut(0)`` and ``BranchCut(2*pi)`` put the cut on the
same ray but select different sheets, and give different logarithms.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import OnBranchCut, ValidationError, ZeroArgument

TWO_PI = 2.0 * math.pi

#: Angular distance (radians) below which a point counts as lying on the cut.
CUT_TOL = 1e-12


@dataclass(frozen=True)
class BranchCut:
    """Branch of the logarithm whose cut is the ray ``arg z = beta``."""

    beta: float

    def __post_init__(self):
        if not math.isfinite(self.beta):
            raise ValidationError(f"branch cut angle must be finite, got {self.beta!r}")

    @property
    def interval(self) -> tuple[float, float]:
        return self.beta, self.beta + TWO_PI


def angle_to_cut(theta: float, beta: float) -> float:
    """Distance in radians from angle ``theta`` to the nearest image of ``beta``."""
    d = math.remainder(theta - beta, TWO_PI)
    return abs(d)


def lift_angle(theta: float, cut: BranchCut, strict: bool = True) -> float:
    """Return ``theta + 2*pi*k`` lying in ``(beta, beta + 2*pi]``.

    An angle along the cut raises OnBranchCut, or with ``strict=False`` maps
    to the closed end ``beta + 2*pi``.
    """
    beta = cut.beta
    if angle_to_cut(theta, beta) < CUT_TOL:
        if strict:
            raise OnBranchCut(f"angle {theta!r} lies on the branch cut beta={beta!r}")
        return beta + TWO_PI
    k = math.floor((beta - theta) / TWO_PI) + 1
    lifted = theta + TWO_PI * k
    # guard both ends against rounding in the floor above
    if lifted > beta + TWO_PI:
        lifted -= TWO_PI
    elif lifted <= beta:
        lifted += TWO_PI
    return lifted


def arg_in_branch(z: complex, cut: BranchCut, strict: bool = True) -> float:
    """Argument of ``z`` in ``(beta, beta + 2*pi]``."""
    z = complex(z)
    if z == 0:
        raise ZeroArgument("argument of zero is undefined")
    return lift_angle(cmath.phase(z), cut, strict)


def log_branch(z: complex, cut: BranchCut, strict: bool = True) -> complex:
    """``ln|z| + i*arg_in_branch(z, cut)``."""
    z = complex(z)
    theta = arg_in_branch(z, cut, strict)
    return complex(math.log(abs(z)), theta)


def pow_branch(z: complex, w: complex, cut: BranchCut, strict: bool = True) -> complex:
    """``z**w`` computed as ``exp(w * log_branch(z, cut))``."""
    return cmath.exp(complex(w) * log_branch(z, cut, strict))
