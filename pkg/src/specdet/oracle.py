"""Brute-force checks for the closed-form engine.

``direct_zeta`` sums actual eigenvalue powers ``lambda_j^-s`` on the chosen
branch, one eigenvalue at a time, and adds an Euler-Maclaurin estimate of the
remaining tail.  It never goes through the Riemann/Hurwitz identities the
engine uses, so agreement between the two is a real test of the phase
bookkeeping.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .branchlog import BranchCut, angle_to_cut, arg_in_branch, pow_branch
from .determinant import ZetaClosedForm, build_zeta, eval_zeta, eval_zeta_ds
from .errors import NearPole, OutsideConvergenceRegion, ValidationError
from .spectrum import ExponentialRay, FiniteSet, LogarithmicRay, PowerRays, ShiftedLine, Spectrum
from .zetafuncs import bernoulli

_CHUNK = 1 << 20


@dataclass(frozen=True)
class OracleConfig:
    truncation: int = 2000
    tail_terms: int = 8
    fd_step: float = 1e-6
    tolerance: float = 1e-8

    def __post_init__(self):
        if self.truncation < 100:
            raise ValidationError("truncation must be >= 100")
        if self.tail_terms < 1 or self.tail_terms > 29:
            raise ValidationError("tail_terms must be in [1, 29]")
        if not (self.fd_step > 0 and self.tolerance > 0):
            raise ValidationError("fd_step and tolerance must be positive")


@dataclass(frozen=True)
class OracleSum:
    value: complex
    error: float  # absolute estimate of the tail-approximation error


def _tail_after(N: int, shift: complex, p: complex, terms: int) -> tuple[complex, float]:
    """Euler-Maclaurin estimate of ``sum_{j>N} (j + shift)^-p``; also returns the last correction size."""
    x = N + shift
    logx = cmath.log(x)
    fx = cmath.exp(-p * logx)
    total = x * fx / (p - 1) - fx / 2
    B = bernoulli(2 * terms)
    rising = 1.0 + 0j
    m = 0
    last = 0j
    for k in range(1, terms + 1):
        while m < 2 * k - 1:
            rising *= p + m
            m += 1
        # -B_2k/(2k)! f^(2k-1)(x), with f^(n) = (-1)^n (p)_n x^(-p-n)
        last = float(B[2 * k] / math.factorial(2 * k)) * rising * fx / x ** (2 * k - 1)
        total += last
    return total, abs(last)


def _fsum_c(values) -> complex:
    values = list(values)
    return complex(math.fsum(v.real for v in values), math.fsum(v.imag for v in values))


def _branch_powers(zs: Sequence[complex], s: complex, cut: BranchCut) -> complex:
    return _fsum_c(pow_branch(z, -s, cut) for z in zs)


def _shifted_line_truncation(line: ShiftedLine, cut: BranchCut, N: int) -> int:
    # all eigenvalues beyond N must lie on the same side of the cut as the line's asymptote
    d = min(angle_to_cut(math.pi / 2, cut.beta), angle_to_cut(-math.pi / 2, cut.beta))
    need = math.ceil(line.b / math.tan(min(d, 1.5))) + 1
    return max(N, need)


def direct_zeta(spec: Spectrum, cut: BranchCut, s: complex, cfg: OracleConfig | None = None) -> OracleSum:
    """Truncated eigenvalue sum plus tail estimate, valid inside the convergence region."""
    cfg = cfg or OracleConfig()
    s = complex(s)
    N = cfg.truncation
    total = []
    err = 0.0
    for comp in spec.components:
        if isinstance(comp, FiniteSet):
            total.append(_branch_powers(comp.eigenvalues, s, cut))
        elif isinstance(comp, PowerRays):
            if s.real <= 1 / comp.c2:
                raise OutsideConvergenceRegion(f"power rays need Re s > 1/c2 = {1 / comp.c2:g}, got {s}")
            for alpha in comp.angles:
                ray = comp.c1 * np.arange(1, N + 1, dtype=float) ** comp.c2 * cmath.exp(1j * alpha)
                total.append(_branch_powers(ray, s, cut))
                # tail: every eigenvalue on the ray shares the branch argument of the last one
                lead = cmath.exp(-s * complex(math.log(comp.c1), arg_in_branch(ray[-1], cut)))
                tail, e = _tail_after(N, 0.0, comp.c2 * s, cfg.tail_terms)
                total.append(lead * tail)
                err += abs(lead) * e
        elif isinstance(comp, ExponentialRay):
            if s.real <= 0:
                raise OutsideConvergenceRegion(f"exponential ray needs Re s > 0, got {s}")
            n = min(N, max(1, int(700 / comp.c2)))
            j = np.arange(1, n + 1, dtype=float)
            ray = comp.c1 * np.exp(comp.c2 * j) * cmath.exp(1j * comp.alpha)
            total.append(_branch_powers(ray, s, cut))
            # geometric tail sum_{j>n} exp(-c2*j*s), exact
            lead = cmath.exp(-s * complex(math.log(comp.c1), arg_in_branch(ray[-1], cut)))
            q = cmath.exp(-comp.c2 * s)
            total.append(lead * q ** (n + 1) / (1 - q))
        elif isinstance(comp, ShiftedLine):
            if s.real <= 1:
                raise OutsideConvergenceRegion(f"shifted line needs Re s > 1, got {s}")
            n = _shifted_line_truncation(comp, cut, N)
            for sign in (1.0, -1.0):
                line = [complex(comp.b, sign * j) for j in range(1, n + 1)]
                total.append(_branch_powers(line, s, cut))
                # b + i*sign*j = (i*sign) * (j - i*sign*b); the reduced part uses the principal log
                shift = complex(0.0, -sign * comp.b)
                direction = arg_in_branch(line[-1], cut) - cmath.phase(n + shift)
                lead = cmath.exp(-1j * direction * s)
                tail, e = _tail_after(n, shift, s, cfg.tail_terms)
                total.append(lead * tail)
                err += abs(lead) * e
        elif isinstance(comp, LogarithmicRay):
            raise OutsideConvergenceRegion("a logarithmic ray has no half-plane of convergence")
    value = _fsum_c(total)
    err += 64 * np.finfo(float).eps * sum(abs(t) for t in total)
    return OracleSum(value, err)


def fd_zeta_prime(form: ZetaClosedForm, s0: complex, cfg: OracleConfig | None = None) -> complex:
    """Central difference of ``eval_zeta`` with one Richardson step (h and h/2)."""
    cfg = cfg or OracleConfig()
    s0 = complex(s0)
    h = cfg.fd_step
    for t in form.terms:
        pole = t.kernel.pole(s0)
        if pole is not None and abs(s0 - pole) <= 2 * h:
            raise NearPole(f"difference stencil around s = {s0} reaches the pole at {pole}", pole)

    def central(step: float) -> complex:
        return (eval_zeta(form, s0 + step) - eval_zeta(form, s0 - step)) / (2 * step)

    return (4 * central(h / 2) - central(h)) / 3


def divergence_witness(spec: Spectrum, s: float, checkpoints: Sequence[int]) -> list[float]:
    """Partial sums of ``omega_j^-s`` over the first N moduli of the logarithmic ray, for each N.

    Sums are accumulated in fixed chunks so the result does not depend on
    how far the checkpoints reach.
    """
    ray = next((c for c in spec.components if isinstance(c, LogarithmicRay)), None)
    if ray is None:
        raise ValidationError("divergence_witness needs a spectrum with a logarithmic ray")
    s = float(s)
    cps = [int(n) for n in checkpoints]
    if any(n < 1 for n in cps):
        raise ValidationError("checkpoints must be positive counts")
    chunk_sums: list[float] = []  # exactly rounded sum of each complete chunk
    out = []
    for n in cps:
        full, rest = divmod(n, _CHUNK)
        while len(chunk_sums) < full:
            chunk_sums.append(math.fsum(_log_ray_terms(ray, s, len(chunk_sums) * _CHUNK, _CHUNK)))
        partial = math.fsum(_log_ray_terms(ray, s, full * _CHUNK, rest)) if rest else 0.0
        out.append(math.fsum(chunk_sums[:full] + [partial]))
    return out


def _log_ray_terms(ray: LogarithmicRay, s: float, start: int, count: int) -> np.ndarray:
    j = np.arange(ray.first_index + start, ray.first_index + start + count, dtype=float)
    return np.power(ray.c1 * np.log(ray.c2 * j), -s)


def gaps_nondecaying(sums: Sequence[float], ratio: float = 0.5) -> bool:
    """True when each gap between consecutive partial sums exceeds ``ratio`` times the previous gap."""
    gaps = np.diff(np.asarray(sums, dtype=float))
    return bool(np.all(gaps > 0) and np.all(gaps[1:] > ratio * gaps[:-1]))


def exp_blowup_witness(
    spec: Spectrum, s_values: Sequence[float], cut: BranchCut | None = None
) -> list[float]:
    """``|zeta'(s)|`` of the closed form at each s (should grow like 1/(c2*s^2) as s -> 0+)."""
    if not any(isinstance(c, ExponentialRay) for c in spec.components):
        raise ValidationError("exp_blowup_witness needs a spectrum with an exponential ray")
    vals = [float(v) for v in s_values]
    if any(v <= 0 for v in vals) or any(b >= a for a, b in zip(vals, vals[1:])):
        raise ValidationError("s_values must be positive and strictly decreasing")
    form = build_zeta(spec, cut or BranchCut(-math.pi))
    return [abs(eval_zeta_ds(form, v)) for v in vals]
