"""Closed-form spectral zeta functions and zeta-regularized determinants.

For a branch cut ``beta`` every eigenvalue family is rewritten as a sum of
terms ``exp(-s*(log c + i*theta)) * K(s)``, where ``theta`` is the argument of
the family lifted into ``(beta, beta + 2*pi]`` and ``K`` is one of a few
special-function kernels.  ``zeta'(0)`` follows from the product rule on each
term, and ``det = exp(-zeta'(0))``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional, Union

from .branchlog import TWO_PI, BranchCut, angle_to_cut, arg_in_branch, lift_angle
from .errors import DivergentAtZero, NearPole, OnBranchCut, UndefinedZeta
from .spectrum import (
    Classification,
    ExponentialRay,
    FiniteSet,
    LogarithmicRay,
    PowerRays,
    ShiftedLine,
    Spectrum,
    Tag,
    classify,
)
from .zetafuncs import DEFAULT_PARAMS, EMParams, hurwitz_zeta, hurwitz_zeta_ds, hurwitz_zeta_error

POLE_GUARD = 1e-10
#: Cuts closer than this to the accumulation directions of a shifted line are refused.
SHIFTED_LINE_GUARD = 1e-6


def _expm1(z: complex) -> complex:
    """``exp(z) - 1`` without cancellation near z = 0."""
    x, y = z.real, z.imag
    return complex(math.expm1(x) * math.cos(y) - 2.0 * math.sin(y / 2) ** 2, math.exp(x) * math.sin(y))


@dataclass(frozen=True)
class RiemannKernel:
    """``zeta_R(c2*s)``."""

    c2: float

    def pole(self, s: complex) -> complex:
        return 1.0 / self.c2

    def value(self, s: complex, params: EMParams) -> complex:
        return hurwitz_zeta(self.c2 * s, 1.0, params)

    def ds(self, s: complex, params: EMParams) -> complex:
        return self.c2 * hurwitz_zeta_ds(self.c2 * s, 1.0, params)

    def error(self, s: complex, params: EMParams) -> float:
        return hurwitz_zeta_error(self.c2 * s, 1.0, params)


@dataclass(frozen=True)
class HurwitzKernel:
    """``zeta_H(s, a)``."""

    a: complex

    def pole(self, s: complex) -> complex:
        return 1.0

    def value(self, s: complex, params: EMParams) -> complex:
        return hurwitz_zeta(s, self.a, params)

    def ds(self, s: complex, params: EMParams) -> complex:
        return hurwitz_zeta_ds(s, self.a, params)

    def error(self, s: complex, params: EMParams) -> float:
        return hurwitz_zeta_error(s, self.a, params)


@dataclass(frozen=True)
class GeometricKernel:
    """``sum_{j>=1} exp(-c2*j*s) = 1/(exp(c2*s) - 1)``; poles at ``2*pi*i*k/c2``."""

    c2: float

    def pole(self, s: complex) -> complex:
        k = round(s.imag * self.c2 / TWO_PI)
        return complex(0.0, TWO_PI * k / self.c2)

    def value(self, s: complex, params: EMParams) -> complex:
        return 1.0 / _expm1(self.c2 * s)

    def ds(self, s: complex, params: EMParams) -> complex:
        return -self.c2 * cmath.exp(self.c2 * s) / _expm1(self.c2 * s) ** 2

    def error(self, s: complex, params: EMParams) -> float:
        return 0.0


@dataclass(frozen=True)
class MonomialKernel:
    """Constant 1: the term is a single ``lambda^-s`` carried by its phase."""

    def pole(self, s: complex) -> Optional[complex]:
        return None

    def value(self, s: complex, params: EMParams) -> complex:
        return 1.0 + 0j

    def ds(self, s: complex, params: EMParams) -> complex:
        return 0j

    def error(self, s: complex, params: EMParams) -> float:
        return 0.0


Kernel = Union[RiemannKernel, HurwitzKernel, GeometricKernel, MonomialKernel]


@dataclass(frozen=True)
class Term:
    """``exp(-s*(log_scale + i*theta)) * kernel(s)``."""

    theta: float
    log_scale: float
    kernel: Kernel

    @property
    def exponent(self) -> complex:
        return complex(self.log_scale, self.theta)

    def phase(self, s: complex) -> complex:
        return cmath.exp(-s * self.exponent)


@dataclass(frozen=True)
class ZetaClosedForm:
    terms: tuple[Term, ...]
    cut: BranchCut
    params: EMParams = DEFAULT_PARAMS

    @property
    def has_pole_at_zero(self) -> bool:
        return any(isinstance(t.kernel, GeometricKernel) for t in self.terms)


@dataclass(frozen=True)
class DeterminantReport:
    classification: Classification
    cut: BranchCut
    zeta_prime_at_zero: Optional[complex] = None
    determinant: Optional[complex] = None
    error_estimate: float = 0.0

    @property
    def divergence(self) -> Optional[str]:
        """``"+inf"`` when the determinant diverges, else None."""
        return "+inf" if self.classification.tag is Tag.DIVERGENT else None


def _shifted_line_terms(line: ShiftedLine, cut: BranchCut) -> list[Term]:
    """Hurwitz terms for ``b + i*j``, j != 0, plus monomials for eigenvalues the cut separates.

    Upper eigenvalues are ``i*(j - i*b)``, lower ones ``-i*(j + i*b)``; once
    the asymptotic direction (+i or -i) is lifted into the branch, the tail
    ``j > J`` is ``exp(-i*phi*s) * zeta_H(s, J + 1 -+ i*b)``.  The first J
    eigenvalues sit on the far side of the cut from that direction (J = 0
    unless the cut passes between eigenvalues of the line) and get their own
    monomial terms, so every phase stays inside the branch.
    """
    b = line.b
    for d in (math.pi / 2, -math.pi / 2):
        if angle_to_cut(d, cut.beta) < SHIFTED_LINE_GUARD:
            raise OnBranchCut(
                f"cut beta={cut.beta!r} is within {SHIFTED_LINE_GUARD:g} of the shifted line's "
                "accumulation direction; the determinant is not defined for this cut"
            )
    terms = []
    for direction, sign in ((math.pi / 2, 1.0), (-math.pi / 2, -1.0)):
        phi = lift_angle(direction, cut)

        def eig(j: int) -> complex:
            return complex(b, sign * j)

        def separated(j: int) -> bool:
            # reduced point j -/+ i*b has principal argument in (-pi/2, pi/2)
            decomposed = phi + cmath.phase(complex(j, -sign * b))
            return abs(arg_in_branch(eig(j), cut) - decomposed) > math.pi

        J = 0
        if separated(1):
            hi = 2
            while separated(hi):
                hi *= 2
            lo = hi // 2  # separated(lo) holds, separated(hi) fails
            while hi - lo > 1:
                mid = (lo + hi) // 2
                lo, hi = (mid, hi) if separated(mid) else (lo, mid)
            J = lo
        for j in range(1, J + 1):
            z = eig(j)
            terms.append(Term(arg_in_branch(z, cut), math.log(abs(z)), MonomialKernel()))
        terms.append(Term(phi, 0.0, HurwitzKernel(complex(J + 1, -sign * b))))
    return terms


def build_zeta(spec: Spectrum, cut: BranchCut, params: EMParams | None = None) -> ZetaClosedForm:
    """Assemble the closed form of the spectral zeta function for one branch."""
    if classify(spec).tag is Tag.UNDEFINED:
        raise UndefinedZeta("spectrum has a logarithmic ray: the spectral zeta function is not defined")
    terms: list[Term] = []
    for comp in spec.components:
        if isinstance(comp, PowerRays):
            for alpha in comp.angles:
                terms.append(Term(lift_angle(alpha, cut), math.log(comp.c1), RiemannKernel(comp.c2)))
        elif isinstance(comp, ExponentialRay):
            terms.append(Term(lift_angle(comp.alpha, cut), math.log(comp.c1), GeometricKernel(comp.c2)))
        elif isinstance(comp, ShiftedLine):
            terms.extend(_shifted_line_terms(comp, cut))
        elif isinstance(comp, FiniteSet):
            for z in comp.eigenvalues:
                terms.append(Term(arg_in_branch(z, cut), math.log(abs(z)), MonomialKernel()))
        elif isinstance(comp, LogarithmicRay):  # pragma: no cover - excluded by classify
            raise UndefinedZeta("logarithmic ray")
        else:  # pragma: no cover
            raise TypeError(f"unknown spectrum component {comp!r}")
    return ZetaClosedForm(tuple(terms), cut, params or DEFAULT_PARAMS)


def _check_poles(form: ZetaClosedForm, s: complex) -> None:
    for t in form.terms:
        pole = t.kernel.pole(s)
        if pole is not None and abs(s - pole) <= POLE_GUARD:
            raise NearPole(f"s = {s} is within {POLE_GUARD:g} of a pole at {pole}", pole)


def eval_zeta(form: ZetaClosedForm, s: complex) -> complex:
    s = complex(s)
    _check_poles(form, s)
    return sum((t.phase(s) * t.kernel.value(s, form.params) for t in form.terms), 0j)


def eval_zeta_ds(form: ZetaClosedForm, s: complex) -> complex:
    """Analytic s-derivative of the closed form."""
    s = complex(s)
    _check_poles(form, s)
    total = 0j
    for t in form.terms:
        p = t.phase(s)
        total += p * (t.kernel.ds(s, form.params) - t.exponent * t.kernel.value(s, form.params))
    return total


def _zeta_prime_error(form: ZetaClosedForm) -> float:
    """Absolute error estimate for zeta'(0).

    Sum of the per-kernel estimates (value weighted by the phase slope) plus
    the change observed when the Euler-Maclaurin cutoff M is doubled.
    """
    err = 0.0
    for t in form.terms:
        err += abs(t.exponent) * t.kernel.error(0j, form.params) + t.kernel.error(0j, form.params)
    finer = ZetaClosedForm(form.terms, form.cut, EMParams(2 * form.params.M, form.params.K))
    return err + abs(eval_zeta_ds(finer, 0j) - eval_zeta_ds(form, 0j))


def zeta_prime_at_zero(form: ZetaClosedForm) -> complex:
    if form.has_pole_at_zero:
        raise DivergentAtZero("an exponential ray puts a pole of zeta at s = 0; zeta'(s) -> -inf as s -> 0+")
    return eval_zeta_ds(form, 0j)


def determinant(spec: Spectrum, cut: BranchCut, params: EMParams | None = None) -> DeterminantReport:
    """``det = exp(-zeta'(0))`` for the given branch, or a divergence report."""
    cls = classify(spec)
    if cls.tag is Tag.UNDEFINED:
        raise UndefinedZeta(cls.reason)
    form = build_zeta(spec, cut, params)
    if cls.tag is Tag.DIVERGENT:
        return DeterminantReport(cls, cut, error_estimate=math.inf)
    zp = zeta_prime_at_zero(form)
    det = cmath.exp(-zp)
    return DeterminantReport(cls, cut, zp, det, abs(det) * _zeta_prime_error(form))


def compare_cuts(spec: Spectrum, cut1: BranchCut, cut2: BranchCut, params: EMParams | None = None) -> complex:
    """``det(cut1) / det(cut2) = exp(-zeta_1'(0) + zeta_2'(0))``."""
    cls = classify(spec)
    if cls.tag is Tag.UNDEFINED:
        raise UndefinedZeta(cls.reason)
    if cls.tag is Tag.DIVERGENT:
        raise DivergentAtZero(cls.reason)
    z1 = zeta_prime_at_zero(build_zeta(spec, cut1, params))
    z2 = zeta_prime_at_zero(build_zeta(spec, cut2, params))
    return cmath.exp(-z1 + z2)
