"""Eigenvalue families, spectra, and the existence classifier."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .branchlog import CUT_TOL, TWO_PI, angle_to_cut
from .errors import CutOnRay, IndexOutOfRange, UnsupportedSweep, ValidationError


def _finite(name: str, value: float) -> float:
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise ValidationError(f"{name} must be a number, got {value!r}") from None
    if not math.isfinite(value):
        raise ValidationError(f"{name} must be finite, got {value!r}")
    return value


def _positive(name: str, value: float) -> float:
    value = _finite(name, value)
    if not value > 0:
        raise ValidationError(f"{name} must be positive, got {value!r}")
    return value


@dataclass(frozen=True)
class FiniteSet:
    """Finitely many nonzero eigenvalues."""

    eigenvalues: tuple[complex, ...]

    kind = "finite"

    def __post_init__(self):
        eigs = tuple(complex(z) for z in self.eigenvalues)
        if not eigs:
            raise ValidationError("finite set needs at least one eigenvalue")
        for z in eigs:
            if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                raise ValidationError(f"eigenvalue {z!r} is not finite")
            if z == 0:
                raise ValidationError("zero eigenvalue: the determinant would vanish and log 0 is undefined")
        object.__setattr__(self, "eigenvalues", eigs)

    def eigenvalues_upto(self, count: int) -> list[complex]:
        if count > len(self.eigenvalues):
            raise IndexOutOfRange(f"finite set holds {len(self.eigenvalues)} eigenvalues, asked for {count}")
        return list(self.eigenvalues[:count])


@dataclass(frozen=True)
class PowerRays:
    """``c1 * j**c2 * exp(i*alpha_l)`` for j >= 1 on each ray angle ``alpha_l``."""

    c1: float
    c2: float
    angles: tuple[float, ...]

    kind = "power_rays"

    def __post_init__(self):
        object.__setattr__(self, "c1", _positive("c1", self.c1))
        object.__setattr__(self, "c2", _positive("c2", self.c2))
        angles = tuple(_finite("angle", a) for a in self.angles)
        if not angles:
            raise ValidationError("power rays need at least one angle")
        if any(not 0 <= a < TWO_PI for a in angles):
            raise ValidationError("ray angles must lie in [0, 2*pi)")
        if any(b <= a for a, b in zip(angles, angles[1:])):
            raise ValidationError("ray angles must be strictly increasing")
        object.__setattr__(self, "angles", angles)

    def ray_angles(self) -> tuple[float, ...]:
        return self.angles

    def eigenvalues_upto(self, count: int) -> list[complex]:
        # j-major: all rays at j = 1, then j = 2, ...
        j = np.arange(1, count // len(self.angles) + 2, dtype=float)
        mod = self.c1 * j**self.c2
        return [complex(m * np.exp(1j * a)) for m in mod for a in self.angles][:count]


@dataclass(frozen=True)
class ExponentialRay:
    """``c1 * exp(c2*j) * exp(i*alpha)`` for j >= 1."""

    c1: float
    c2: float
    alpha: float

    kind = "exp_ray"

    def __post_init__(self):
        object.__setattr__(self, "c1", _positive("c1", self.c1))
        object.__setattr__(self, "c2", _positive("c2", self.c2))
        object.__setattr__(self, "alpha", _finite("alpha", self.alpha))

    def ray_angles(self) -> tuple[float, ...]:
        return (self.alpha,)

    def eigenvalues_upto(self, count: int) -> list[complex]:
        j = np.arange(1, count + 1, dtype=float)
        return [complex(z) for z in self.c1 * np.exp(self.c2 * j) * np.exp(1j * self.alpha)]


@dataclass(frozen=True)
class LogarithmicRay:
    """``c1 * log(c2*j) * exp(i*alpha)``.

    Indexing starts at the first j with positive modulus: j = 1 when c2 > 1,
    j = 2 when c2 == 1.
    """

    c1: float
    c2: float
    alpha: float

    kind = "log_ray"

    def __post_init__(self):
        object.__setattr__(self, "c1", _positive("c1", self.c1))
        c2 = _finite("c2", self.c2)
        if c2 < 1:
            raise ValidationError(f"c2 must be >= 1 for a logarithmic ray, got {c2!r}")
        object.__setattr__(self, "c2", c2)
        object.__setattr__(self, "alpha", _finite("alpha", self.alpha))

    @property
    def first_index(self) -> int:
        return 1 if self.c2 > 1 else 2

    def ray_angles(self) -> tuple[float, ...]:
        return (self.alpha,)

    def moduli(self, count: int) -> np.ndarray:
        j = np.arange(self.first_index, self.first_index + count, dtype=float)
        return self.c1 * np.log(self.c2 * j)

    def eigenvalues_upto(self, count: int) -> list[complex]:
        return [complex(z) for z in self.moduli(count) * np.exp(1j * self.alpha)]


@dataclass(frozen=True)
class ShiftedLine:
    """``b + i*j`` for nonzero integers j, ordered j = 1, -1, 2, -2, ..."""

    b: float

    kind = "shifted_line"

    def __post_init__(self):
        b = _finite("b", self.b)
        if b < 0:
            raise ValidationError(f"b must be >= 0, got {b!r}")
        object.__setattr__(self, "b", b)

    def eigenvalues_upto(self, count: int) -> list[complex]:
        out = []
        j = 1
        while len(out) < count:
            out.append(complex(self.b, j))
            if len(out) < count:
                out.append(complex(self.b, -j))
            j += 1
        return out

    def arcs(self) -> tuple[tuple[float, float], tuple[float, float]]:
        """Closed arcs of eigenvalue arguments, upper and lower half-plane."""
        first = math.atan2(1.0, self.b)
        return (first, math.pi / 2), (-math.pi / 2, -first)


SpectrumComponent = Union[FiniteSet, PowerRays, ExponentialRay, LogarithmicRay, ShiftedLine]


@dataclass(frozen=True)
class Spectrum:
    """Disjoint union of eigenvalue families."""

    components: tuple[SpectrumComponent, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise ValidationError("spectrum needs at least one component")
        if sum(isinstance(c, ShiftedLine) for c in comps) > 1:
            raise ValidationError("at most one shifted_line component is supported")
        object.__setattr__(self, "components", comps)

    @classmethod
    def of(cls, *components: SpectrumComponent) -> "Spectrum":
        return cls(tuple(components))

    def ray_angles(self) -> list[float]:
        return [a for c in self.components if hasattr(c, "ray_angles") for a in c.ray_angles()]

    def has(self, kind: type) -> bool:
        return any(isinstance(c, kind) for c in self.components)


class Tag(str, enum.Enum):
    DEFINED = "DeterminantDefined"
    DIVERGENT = "DeterminantDivergent"
    UNDEFINED = "ZetaUndefined"


@dataclass(frozen=True)
class Classification:
    tag: Tag
    reason: str = field(default="")

    @property
    def defined(self) -> bool:
        return self.tag is Tag.DEFINED


_REASONS = {
    Tag.UNDEFINED: (
        "logarithmic-growth theorem: a ray with moduli at most c1*log(c2*j) makes the defining sum "
        "diverge for every real s > 0, so the spectral zeta function is not defined"
    ),
    Tag.DIVERGENT: (
        "exponential-growth theorem: with a ray c1*exp(c2*j)*exp(i*alpha) the zeta function has a "
        "pole at s = 0 and zeta'(s) -> -inf, so the spectral determinant diverges to +inf"
    ),
    Tag.DEFINED: (
        "power-growth / finite-crossing theorems: zeta continues meromorphically with s = 0 regular, "
        "det = exp(-zeta'(0)) is finite and depends on the branch cut only through ray crossings"
    ),
}


def classify(spec: Spectrum) -> Classification:
    """Decide whether zeta and the determinant exist.

    A logarithmic ray dominates an exponential one, which dominates all the
    families that admit a finite determinant.
    """
    if spec.has(LogarithmicRay):
        tag = Tag.UNDEFINED
    elif spec.has(ExponentialRay):
        tag = Tag.DIVERGENT
    else:
        tag = Tag.DEFINED
    return Classification(tag, _REASONS[tag])


def enumerate_eigenvalues(spec: Spectrum, count: int, component_index: int) -> list[complex]:
    """First ``count`` eigenvalues of one component in index order."""
    if count < 1:
        raise ValidationError("count must be >= 1")
    if not 0 <= component_index < len(spec.components):
        raise IndexOutOfRange(f"component index {component_index} out of range for {len(spec.components)} components")
    return spec.components[component_index].eigenvalues_upto(count)


def _images_between(angle: float, lo: float, hi: float) -> int:
    """Number of ``angle + 2*pi*k`` strictly inside ``(lo, hi)``."""
    return math.ceil((hi - angle) / TWO_PI) - math.floor((lo - angle) / TWO_PI) - 1


def rays_crossed(spec: Spectrum, beta_from: float, beta_to: float) -> int:
    """Signed count of eigenvalue rays swept when the cut turns from ``beta_from`` to ``beta_to``.

    Positive for counter-clockwise sweeps.  Finite sets do not count.  Sweeps
    through the eigenvalue arc of a shifted line are refused: the sign rule
    does not apply there.
    """
    rays = spec.ray_angles()
    for beta in (beta_from, beta_to):
        for a in rays:
            if angle_to_cut(a, beta) < CUT_TOL:
                raise CutOnRay(f"cut angle {beta!r} lies on the eigenvalue ray at {a!r}")
    lo, hi = sorted((beta_from, beta_to))
    for c in spec.components:
        if isinstance(c, ShiftedLine):
            for start, end in c.arcs():
                # arc [start, end] meets (lo, hi) iff some image of it overlaps
                k = math.floor((lo - end) / TWO_PI) + 1
                if start + TWO_PI * k < hi:
                    raise UnsupportedSweep(
                        "sweep passes through the eigenvalue arc of a shifted line; use compare_cuts instead"
                    )
    n = sum(_images_between(a, lo, hi) for a in rays)
    return n if beta_to >= beta_from else -n
