"""Riemann and Hurwitz zeta functions for complex arguments.

Continuation to the whole s-plane uses the Euler-Maclaurin formula

    zeta_H(s, a) = sum_{j<M} (j+a)^-s + (M+a)^(1-s)/(s-1) + (M+a)^-s / 2
                   + sum_{k=1..K} B_2k/(2k)! * (s)_(2k-1) * (M+a)^(-s-2k+1)

with ``(s)_n`` the rising factorial.  Each term is elementary in ``s``, so the
s-derivative is obtained by differentiating term by term.
"""

from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np
from scipy import integrate

from .errors import DomainError, LimitExceeded, PoleAtOne, QuadratureFailure, ValidationError

BERNOULLI_LIMIT = 60
POLE_TOL = 1e-12
_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class BernoulliTable:
    """Exact Bernoulli numbers ``B_0 .. B_n`` (convention ``B_1 = -1/2``)."""

    values: tuple[Fraction, ...]

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class EMParams:
    """Euler-Maclaurin cutoffs: ``M`` summed terms, ``K`` Bernoulli corrections."""

    M: int = 30
    K: int = 12

    def __post_init__(self):
        if int(self.M) != self.M or self.M < 1:
            raise ValidationError(f"M must be an integer >= 1, got {self.M!r}")
        if int(self.K) != self.K or not 1 <= self.K <= BERNOULLI_LIMIT // 2:
            raise ValidationError(f"K must be an integer in [1, 30], got {self.K!r}")

    @classmethod
    def from_env(cls, var: str = "SPECDET_EM_PARAMS") -> "EMParams":
        """Read ``"M,K"`` from the environment, falling back to the defaults."""
        raw = os.environ.get(var)
        if not raw:
            return cls()
        try:
            m, k = (int(p) for p in raw.split(","))
        except ValueError:
            raise ValidationError(f"{var} must look like 'M,K', got {raw!r}") from None
        return cls(m, k)


DEFAULT_PARAMS = EMParams()


@lru_cache(maxsize=None)
def bernoulli(upto: int) -> BernoulliTable:
    """Bernoulli numbers up to index ``upto`` from sum_{k<=n} C(n+1, k) B_k = 0."""
    if upto > BERNOULLI_LIMIT:
        raise LimitExceeded(f"Bernoulli table limited to index {BERNOULLI_LIMIT}, asked for {upto}")
    if upto < 0:
        raise ValidationError("upto must be non-negative")
    B = [Fraction(1)]
    for n in range(1, upto + 1):
        if n > 1 and n % 2 == 1:
            B.append(Fraction(0))
            continue
        acc = sum(comb(n + 1, k) * B[k] for k in range(n))
        B.append(-acc / (n + 1))
    return BernoulliTable(tuple(B))


@lru_cache(maxsize=None)
def _em_coefficients(K: int) -> tuple[float, ...]:
    """``B_2k / (2k)!`` for k = 1..K as floats."""
    table = bernoulli(2 * K)
    return tuple(float(table[2 * k] / math.factorial(2 * k)) for k in range(1, K + 1))


def _check_args(s: complex, a: complex) -> None:
    if abs(s - 1) < POLE_TOL:
        raise PoleAtOne(f"zeta has a pole at s = 1 (got s = {s})")
    if a.real <= 0:
        raise DomainError(f"Hurwitz parameter needs Re a > 0, got a = {a}")


def _euler_maclaurin(s: complex, a: complex, params: EMParams):
    """Return ``(value, d/ds value, error estimate)``."""
    M, K = params.M, params.K
    w = np.arange(M, dtype=float) + a
    logw = np.log(w.astype(complex))
    head = np.exp(-s * logw)
    val = head.sum()
    dval = -(logw * head).sum()
    mag = float(np.abs(head).sum())

    N = M + a
    logN = cmath.log(N)
    Ns = cmath.exp(-s * logN)

    integral = N * Ns / (s - 1)
    val += integral + Ns / 2
    dval += -logN * integral - N * Ns / (s - 1) ** 2 - logN * Ns / 2
    mag += abs(integral) + abs(Ns) / 2

    # rising factorial (s)_n and its s-derivative, built one factor at a time
    p, dp = 1.0 + 0j, 0j
    n = 0
    power = Ns / N  # N^(-s-2k+1) at k = 1
    for k, c in enumerate(_em_coefficients(K), start=1):
        while n < 2 * k - 1:
            f = s + n
            dp = dp * f + p
            p = p * f
            n += 1
        term = c * p * power
        val += term
        dval += c * (dp * power - logN * p * power)
        mag += abs(term)
        power = power / (N * N)

    # first omitted correction, |B_2k/(2k)!| ~ 2/(2 pi)^2k, with the usual remainder factor
    omitted = 2.0 / (2 * math.pi) ** (2 * K + 2) * abs(p * (s + 2 * K - 1) * (s + 2 * K) * power)
    sig = s.real + 2 * K + 1
    factor = abs(s + 2 * K + 1) / sig if sig > 0 else 10.0
    err = omitted * factor + 4 * (M + K) * _EPS * mag
    return complex(val), complex(dval), err


def hurwitz_zeta(s: complex, a: complex, params: EMParams | None = None) -> complex:
    """Hurwitz zeta ``sum_{j>=0} (j+a)^-s``, continued in ``s``.

    Powers use the principal logarithm, which is unambiguous for ``Re a > 0``.
    """
    s, a = complex(s), complex(a)
    _check_args(s, a)
    return _euler_maclaurin(s, a, params or DEFAULT_PARAMS)[0]


def hurwitz_zeta_ds(s: complex, a: complex, params: EMParams | None = None) -> complex:
    """Partial derivative of :func:`hurwitz_zeta` with respect to ``s``."""
    s, a = complex(s), complex(a)
    _check_args(s, a)
    return _euler_maclaurin(s, a, params or DEFAULT_PARAMS)[1]


def hurwitz_zeta_error(s: complex, a: complex, params: EMParams | None = None) -> float:
    """Estimated absolute error of :func:`hurwitz_zeta` (truncation plus rounding)."""
    s, a = complex(s), complex(a)
    _check_args(s, a)
    return _euler_maclaurin(s, a, params or DEFAULT_PARAMS)[2]


def riemann_zeta(s: complex, params: EMParams | None = None) -> complex:
    return hurwitz_zeta(s, 1.0, params)


def riemann_zeta_ds(s: complex, params: EMParams | None = None) -> complex:
    return hurwitz_zeta_ds(s, 1.0, params)


def hermite_check(s: complex, a: complex, tol: float = 1e-12) -> complex:
    """Hurwitz zeta from Hermite's integral representation.

    Independent of the Euler-Maclaurin path; meant for cross-checking.  The
    ``sin(s*arctan(x/a)) / (a^2+x^2)^(s/2)`` factor is evaluated as
    ``((a - ix)^-s - (a + ix)^-s) / 2i``, which is the same quantity for real
    ``a`` and its analytic continuation for ``Re a > 0``.
    """
    s, a = complex(s), complex(a)
    _check_args(s, a)

    def f(x: float) -> complex:
        if x == 0.0:
            return s * a ** (-s - 1) / (2 * math.pi)
        num = (a - 1j * x) ** (-s) - (a + 1j * x) ** (-s)
        return num / (2j * math.expm1(2 * math.pi * x))

    # upper limit where the exp(-2 pi x) damping beats the algebraic growth
    grow = max(0.0, -s.real)
    X = 1.0
    while math.exp(-2 * math.pi * X) * (abs(a) + X) ** grow * math.exp(math.pi * abs(s.imag)) > 1e-14:
        X += 0.5
        if X > 200:
            raise QuadratureFailure("could not bound the Hermite integrand tail")

    re, err_re = integrate.quad(lambda x: f(x).real, 0.0, X, epsabs=tol, epsrel=tol, limit=400)
    im, err_im = integrate.quad(lambda x: f(x).imag, 0.0, X, epsabs=tol, epsrel=tol, limit=400)
    if max(err_re, err_im) > 100 * tol:
        raise QuadratureFailure(f"Hermite integral error {max(err_re, err_im):.3g} above tolerance {tol:.3g}")
    integral = complex(re, im)
    return 0.5 * a ** (-s) + a ** (1 - s) / (s - 1) + 2 * integral
