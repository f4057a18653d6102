"""Acceptance gate: one check per criterion, each printing a PASS/FAIL line.

Run under pytest (the lines appear in the terminal summary) or directly:

    python tests/test_acceptance.py
"""

import cmath
import contextlib
import io
import json
import math
import sys
import tempfile
from pathlib import Path

import numpy as np
import pytest

from specdet import (
    BranchCut,
    ExponentialRay,
    FiniteSet,
    LogarithmicRay,
    PowerRays,
    ShiftedLine,
    Spectrum,
    build_zeta,
    compare_cuts,
    determinant,
    direct_zeta,
    divergence_witness,
    eval_zeta,
    exp_blowup_witness,
    fd_zeta_prime,
    hermite_check,
    hurwitz_zeta,
    riemann_zeta,
    zeta_prime_at_zero,
)
from specdet.cli import main as cli_main
from specdet.oracle import gaps_nondecaying
from specdet.spectrum import rays_crossed
from specdet.zetafuncs import riemann_zeta_ds

PI = math.pi
ANGLES = (PI / 3, PI, 3 * PI / 2)
THREE_RAYS = Spectrum.of(PowerRays(2.0, 3.0, ANGLES))
FINITE_EIGS = (1 + 1j, -2, 3j, -1 - 2j)

RESULTS: list[str] = []


def dwe(T):
    return Spectrum.of(PowerRays(PI / T, 1.0, (PI / 2, 3 * PI / 2)))


def rel(a, b):
    return abs(a - b) / abs(b)


def run_cli(command, doc):
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "job.json"
        path.write_text(json.dumps(doc), encoding="utf-8")
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = cli_main([command, "--config", str(path)])
    return code, buf.getvalue()


# each check returns (ok, detail)
def c1_dwe_negative_axis():
    errs = [rel(determinant(dwe(T), BranchCut(-PI)).determinant, 2 * T) for T in (1.0, 2.5)]
    return max(errs) <= 1e-9, f"max rel err {max(errs):.1e}"


def c2_dwe_positive_axis():
    errs = [rel(determinant(dwe(T), BranchCut(0.0)).determinant, -2 * T) for T in (1.0, 2.5)]
    return max(errs) <= 1e-9, f"max rel err {max(errs):.1e}"


def c3_power_ray_formula():
    expect = 2 ** (-1.5) * (2 * PI) ** 4.5 * cmath.exp(-0.5j * sum(ANGLES))
    got = determinant(THREE_RAYS, BranchCut(0.5)).determinant
    return abs(got - expect) <= 1e-9, f"|det - formula| = {abs(got - expect):.1e} (|det| = {abs(expect):.4g})"


def c4_sign_flip():
    ok, parts = True, []
    for n, beta in ((1, 2.0), (2, 4.0), (3, 5.0)):
        r = compare_cuts(THREE_RAYS, BranchCut(0.5), BranchCut(beta))
        ok &= rays_crossed(THREE_RAYS, 0.5, beta) == n and abs(r - (-1) ** n) <= 1e-9
        parts.append(f"n={n}: {r.real:+.12f}")
    return ok, ", ".join(parts)


def c5_shifted_line_ratio():
    errs = []
    for b in (0.25, 1.0):
        r = compare_cuts(Spectrum.of(ShiftedLine(b)), BranchCut(0.0), BranchCut(PI))
        errs.append(rel(r, -math.exp(2 * b * PI)))
    return max(errs) <= 1e-8, f"max rel err {max(errs):.1e}"


def c6_anchor_values():
    e1 = max(abs(hurwitz_zeta(0, 1 - 1j * b) - complex(-0.5, b)) for b in (0.5, 2.0))
    e2 = abs(riemann_zeta(0) + 0.5)
    e3 = abs(riemann_zeta_ds(0) + 0.5 * math.log(2 * PI))
    return e1 <= 1e-9 and max(e2, e3) <= 1e-10, f"errs {e1:.1e}, {e2:.1e}, {e3:.1e}"


def c7_exponential_divergence():
    code, _ = run_cli("classify", {"spectrum": [{"kind": "exp_ray", "c1": 1, "c2": 1, "alpha": 0}]})
    v = exp_blowup_witness(Spectrum.of(ExponentialRay(1, 1, 0)), [1e-1, 1e-2, 1e-3])
    monotone = v[0] < v[1] < v[2]
    big = v[2] > 1e6
    detail = f"exit {code}, monotone {monotone}, |zeta'(1e-3)| = {v[2]:.10g} (> 1e6: {big})"
    return code == 3 and monotone and big, detail


def c8_log_nonexistence():
    code, _ = run_cli("classify", {"spectrum": [{"kind": "log_ray", "c1": 1, "c2": math.e, "alpha": 0}]})
    sums = divergence_witness(Spectrum.of(LogarithmicRay(1, math.e, 0)), 2.0, [100, 1000, 10000])
    inc = sums[0] < sums[1] < sums[2]
    slow = gaps_nondecaying(sums)
    return code == 2 and inc and slow, f"exit {code}, sums {[round(x, 3) for x in sums]}"


def c9_finite_invariance():
    spec = Spectrum.of(FiniteSet(FINITE_EIGS))
    prod = np.prod(FINITE_EIGS)
    cuts = np.random.default_rng(7).uniform(-4 * PI, 4 * PI, size=8)
    errs = [rel(determinant(spec, BranchCut(b)).determinant, prod) for b in cuts]
    return max(errs) <= 1e-9, f"max rel err {max(errs):.1e} over 8 cuts"


def c10_oracle_equivalence():
    corpus = [
        (dwe(1.0), (-PI, 0.0)),
        (dwe(2.5), (-PI, 0.0)),
        (THREE_RAYS, (0.5, 2.0, 4.0, 5.0)),
        (Spectrum.of(ShiftedLine(0.25)), (0.0, PI)),
        (Spectrum.of(ShiftedLine(1.0)), (0.0, PI)),
        (Spectrum.of(FiniteSet(FINITE_EIGS)), (0.3, -2.0)),
    ]
    worst_val, worst_fd, ok = 0.0, 0.0, True
    for spec, cuts in corpus:
        for beta in cuts:
            cut = BranchCut(beta)
            form = build_zeta(spec, cut)
            for s in (2, 3, 3 + 1j):
                want = eval_zeta(form, s)
                diff = abs(direct_zeta(spec, cut, s).value - want)
                ok &= diff <= max(1e-7 * abs(want), 1e-9)
                worst_val = max(worst_val, diff / max(abs(want), 1e-2))
            fd = abs(fd_zeta_prime(form, 0) - zeta_prime_at_zero(form))
            ok &= fd <= 1e-6
            worst_fd = max(worst_fd, fd)
    return ok, f"worst value err {worst_val:.1e}, worst zeta'(0) err {worst_fd:.1e}"


def c11_hermite():
    errs = [abs(hermite_check(s, a) - hurwitz_zeta(s, a)) for s, a in ((0, 1 - 1j), (2, 1), (0.5, 1 - 0.5j))]
    return max(errs) <= 1e-8, f"max abs err {max(errs):.1e}"


CRITERIA = [
    (1, "DWE determinant, negative-axis cut = 2T", c1_dwe_negative_axis),
    (2, "DWE determinant, positive-axis cut = -2T", c2_dwe_positive_axis),
    (3, "power-ray closed form", c3_power_ray_formula),
    (4, "sign flip across n rays", c4_sign_flip),
    (5, "shifted-line ratio -exp(2b*pi)", c5_shifted_line_ratio),
    (6, "Hurwitz and Riemann anchor values", c6_anchor_values),
    (7, "exponential ray divergence", c7_exponential_divergence),
    (8, "logarithmic ray non-existence", c8_log_nonexistence),
    (9, "finite-set cut invariance", c9_finite_invariance),
    (10, "oracle equivalence", c10_oracle_equivalence),
    (11, "Hermite cross-check", c11_hermite),
]

# |d/ds 1/(e^s - 1)| = 1/s^2 - 1/12 + O(s^2), i.e. 999999.917 at s = 1e-3: the
# "> 1e6" threshold sits 1/12 above the exact value and cannot be met.
KNOWN_UNATTAINABLE = {7: "exact |zeta'(1e-3)| = 1e6 - 1/12 + O(1e-6) < 1e6"}


def evaluate(number, title, check):
    ok, detail = check()
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {title} -- {detail}"
    RESULTS.append(line)
    print(line)
    return ok


@pytest.mark.parametrize(
    "number, title, check",
    [
        pytest.param(*c, marks=pytest.mark.xfail(strict=True, reason=KNOWN_UNATTAINABLE[c[0]]))
        if c[0] in KNOWN_UNATTAINABLE
        else c
        for c in CRITERIA
    ],
    ids=[f"criterion_{c[0]:02d}" for c in CRITERIA],
)
def test_criterion(number, title, check):
    assert evaluate(number, title, check)


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria pass")
    sys.exit(0 if all(results) else 1)
