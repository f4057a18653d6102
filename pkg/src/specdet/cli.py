"""``specdet`` command line: JSON job config in, text report or CSV out.

Example::

    specdet det --config dwe.json --beta -3.141592653589793
    specdet sweep --config dwe.json --out sweep.csv

Exit codes: 0 success, 1 error, 2 zeta function undefined, 3 determinant
divergent.  Codes 2 and 3 are results, not failures.
"""

from __future__ import annotations

import argparse
import cmath
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Optional, Sequence

from .branchlog import CUT_TOL, BranchCut, angle_to_cut
from .determinant import build_zeta, compare_cuts, determinant, eval_zeta
from .errors import (
    DivergentAtZero,
    OutsideConvergenceRegion,
    ParseError,
    SpecdetError,
    UndefinedZeta,
    UnsupportedSweep,
    ValidationError,
)
from .oracle import OracleConfig, direct_zeta, divergence_witness, exp_blowup_witness, fd_zeta_prime
from .spectrum import (
    ExponentialRay,
    FiniteSet,
    LogarithmicRay,
    PowerRays,
    ShiftedLine,
    Spectrum,
    Tag,
    classify,
    rays_crossed,
)
from .zetafuncs import EMParams

COMMANDS = ("classify", "zeta", "det", "compare", "sweep", "witness")
EXIT_OK, EXIT_ERROR, EXIT_UNDEFINED, EXIT_DIVERGENT = 0, 1, 2, 3


@dataclass(frozen=True)
class SweepGrid:
    start: float
    end: float
    steps: int

    def betas(self) -> list[float]:
        h = (self.end - self.start) / (self.steps - 1)
        return [self.start + i * h for i in range(self.steps - 1)] + [self.end]


@dataclass(frozen=True)
class JobConfig:
    spectrum: Spectrum
    command: Optional[str] = None
    cut: Optional[float] = None
    cut2: Optional[float] = None
    sweep: Optional[SweepGrid] = None
    points: tuple[complex, ...] = ()
    oracle: bool = False
    out: Optional[str] = None
    witness_s: float = 2.0
    checkpoints: tuple[int, ...] = (100, 1000, 10000)
    s_values: tuple[float, ...] = (1e-1, 1e-2, 1e-3)


# ---------------------------------------------------------------- parsing

def _num(obj: dict, key: str, where: str, default: Any = ...) -> float:
    if key not in obj:
        if default is ...:
            raise ValidationError(f"{where}: missing required field '{key}'")
        return default
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ValidationError(f"{where}.{key}: expected a number, got {v!r}")
    return float(v)


def _complex(v: Any, where: str) -> complex:
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        return complex(v)
    if isinstance(v, list) and len(v) == 2 and all(isinstance(x, (int, float)) for x in v):
        return complex(v[0], v[1])
    raise ValidationError(f"{where}: expected a number or [re, im], got {v!r}")


def _component(obj: Any, where: str):
    if not isinstance(obj, dict):
        raise ValidationError(f"{where}: component must be an object")
    kind = obj.get("kind")
    try:
        if kind == "finite":
            eigs = obj.get("eigenvalues")
            if not isinstance(eigs, list):
                raise ValidationError("'eigenvalues' must be a list of [re, im] pairs")
            return FiniteSet(tuple(_complex(z, f"{where}.eigenvalues[{i}]") for i, z in enumerate(eigs)))
        if kind == "power_rays":
            angles = obj.get("angles")
            if not isinstance(angles, list):
                raise ValidationError("'angles' must be a list of radians")
            return PowerRays(_num(obj, "c1", where), _num(obj, "c2", where), tuple(angles))
        if kind == "exp_ray":
            return ExponentialRay(_num(obj, "c1", where), _num(obj, "c2", where), _num(obj, "alpha", where, 0.0))
        if kind == "log_ray":
            return LogarithmicRay(_num(obj, "c1", where), _num(obj, "c2", where), _num(obj, "alpha", where, 0.0))
        if kind == "shifted_line":
            return ShiftedLine(_num(obj, "b", where))
    except ValidationError as exc:
        msg = str(exc)
        raise ValidationError(msg if msg.startswith(where) else f"{where}: {msg}") from None
    raise ValidationError(
        f"{where}.kind: expected one of finite, power_rays, exp_ray, log_ray, shifted_line; got {kind!r}"
    )


def _check_cut(spec: Spectrum, beta: float, where: str) -> None:
    for a in spec.ray_angles():
        if angle_to_cut(a, beta) < CUT_TOL:
            raise ValidationError(f"{where}: cut lies on eigenvalue ray (angle {a!r})")
    for c in spec.components:
        if isinstance(c, FiniteSet):
            for z in c.eigenvalues:
                if angle_to_cut(cmath.phase(z), beta) < CUT_TOL:
                    raise ValidationError(f"{where}: cut lies on eigenvalue {z!r}")


def parse_config(text: str) -> JobConfig:
    """Parse and validate a JSON job document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object", 1, 1)

    comps = doc.get("spectrum")
    if not isinstance(comps, list) or not comps:
        raise ValidationError("spectrum: must be a non-empty list of components")
    spectrum = Spectrum(tuple(_component(c, f"spectrum[{i}]") for i, c in enumerate(comps)))

    command = doc.get("command")
    if command is not None and command not in COMMANDS:
        raise ValidationError(f"command: expected one of {', '.join(COMMANDS)}; got {command!r}")

    cuts = {}
    for key, alias in (("cut", "beta"), ("cut2", "beta2")):
        if doc.get(key) is not None and doc.get(alias) is not None:
            raise ValidationError(f"config: give either '{key}' or '{alias}', not both")
        name = alias if doc.get(alias) is not None else key
        if doc.get(name) is not None:
            cuts[key] = _num(doc, name, "config")
            _check_cut(spectrum, cuts[key], name)

    sweep = None
    if doc.get("sweep") is not None:
        sw = doc["sweep"]
        if not isinstance(sw, dict):
            raise ValidationError("sweep: must be an object {from, to, steps}")
        steps = sw.get("steps")
        if not isinstance(steps, int) or isinstance(steps, bool) or steps < 2:
            raise ValidationError("sweep.steps: grid steps must be an integer >= 2")
        sweep = SweepGrid(_num(sw, "from", "sweep"), _num(sw, "to", "sweep"), steps)
        _check_cut(spectrum, sweep.start, "sweep.from")
        _check_cut(spectrum, sweep.end, "sweep.to")

    points = doc.get("points", [])
    if not isinstance(points, list):
        raise ValidationError("points: must be a list of [re, im] pairs")
    oracle = doc.get("oracle", False)
    if not isinstance(oracle, bool):
        raise ValidationError("oracle: must be true or false")

    extra = {}
    wit = doc.get("witness")
    if wit is not None:
        if not isinstance(wit, dict):
            raise ValidationError("witness: must be an object")
        if "s" in wit:
            extra["witness_s"] = _num(wit, "s", "witness")
        if "checkpoints" in wit:
            extra["checkpoints"] = tuple(int(n) for n in wit["checkpoints"])
        if "s_values" in wit:
            extra["s_values"] = tuple(float(v) for v in wit["s_values"])

    out = doc.get("out")
    return JobConfig(
        spectrum=spectrum,
        command=command,
        cut=cuts.get("cut"),
        cut2=cuts.get("cut2"),
        sweep=sweep,
        points=tuple(_complex(p, f"points[{i}]") for i, p in enumerate(points)),
        oracle=oracle,
        out=str(out) if out is not None else None,
        **extra,
    )


# ---------------------------------------------------------------- running

def fmt(x: float) -> str:
    """Fixed CSV float format: 15 significant digits, lowercase exponent."""
    return f"{x + 0.0:.15g}"  # + 0.0 folds -0 into 0


def fmt_complex(z: complex, digits: int = 9) -> str:
    re = round(z.real, digits) + 0.0
    im = round(z.imag, digits) + 0.0
    sign = "-" if im < 0 else "+"
    return f"{re:.{digits}f} {sign} {abs(im):.{digits}f}i"


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _need(value, what: str, command: str):
    if value is None:
        raise ValidationError(f"command '{command}' needs {what}")
    return value


def _classify(job: JobConfig, params: EMParams, out) -> int:
    cls = classify(job.spectrum)
    print(f"classification: {cls.tag.value}", file=out)
    print(f"reason: {cls.reason}", file=out)
    return {Tag.DEFINED: EXIT_OK, Tag.DIVERGENT: EXIT_DIVERGENT, Tag.UNDEFINED: EXIT_UNDEFINED}[cls.tag]


def _det(job: JobConfig, params: EMParams, out) -> int:
    cut = BranchCut(_need(job.cut, "a cut (config 'cut' or --beta)", "det"))
    rep = determinant(job.spectrum, cut, params)
    print(f"classification: {rep.classification.tag.value}", file=out)
    print(f"cut: beta = {cut.beta:.12g}", file=out)
    if rep.determinant is None:
        print(f"det diverges to {rep.divergence}", file=out)
        print(f"reason: {rep.classification.reason}", file=out)
        return EXIT_DIVERGENT
    d = rep.determinant
    print(f"zeta'(0) = {fmt_complex(rep.zeta_prime_at_zero, 12)}", file=out)
    print(f"det = {fmt_complex(d)}", file=out)
    print(f"|det| = {abs(d):.12g}", file=out)
    print(f"arg(det) = {cmath.phase(d) + 0.0:.12g}", file=out)
    print(f"error estimate = {rep.error_estimate:.3e}", file=out)
    if job.oracle:
        fd = fd_zeta_prime(build_zeta(job.spectrum, cut, params), 0.0)
        print(f"oracle zeta'(0) (finite difference) = {fmt_complex(fd, 12)}", file=out)
        print(f"oracle |difference| = {abs(fd - rep.zeta_prime_at_zero):.3e}", file=out)
    return EXIT_OK


def _compare(job: JobConfig, params: EMParams, out) -> int:
    c1 = BranchCut(_need(job.cut, "a first cut (config 'cut' or --beta)", "compare"))
    c2 = BranchCut(_need(job.cut2, "a second cut (config 'cut2' or --beta2)", "compare"))
    cls = classify(job.spectrum)
    if cls.tag is Tag.DIVERGENT:
        print("det diverges to +inf for every cut; no ratio", file=out)
        print(f"reason: {cls.reason}", file=out)
        return EXIT_DIVERGENT
    ratio = compare_cuts(job.spectrum, c1, c2, params)
    print(f"cuts: beta1 = {c1.beta:.12g}, beta2 = {c2.beta:.12g}", file=out)
    print(f"ratio = {fmt_complex(ratio)}", file=out)
    try:
        n = rays_crossed(job.spectrum, c1.beta, c2.beta)
        print(f"rays crossed (beta1 -> beta2) = {n}", file=out)
    except UnsupportedSweep:
        print("rays crossed: n/a (sweep passes a shifted line's eigenvalue arc)", file=out)
    return EXIT_OK


def _sweep(job: JobConfig, params: EMParams) -> tuple[int, str]:
    grid = _need(job.sweep, "a sweep grid {from, to, steps}", "sweep")
    cls = classify(job.spectrum)
    if cls.tag is not Tag.DEFINED:
        raise UndefinedZeta(cls.reason) if cls.tag is Tag.UNDEFINED else DivergentAtZero(cls.reason)

    def row(beta: float) -> list[str]:
        d = determinant(job.spectrum, BranchCut(beta), params).determinant
        try:
            n = str(rays_crossed(job.spectrum, grid.start, beta))
        except UnsupportedSweep:
            n = ""
        return [fmt(beta), fmt(d.real), fmt(d.imag), fmt(abs(d)), n]

    with ThreadPoolExecutor() as pool:
        rows = list(pool.map(row, grid.betas()))  # map keeps grid order
    return EXIT_OK, _csv_text(["beta", "re_det", "im_det", "abs_det", "crossings"], rows)


def _zeta(job: JobConfig, params: EMParams) -> tuple[int, str]:
    cut = BranchCut(_need(job.cut, "a cut (config 'cut' or --beta)", "zeta"))
    if not job.points:
        raise ValidationError("command 'zeta' needs evaluation points ('points')")
    form = build_zeta(job.spectrum, cut, params)
    header = ["s_re", "s_im", "zeta_re", "zeta_im"]
    if job.oracle:
        header += ["oracle_re", "oracle_im", "oracle_err"]
    rows = []
    for s in job.points:
        z = eval_zeta(form, s)
        r = [fmt(s.real), fmt(s.imag), fmt(z.real), fmt(z.imag)]
        if job.oracle:
            try:
                o = direct_zeta(job.spectrum, cut, s, OracleConfig())
                r += [fmt(o.value.real), fmt(o.value.imag), fmt(o.error)]
            except OutsideConvergenceRegion:
                r += ["", "", ""]
        rows.append(r)
    return EXIT_OK, _csv_text(header, rows)


def _witness(job: JobConfig, params: EMParams) -> tuple[int, str]:
    spec = job.spectrum
    if spec.has(LogarithmicRay):
        sums = divergence_witness(spec, job.witness_s, job.checkpoints)
        rows = [[str(n), fmt(v)] for n, v in zip(job.checkpoints, sums)]
        return EXIT_OK, _csv_text(["N", "partial_sum"], rows)
    if spec.has(ExponentialRay):
        cut = BranchCut(job.cut) if job.cut is not None else None
        vals = exp_blowup_witness(spec, job.s_values, cut)
        rows = [[fmt(s), fmt(v)] for s, v in zip(job.s_values, vals)]
        return EXIT_OK, _csv_text(["s", "abs_zeta_prime"], rows)
    raise ValidationError("command 'witness' needs a log_ray or exp_ray component")


def run(job: JobConfig, params: EMParams | None = None, stdout=None) -> int:
    """Execute a validated job and return the process exit code."""
    out = stdout or sys.stdout
    params = params or EMParams.from_env()
    command = _need(job.command, "a command", "run")
    try:
        if command == "classify":
            return _classify(job, params, out)
        if command == "det":
            return _det(job, params, out)
        if command == "compare":
            return _compare(job, params, out)
        code, text = {"sweep": _sweep, "zeta": _zeta, "witness": _witness}[command](job, params)
    except UndefinedZeta as exc:
        print(f"spectral zeta function is not defined: {exc}", file=out)
        return EXIT_UNDEFINED
    except DivergentAtZero as exc:
        print(f"det diverges to +inf: {exc}", file=out)
        return EXIT_DIVERGENT
    if job.out:
        Path(job.out).write_text(text, encoding="utf-8", newline="")
        print(f"wrote {job.out}", file=out)
    else:
        out.write(text)
    return code


def main(argv: Sequence[str] | None = None) -> int:
    ap = argparse.ArgumentParser(prog="specdet", description="Zeta-regularized determinants with explicit branch cuts.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--config", required=True, help="JSON job file")
    ap.add_argument("--out", default=None, help="write CSV output here instead of stdout")
    ap.add_argument("--oracle", action="store_true", help="add brute-force cross-checks")
    ap.add_argument("--beta", type=float, default=None, help="cut angle (overrides config 'cut')")
    ap.add_argument("--beta2", type=float, default=None, help="second cut angle (overrides config 'cut2')")
    args = ap.parse_args(argv)

    try:
        text = Path(args.config).read_text(encoding="utf-8")
        job = parse_config(text)
        changes: dict[str, Any] = {"command": args.command}
        for key, val in (("cut", args.beta), ("cut2", args.beta2)):
            if val is not None:
                _check_cut(job.spectrum, val, f"--{'beta' if key == 'cut' else 'beta2'}")
                changes[key] = val
        if args.out is not None:
            changes["out"] = args.out
        if args.oracle:
            changes["oracle"] = True
        return run(replace(job, **changes))
    except (SpecdetError, OSError) as exc:
        msg = " ".join(str(exc).split())
        print(f"ERROR: {type(exc).__name__}: {msg}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
