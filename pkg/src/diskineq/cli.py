"""Command-line front end.

Exit codes: 0 when every applicable check passes, 2 on a margin failure
(the offending report is included in the output), 1 on usage or runtime
errors.  Output is deterministic for a fixed invocation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from . import constants, inequal, search
from .errors import DiskIneqError
from .functions import TaylorPair, as_harmonic, as_series, parse_function
from .norms import bergman_norm, hardy_norm
from .quad import DEFAULT_TOL
from .suite import THEOREMS, run_suite

EXIT_OK, EXIT_ERROR, EXIT_FAIL = 0, 1, 2

# Theorems whose single-function check needs an exponent, with its default.
DEFAULT_P = {"cp": 2.0, "riesz": 2.0, "hed": 3.0, "newt": 4.0, "ipl": 1.0, "lemma-new": 3.0, "green": 3.0}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    subcommand: str
    func: dict | None = None
    p: float | None = None
    eps: float | None = None
    tol: float = DEFAULT_TOL
    suite: str | None = None
    count: int | None = None
    seed: int | None = None
    degree: int | None = None
    output: str | None = None
    format: str = "json"
    extra: dict | None = None

    def __post_init__(self):
        if not self.tol > 0:
            raise UsageError("--tol must be positive")
        if self.suite is not None and self.seed is None:
            raise UsageError("--seed is required for randomized suites")

    def to_json(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None}


def _load_func(text: str | None):
    if text is None:
        return None
    stripped = text.strip()
    if not stripped.startswith("{"):
        path = Path(text)
        if not path.is_file():
            raise UsageError(f"--func is neither inline JSON nor an existing file: {text}")
        stripped = path.read_text()
    try:
        obj = json.loads(stripped)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid function JSON: {exc}") from None
    try:
        parse_function(obj)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"invalid function descriptor: {exc}") from None
    return obj


def _complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError:
        raise UsageError(f"cannot parse complex number {text!r}") from None


def _floats(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"cannot parse number list {text!r}") from None


def _clean(obj):
    """Replace non-finite floats so the output is strict JSON."""
    if isinstance(obj, float):
        if math.isfinite(obj):
            return obj
        return None if math.isnan(obj) else ("inf" if obj > 0 else "-inf")
    if isinstance(obj, (np.floating, np.integer)):
        return _clean(obj.item())
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def _emit(text: str, output: str | None):
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_json(payload: dict, output: str | None):
    _emit(json.dumps(_clean(payload), indent=2) + "\n", output)


def _emit_csv(header, rows, output):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([repr(float(v)) for v in row])
    _emit(buf.getvalue(), output)


# ------------------------------------------------------------ subcommands


def _cmd_norm(args) -> int:
    if args.func is None:
        raise UsageError("norm needs --func")
    cfg = RunConfig("norm", func=_load_func(args.func), p=args.p, tol=args.tol,
                    output=args.output, extra={"space": args.space})
    f = parse_function(cfg.func)
    fn = hardy_norm if args.space == "hardy" else bergman_norm
    res = fn(f, args.p, args.tol)
    _emit_json({"config": cfg.to_json(), "result": res.to_json()}, args.output)
    return EXIT_OK


def _cmd_constants(args) -> int:
    cfg = RunConfig("constants", p=args.p, output=args.output)
    _emit_json({"config": cfg.to_json(), "result": constants.table(args.p).to_json()}, args.output)
    return EXIT_OK


def _single_report(thm: str, f, p, eps, tol, z, r):
    if thm == "isoper":
        return inequal.check_isoperimetric(f, tol)
    if thm == "carleman-exp":
        return inequal.check_carleman_exp(f, tol)
    if thm == "cp":
        return inequal.check_thm_cp(f, p, tol)
    if thm == "c4":
        return inequal.check_thm_c4(f, tol)
    if thm == "riesz":
        return inequal.check_riesz(f, p, tol)
    if thm == "hed":
        return inequal.check_bergman_riesz(f, p, tol)
    if thm == "newt":
        return inequal.check_newt(f, p, tol)
    if thm in ("ipl", "abx"):
        if not isinstance(f, TaylorPair):
            raise UsageError(f"{thm} needs a taylor_pair descriptor holding the two series as g and h")
        if thm == "ipl":
            return inequal.check_ipl(f.g, f.h, p, tol)
        return inequal.combine("abx", {}, inequal.abx_trace(f.g, f.h, tol)[3])
    F = as_series(as_harmonic(f))
    if thm == "lemma-new":
        return inequal.check_lemma_new(F, p, eps, z)
    fam = inequal.EpsFamily(eps, p)

    def lap(w):
        return inequal.eps_laplacians(F, fam, w)[0]

    return inequal.green_check(lambda w: fam.F_eps(F(w)), r, lap)


def _cmd_verify(args) -> int:
    thm = args.thm
    p = args.p if args.p is not None else DEFAULT_P.get(thm)
    extra = {}
    if thm == "lemma-new":
        extra["z"] = args.z
    if thm == "green":
        extra["r"] = args.r
    cfg = RunConfig(
        "verify", func=_load_func(args.func), p=p, eps=args.eps, tol=args.tol,
        suite=args.suite, count=args.count if args.suite else None,
        seed=args.seed, degree=args.degree if args.suite else None,
        output=args.output, format=args.format, extra={"thm": thm, **extra},
    )
    if args.format != "json":
        raise UsageError("verify writes JSON only")
    if cfg.suite is not None:
        if cfg.func is not None:
            raise UsageError("--func and --suite are mutually exclusive")
        res = run_suite(thm, args.count, args.seed, args.degree, p, args.tol, args.eps)
        _emit_json({"config": cfg.to_json(), "suite": res.to_json()}, args.output)
        return EXIT_OK if res.ok else EXIT_FAIL
    if cfg.func is None:
        raise UsageError("verify needs --func or --suite random")
    f = parse_function(cfg.func)
    rep = _single_report(thm, f, p, args.eps, args.tol, _complex(args.z), args.r)
    _emit_json({"config": cfg.to_json(), "report": rep.to_json()}, args.output)
    return EXIT_FAIL if rep.passed is False else EXIT_OK


def _cmd_qsurface(args) -> int:
    cfg = RunConfig("qsurface", p=args.p, eps=args.eps, output=args.output, format=args.format,
                    extra={"r": args.r, "n_grid": args.n_grid})
    s = np.linspace(0.0, 2 * np.pi, args.n_grid, endpoint=False)
    q = inequal.q_value(s, args.r, args.eps, args.p)
    if args.format == "csv":
        _emit_csv(["s", "Q"], zip(s, q), args.output)
    else:
        _emit_json({"config": cfg.to_json(), "s": s.tolist(), "Q": np.asarray(q).tolist()}, args.output)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    gaps = _floats(args.gaps)
    cfg = RunConfig("sweep-fa", p=args.p, tol=args.tol, output=args.output, format=args.format,
                    extra={"gaps": gaps})
    res = search.sweep_fa(args.p, [1.0 - g for g in gaps], args.tol)
    if args.format == "csv":
        _emit(res.to_csv(), args.output)
    else:
        _emit_json({"config": cfg.to_json(), "result": res.to_json()}, args.output)
    return EXIT_OK


def _cmd_search(args) -> int:
    cfg = RunConfig("search", p=args.p, tol=args.tol, seed=args.seed, degree=args.degree,
                    output=args.output,
                    extra={"kind": args.kind, "target": args.target, "restarts": args.restarts,
                           "maxiter": args.maxiter})
    spec = search.FamilySpec(args.kind, args.degree, args.p, args.target)
    res = search.extremal_search(spec, args.seed, args.restarts, args.tol, args.maxiter)
    _emit_json({"config": cfg.to_json(), "result": res.to_json()}, args.output)
    return EXIT_FAIL if res.counterexample is not None else EXIT_OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="diskineq", description="Numerical checks of norm inequalities on the unit disk.")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def common(sp, tol=True):
        if tol:
            sp.add_argument("--tol", type=float, default=DEFAULT_TOL)
        sp.add_argument("--output", "-o")

    sp = sub.add_parser("norm", help="hardy or bergman norm of one function")
    sp.add_argument("--func")
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--space", choices=("hardy", "bergman"), default="hardy")
    common(sp)
    sp.set_defaults(run=_cmd_norm)

    sp = sub.add_parser("constants", help="constant table for an exponent")
    sp.add_argument("--p", type=float, required=True)
    common(sp, tol=False)
    sp.set_defaults(run=_cmd_constants)

    sp = sub.add_parser("verify", help="check one inequality on a function or a random suite")
    sp.add_argument("--thm", choices=THEOREMS, required=True)
    sp.add_argument("--func")
    sp.add_argument("--p", type=float)
    sp.add_argument("--eps", type=float, default=0.1)
    sp.add_argument("--z", default="0.3+0.2j", help="evaluation point for lemma-new")
    sp.add_argument("--r", type=float, default=0.8, help="radius for green")
    sp.add_argument("--suite", choices=("random",))
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--degree", type=int, default=8)
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    common(sp)
    sp.set_defaults(run=_cmd_verify)

    sp = sub.add_parser("qsurface", help="Q over the angular grid")
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--r", type=float, required=True)
    sp.add_argument("--eps", type=float, required=True)
    sp.add_argument("--n-grid", type=int, default=720)
    sp.add_argument("--format", choices=("json", "csv"), default="csv")
    common(sp, tol=False)
    sp.set_defaults(run=_cmd_qsurface)

    sp = sub.add_parser("sweep-fa", help="ratio curve along the f_a family")
    sp.add_argument("--p", type=float, default=2.0)
    sp.add_argument("--gaps", default="1e-1,1e-2,1e-3", help="comma-separated values of 1-a")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    common(sp)
    sp.set_defaults(run=_cmd_sweep)

    sp = sub.add_parser("search", help="Nelder-Mead search for large ratios")
    sp.add_argument("--kind", choices=("trig_poly", "fa_sweep"), default="trig_poly")
    sp.add_argument("--target", choices=search.TARGETS, default="cp")
    sp.add_argument("--degree", type=int, default=4)
    sp.add_argument("--p", type=float, default=2.0)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--restarts", type=int, default=20)
    sp.add_argument("--maxiter", type=int)
    common(sp)
    sp.set_defaults(run=_cmd_search)
    return ap


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "count", 1) is not None and getattr(args, "count", 1) < 1:
            raise UsageError("--count must be positive")
        return args.run(args)
    except UsageError as exc:
        print(f"diskineq: usage error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (DiskIneqError, ValueError, TypeError, ZeroDivisionError, OSError) as exc:
        print(f"diskineq: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
