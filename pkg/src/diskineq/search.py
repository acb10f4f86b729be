"""Empirical sharpness probes.

``sweep_fa`` follows the ratio ``||f_a||_{b^{2p}} / ||f_a||_{h^p}`` as
``a`` increases to one and extrapolates to the limit.  ``extremal_search``
maximizes an inequality ratio over trigonometric polynomials with
restarted Nelder-Mead.
"""

from __future__ import annotations

import csv
import io
import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy.optimize import minimize

from . import constants
from .errors import NoConvergence
from .functions import FaFamily, TaylorPair, TaylorSeries, holomorphic, real_pair
from .inequal import ROUNDOFF, imag_part, real_part
from .norms import NormResult, bergman_norm, exact_mean, hardy_mean, hardy_norm, root_with_error
from .quad import QuadResult

log = logging.getLogger(__name__)

TARGETS = ("cp", "c4", "riesz_upper", "riesz_lower", "newt")
MAX_FAMILY_DEGREE = 32


# ------------------------------------------------------------------ f_a sweep


@dataclass
class SweepPoint:
    a: float
    ratio: float
    err_est: float
    error: str | None = None


@dataclass
class SweepResult:
    p: float
    points: list
    limit: float
    limit_err: float

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["a", "ratio", "err_est"])
        for pt in self.points:
            w.writerow([repr(pt.a), repr(pt.ratio), repr(pt.err_est)])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "points": [asdict(pt) for pt in self.points],
            "limit": self.limit,
            "limit_err": self.limit_err,
        }


def fa_ratio(a: float, p: float, tol: float = 1e-10) -> tuple[float, float]:
    """``||f_a||_{b^{2p}} / ||f_a||_{h^p}`` and a bound on its error."""
    f = FaFamily(a)
    b = bergman_norm(f, 2 * p, tol)
    h = hardy_norm(f, p, tol)
    ratio = b.value / h.value
    err = ratio * (b.err_est / b.value + h.err_est / h.value)
    return ratio, err


def richardson_limit(h, values) -> tuple[float, float]:
    """Polynomial extrapolation of ``values(h)`` to ``h = 0``.

    Uses the full polynomial through all points (Neville's scheme).  The
    error estimate is the change from dropping the coarsest point.
    """
    h = np.asarray(h, dtype=float)
    v = np.asarray(values, dtype=float)
    if h.size == 1:
        return float(v[0]), float("inf")

    def neville(hh, vv):
        t = list(vv)
        n = len(t)
        for k in range(1, n):
            for i in range(n - k):
                t[i] = (hh[i + k] * t[i] - hh[i] * t[i + 1]) / (hh[i + k] - hh[i])
        return t[0]

    full = neville(h, v)
    order = np.argsort(h)[::-1]  # coarsest first
    reduced = neville(h[order][1:], v[order][1:])
    return float(full), float(abs(full - reduced))


def sweep_fa(p: float, grid, tol: float = 1e-10) -> SweepResult:
    """Ratio curve over ``a`` in ``grid`` plus its extrapolated ``a -> 1`` limit.

    Points where quadrature hits its cap are kept with ``ratio = nan`` and
    the error message; the sweep continues.
    """
    if not p > 1:
        raise ValueError("p must exceed 1")
    grid = sorted(float(a) for a in grid)
    if any(not 0 <= a < 1 for a in grid):
        raise ValueError("all a must satisfy 0 <= a < 1")
    points = []
    for a in grid:
        try:
            r, e = fa_ratio(a, p, tol)
            points.append(SweepPoint(a, r, e))
        except NoConvergence as exc:
            log.warning("f_a sweep: no convergence at a=%g: %s", a, exc)
            points.append(SweepPoint(a, float("nan"), float("nan"), str(exc)))
    good = [pt for pt in points if pt.error is None]
    tail = good[-3:]
    if tail:
        limit, limit_err = richardson_limit([1 - pt.a for pt in tail], [pt.ratio for pt in tail])
    else:
        limit, limit_err = float("nan"), float("nan")
    return SweepResult(float(p), points, limit, limit_err)


# ------------------------------------------------------------ extremal search


@dataclass(frozen=True)
class FamilySpec:
    kind: str  # "fa_sweep" | "trig_poly"
    degree: int
    p: float
    target: str

    def __post_init__(self):
        if self.kind not in ("fa_sweep", "trig_poly"):
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.target not in TARGETS:
            raise ValueError(f"unknown target {self.target!r}")
        if not 0 <= self.degree <= MAX_FAMILY_DEGREE:
            raise ValueError(f"degree must lie in [0, {MAX_FAMILY_DEGREE}]")
        if self.kind == "fa_sweep" and self.target != "cp":
            raise ValueError("the f_a family only applies to the cp target")
        lower = {"cp": 1, "riesz_upper": 1, "riesz_lower": 1, "newt": 2}.get(self.target)
        if lower is not None and not (self.p > lower or (self.target == "newt" and self.p == 2)):
            raise ValueError(f"p={self.p} outside the range of target {self.target}")

    @property
    def n_params(self) -> int:
        if self.kind == "fa_sweep":
            return 1
        per = 2 * (self.degree + 1)
        return 2 * per if self.target == "c4" else per

    def bound(self) -> float:
        """Value that the ratio can never exceed if the inequality is true."""
        t, p = self.target, self.p
        if t == "cp":
            return constants.carleman_C(p)
        if t == "c4":
            return constants.carleman_C(4)
        if t == "riesz_upper":
            return constants.riesz_R(p)
        if t == "riesz_lower":
            return 1.0 / constants.riesz_L(p)
        return 1.0

    def build(self, x):
        """Map a parameter vector to the function it encodes."""
        x = np.asarray(x, dtype=float)
        if self.kind == "fa_sweep":
            return FaFamily((1 - 1e-3) * math.sin(float(x[0])) ** 2)
        D = self.degree
        if self.target == "c4":
            g = x[: D + 1] + 1j * x[D + 1 : 2 * D + 2]
            h = x[2 * D + 2 : 3 * D + 3] + 1j * x[3 * D + 3 :]
            return TaylorPair(TaylorSeries(g), TaylorSeries(h))
        c = x[: D + 1] + 1j * x[D + 1 :]
        if self.target == "cp":
            return real_pair(TaylorSeries(c))
        if self.target == "riesz_upper":
            c = c.copy()
            c[0] = c[0].real
            return holomorphic(c)
        c = c.copy()
        c[0] = 0
        return holomorphic(c)


def _norm(f, p, space, tol, fast):
    if fast and f.bandwidth is not None and float(p).is_integer() and int(p) % 2 == 0:
        q = exact_mean(f, p, space)
        v, e = root_with_error(q, p)
        return NormResult(v, p, space, e, (q.N, q.M))
    fn = hardy_norm if space == "hardy" else bergman_norm
    return fn(f, p, tol, strict=False)


def family_ratio(spec: FamilySpec, f, tol: float = 1e-10, fast: bool = False) -> tuple[float, float]:
    """Ratio probed by ``spec.target`` for the function ``f``, with error estimate.

    ``fast`` swaps the adaptive rules for single exact rules where the
    integrand is a trigonometric polynomial.
    """
    p = spec.p
    t = spec.target
    if t in ("cp", "c4"):
        q = 4.0 if t == "c4" else p
        b = _norm(f, 2 * q, "bergman", tol, fast)
        h = _norm(f, q, "hardy", tol, fast)
        num, den = b, h
    elif t in ("riesz_upper", "riesz_lower"):
        nF = _norm(f, p, "hardy", tol, fast)
        nU = _norm(real_part(f), p, "hardy", tol, fast)
        num, den = (nF, nU) if t == "riesz_upper" else (nU, nF)
    else:
        a = hardy_mean(f, p, tol, strict=False)
        u = hardy_mean(real_part(f), p, tol, strict=False)
        v = hardy_mean(imag_part(f), p, tol, strict=False)
        nF, eF = root_with_error(a, p)
        s = QuadResult(u.value + v.value, u.err_est + v.err_est, 0)
        root, eR = root_with_error(s, p)
        k = constants.newt_constant(p)
        if p <= 4:
            ratio = nF / (k * root) if root > 0 else 0.0
        else:
            ratio = k * root / nF if nF > 0 else 0.0
        err = abs(ratio) * ((eF / nF if nF else 0) + (eR / root if root else 0))
        return ratio, err
    if den.value <= 0:
        return 0.0, 0.0
    ratio = num.value / den.value
    ratio = float(ratio)
    return ratio, ratio * (num.err_est / max(num.value, 1e-300) + den.err_est / den.value)


@dataclass
class SearchResult:
    best_ratio: float
    best_params: list
    evaluations: int
    seed: int
    restarts: int
    bound: float
    err_est: float
    restart_ratios: list = field(default_factory=list)
    failed_restarts: list = field(default_factory=list)
    counterexample: dict | None = None

    def to_json(self) -> dict:
        return asdict(self)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("DISK_INEQ_THREADS", "1")))
    except ValueError:
        return 1


def _initial_point(spec: FamilySpec, rng) -> np.ndarray:
    if spec.kind == "fa_sweep":
        return np.array([rng.uniform(0.2, 1.4)])
    x = rng.standard_normal(spec.n_params)
    f = spec.build(x)
    try:
        n = hardy_norm(f, 4.0 if spec.target == "c4" else spec.p, 1e-8, strict=False).value
    except Exception:
        n = 0.0
    return x / n if n > 0 else x


def _one_restart(spec: FamilySpec, x0: np.ndarray, tol: float, maxiter: int):
    evals = 0

    def objective(x):
        nonlocal evals
        evals += 1
        if spec.kind == "trig_poly":
            scale = np.linalg.norm(x)
            if scale == 0 or not np.isfinite(scale):
                return 0.0
            x = x / scale
        ratio, _ = family_ratio(spec, spec.build(x), tol, fast=True)
        return -ratio if np.isfinite(ratio) else 0.0

    res = minimize(
        objective, x0, method="Nelder-Mead",
        options={"maxiter": maxiter, "maxfev": maxiter, "xatol": 1e-10, "fatol": 1e-13, "adaptive": True},
    )
    x = np.asarray(res.x)
    if spec.kind == "trig_poly" and np.linalg.norm(x) > 0:
        x = x / np.linalg.norm(x)
    return x, -float(res.fun), evals


def extremal_search(
    spec: FamilySpec,
    seed: int = 0,
    restarts: int = 20,
    tol: float = 1e-10,
    maxiter: int | None = None,
    threads: int | None = None,
) -> SearchResult:
    """Best ratio over ``restarts`` Nelder-Mead runs from seeded random starts.

    Ties between restarts go to the lowest restart index, so the result does
    not depend on how restarts are scheduled.
    """
    maxiter = maxiter or 400 * max(spec.n_params, 1)
    seeds = np.random.SeedSequence(seed).spawn(restarts)
    starts = [_initial_point(spec, np.random.default_rng(s)) for s in seeds]

    def job(x0):
        try:
            return _one_restart(spec, x0, tol, maxiter)
        except Exception as exc:  # a failed restart is recorded, not raised
            return exc

    threads = threads or _threads()
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            outcomes = list(pool.map(job, starts))
    else:
        outcomes = [job(x0) for x0 in starts]

    best = None
    ratios, failed, total = [], [], 0
    for i, out in enumerate(outcomes):
        if isinstance(out, Exception):
            failed.append({"restart": i, "error": repr(out)})
            ratios.append(float("nan"))
            continue
        x, ratio, evals = out
        total += evals
        ratios.append(ratio)
        if best is None or ratio > best[1]:
            best = (x, ratio)

    bound = spec.bound()
    if best is None:
        return SearchResult(float("nan"), [], total, seed, restarts, bound, float("nan"), ratios, failed)
    x, _ = best
    f = spec.build(x)
    ratio, err = family_ratio(spec, f, tol)
    err += ROUNDOFF * (abs(ratio) + abs(bound))
    result = SearchResult(ratio, [float(v) for v in x], total, seed, restarts, bound, err, ratios, failed)
    if ratio > bound + err:
        log.error("search exceeded the bound %.12g with ratio %.12g", bound, ratio)
        result.counterexample = {"function": f.to_json(), "ratio": ratio, "bound": bound, "err_est": err}
    return result
