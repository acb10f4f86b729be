"""Seeded randomized suites running one checker over many functions.

Each function in a suite gets its own child seed spawned from the suite
seed, so results do not depend on evaluation order or on the number of
worker threads.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import inequal
from .functions import TaylorPair, TaylorSeries, holomorphic, real_pair
from .quad import DEFAULT_TOL

THEOREMS = (
    "isoper", "carleman-exp", "cp", "c4", "riesz", "hed", "newt",
    "ipl", "lemma-new", "green", "abx",
)


def _normal_complex(rng, n):
    return rng.standard_normal(n) + 1j * rng.standard_normal(n)


def random_series(rng, degree: int, vanish_at_zero: bool = False) -> TaylorSeries:
    """Polynomial of random degree ``<= degree`` with complex normal coefficients."""
    d = int(rng.integers(0, degree + 1))
    if vanish_at_zero:
        d = max(d, 1)
    c = _normal_complex(rng, d + 1)
    if vanish_at_zero:
        c[0] = 0
    return TaylorSeries(c)


def random_real(rng, degree: int) -> TaylorPair:
    return real_pair(random_series(rng, degree))


def random_pair(rng, degree: int) -> TaylorPair:
    return TaylorPair(random_series(rng, degree), random_series(rng, degree))


def random_point(rng, r_max: float = 0.99) -> complex:
    return complex(np.sqrt(rng.uniform(0, r_max**2)) * np.exp(2j * np.pi * rng.uniform()))


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("DISK_INEQ_THREADS", "1")))
    except ValueError:
        return 1


def run_one(thm: str, rng, degree: int, p: float | None, tol: float, eps: float = 0.1):
    """Draw one function of the class ``thm`` applies to and check it.

    Returns ``(function, report)``.
    """
    if thm == "isoper":
        f = holomorphic(random_series(rng, degree))
        return f, inequal.check_isoperimetric(f, tol)
    if thm == "carleman-exp":
        u = random_real(rng, degree)
        return u, inequal.check_carleman_exp(u, tol)
    if thm == "cp":
        u = random_real(rng, degree)
        return u, inequal.check_thm_cp(u, p, tol)
    if thm == "c4":
        f = random_pair(rng, degree)
        return f, inequal.check_thm_c4(f, tol)
    if thm == "riesz":
        F = holomorphic(random_series(rng, degree, vanish_at_zero=True))
        return F, inequal.check_riesz(F, p, tol)
    if thm == "hed":
        F = holomorphic(random_series(rng, degree, vanish_at_zero=True))
        return F, inequal.check_bergman_riesz(F, p, tol)
    if thm == "newt":
        F = holomorphic(random_series(rng, degree, vanish_at_zero=True))
        return F, inequal.check_newt(F, p, tol)
    if thm == "ipl":
        a, b = random_series(rng, degree), random_series(rng, degree)
        return TaylorPair(a, b), inequal.check_ipl(a, b, p, tol)
    if thm == "lemma-new":
        F = random_series(rng, degree)
        z = random_point(rng)
        return holomorphic(F), inequal.check_lemma_new(F, p, eps, z)
    if thm == "green":
        F = random_series(rng, degree)
        fam = inequal.EpsFamily(eps, p)
        r = float(rng.uniform(0.2, 0.9))

        def lap(z):
            return inequal.eps_laplacians(F, fam, z)[0]

        rep = inequal.green_check(lambda z: fam.F_eps(F(z)), r, lap)
        return holomorphic(F), rep
    if thm == "abx":
        g = random_series(rng, degree)
        h = random_series(rng, degree, vanish_at_zero=True)
        reports = inequal.abx_trace(g, h, tol)[3]
        return TaylorPair(g, h), inequal.combine("abx", {}, reports)
    raise ValueError(f"unknown theorem {thm!r}")


@dataclass
class SuiteResult:
    thm: str
    p: float | None
    count: int
    seed: int
    degree: int
    passed: int = 0
    failed: int = 0
    not_applicable: int = 0
    worst_margin: float = float("inf")
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {
            "thm": self.thm,
            "p": self.p,
            "count": self.count,
            "seed": self.seed,
            "degree": self.degree,
            "passed": self.passed,
            "failed": self.failed,
            "not_applicable": self.not_applicable,
            "worst_margin": self.worst_margin,
            "failures": self.failures,
        }


def run_suite(
    thm: str,
    count: int,
    seed: int,
    degree: int = 8,
    p: float | None = None,
    tol: float = DEFAULT_TOL,
    eps: float = 0.1,
    threads: int | None = None,
) -> SuiteResult:
    children = np.random.SeedSequence(seed).spawn(count)

    def job(ss):
        return run_one(thm, np.random.default_rng(ss), degree, p, tol, eps)

    threads = threads or _threads()
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            results = list(pool.map(job, children))
    else:
        results = [job(ss) for ss in children]

    out = SuiteResult(thm, p, count, seed, degree)
    for i, (f, rep) in enumerate(results):
        status = rep.passed
        if status is None:
            out.not_applicable += 1
            continue
        out.worst_margin = min(out.worst_margin, rep.margin)
        if status:
            out.passed += 1
        else:
            out.failed += 1
            out.failures.append({"index": i, "function": f.to_json(), "report": rep.to_json()})
    return out
