"""Checkers for the inequalities and identities, with signed margins.

Every checker returns an :class:`InequalityReport`.  ``margin`` is oriented
so that a nonnegative value means the inequality holds; a report passes when
``margin >= -err_est`` where ``err_est`` combines the propagated quadrature
error with a floating-point floor.  A report whose hypothesis is not met is
"not-applicable" rather than failed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from . import constants
from .errors import DegenerateZero, NotRealValued, OutOfRange, PreconditionFailed
from .functions import (
    EvalPoint,
    HarmonicFunction,
    Monomial,
    TaylorPair,
    TaylorSeries,
    as_harmonic,
    as_series,
    is_real,
    real_pair,
)
from .norms import NormResult, bergman_mean, bergman_norm, hardy_mean, hardy_norm, root_with_error
from .quad import DEFAULT_TOL, QuadResult, adaptive_circle, adaptive_disk, next_pow2

EPS = np.finfo(float).eps
ROUNDOFF = 64 * EPS
ZERO_TOL = 1e-14


@dataclass
class InequalityReport:
    name: str
    params: dict
    lhs: float
    rhs: float
    constant: float | None
    margin: float
    err_est: float
    hypothesis_ok: bool = True
    relation: str = "<="
    quadrature: dict = field(default_factory=lambda: {"N": 0, "M": 0, "err_est": 0.0})
    flags: list = field(default_factory=list)
    values: dict = field(default_factory=dict)
    parts: list = field(default_factory=list)

    @property
    def passed(self) -> bool | None:
        """``None`` when the hypothesis does not hold."""
        if not self.hypothesis_ok:
            return None
        if self.margin < -self.err_est:
            return False
        return all(p.passed is not False for p in self.parts)

    @property
    def status(self) -> str:
        return {True: "pass", False: "fail", None: "not-applicable"}[self.passed]

    def to_json(self) -> dict:
        d: dict[str, Any] = {
            "name": self.name,
            "params": self.params,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation": self.relation,
            "constant": self.constant,
            "margin": self.margin,
            "pass": self.passed if self.passed is not None else "not-applicable",
            "hypothesis_ok": self.hypothesis_ok,
            "quadrature": self.quadrature,
        }
        if self.flags:
            d["flags"] = list(self.flags)
        if self.values:
            d["values"] = self.values
        if self.parts:
            d["parts"] = [p.to_json() for p in self.parts]
        return d


def _quad_meta(*items) -> dict:
    N = M = 0
    converged = True
    for it in items:
        if isinstance(it, NormResult):
            N = max(N, it.nodes_used[0])
            M = max(M, it.nodes_used[1])
        elif isinstance(it, QuadResult):
            N = max(N, it.N)
            M = max(M, it.M)
        converged = converged and it.converged
    return {"N": N, "M": M, "err_est": 0.0, "converged": converged}


def make_report(
    name,
    params,
    lhs,
    rhs,
    *,
    lhs_err=0.0,
    rhs_err=0.0,
    constant=None,
    relation="<=",
    hypothesis_ok=True,
    quad=None,
    flags=(),
    values=None,
    parts=(),
    floor=None,
) -> InequalityReport:
    """Assemble a report for ``lhs <relation> rhs``.

    ``relation`` is ``"<="``, ``">="`` or ``"="``; for equalities the
    margin is ``-|lhs - rhs|``.
    """
    lhs, rhs = float(lhs), float(rhs)
    if relation == "<=":
        margin = rhs - lhs
    elif relation == ">=":
        margin = lhs - rhs
    elif relation == "=":
        margin = 0.0 - abs(lhs - rhs)
    else:
        raise ValueError(relation)
    if floor is None:
        floor = ROUNDOFF * (abs(lhs) + abs(rhs))
    err = float(lhs_err) + float(rhs_err) + float(floor)
    quad = dict(quad or {"N": 0, "M": 0})
    quad["err_est"] = err
    flags = list(flags)
    if not quad.pop("converged", True):
        flags.append("quadrature-cap")
    if lhs == 0.0 and rhs == 0.0 and "trivial" not in flags:
        flags.append("trivial")
    return InequalityReport(
        name=name,
        params=dict(params),
        lhs=lhs,
        rhs=rhs,
        constant=constant,
        margin=float(margin),
        err_est=err,
        hypothesis_ok=bool(hypothesis_ok),
        relation=relation,
        quadrature=quad,
        flags=flags,
        values=dict(values or {}),
        parts=list(parts),
    )


def combine(name, params, parts, *, hypothesis_ok=True, flags=(), values=None) -> InequalityReport:
    """Parent report whose margin is the tightest part (relative to its error)."""
    worst = min(parts, key=lambda r: r.margin + r.err_est)
    quad = {
        "N": max(p.quadrature["N"] for p in parts),
        "M": max(p.quadrature["M"] for p in parts),
        "err_est": worst.err_est,
    }
    flags = list(flags)
    if any("quadrature-cap" in p.flags for p in parts):
        flags.append("quadrature-cap")
    if all("trivial" in p.flags for p in parts):
        flags.append("trivial")
    return InequalityReport(
        name=name,
        params=dict(params),
        lhs=worst.lhs,
        rhs=worst.rhs,
        constant=worst.constant,
        margin=worst.margin,
        err_est=worst.err_est,
        hypothesis_ok=bool(hypothesis_ok),
        relation=worst.relation,
        quadrature=quad,
        flags=flags,
        values=dict(values or {}),
        parts=list(parts),
    )


class _Part(HarmonicFunction):
    """Real or imaginary part of a function, as a real-valued function."""

    def __init__(self, f: HarmonicFunction, which: str):
        self.f = f
        self.which = which
        self.bandwidth = f.bandwidth

    def values(self, z):
        w = self.f.values(z)
        return (w.real if self.which == "re" else w.imag).astype(complex)


def real_part(f) -> HarmonicFunction:
    f = as_harmonic(f)
    if f.holomorphic and isinstance(f, (TaylorPair, Monomial)):
        return real_pair(f)
    return _Part(f, "re")


def imag_part(f) -> HarmonicFunction:
    f = as_harmonic(f)
    if f.holomorphic and isinstance(f, (TaylorPair, Monomial)):
        return real_pair(as_series(f) * -1j)
    return _Part(f, "im")


def _require_holomorphic(F) -> HarmonicFunction:
    F = as_harmonic(F)
    if not F.holomorphic:
        raise PreconditionFailed("a holomorphic function is required")
    return F


def _require_real(u) -> HarmonicFunction:
    u = as_harmonic(u)
    if not is_real(u):
        raise NotRealValued("a real-valued harmonic function is required")
    return u


def _value_at_zero(F: HarmonicFunction) -> complex:
    return complex(F.values(np.zeros(1))[0])


def arg_hypothesis(f0: complex, angle: float) -> bool:
    """``|arg f(0) - pi/2| >= angle`` or ``f(0) = 0``; arg in ``(-pi, pi]``."""
    if abs(f0) <= ZERO_TOL:
        return True
    arg = math.atan2(f0.imag, f0.real)
    if arg == -math.pi:
        arg = math.pi
    return abs(arg - math.pi / 2) >= angle


# ---------------------------------------------------------------- norm based


def check_isoperimetric(f, tol: float = DEFAULT_TOL) -> InequalityReport:
    """``int_U |f|^2 dsigma <= (int_T |f|)^2`` for holomorphic ``f``."""
    f = _require_holomorphic(f)
    lhs = bergman_mean(f, 2, tol, strict=False)
    h1 = hardy_mean(f, 1, tol, strict=False)
    rhs = h1.value**2
    rhs_err = 2 * abs(h1.value) * h1.err_est + h1.err_est**2
    return make_report(
        "isoper", {}, lhs.value, rhs, lhs_err=lhs.err_est, rhs_err=rhs_err,
        constant=1.0, quad=_quad_meta(lhs, h1),
    )


def check_carleman_exp(u, tol: float = DEFAULT_TOL) -> InequalityReport:
    """``int_U e^{2u} dsigma <= (int_T e^u)^2`` for real harmonic ``u``."""
    u = _require_real(u)
    lhs = adaptive_disk(lambda r, t: np.exp(2 * u.values(r * np.exp(1j * t)).real), tol, strict=False)
    m = adaptive_circle(lambda t: np.exp(u.values(np.exp(1j * t)).real), tol, strict=False)
    rhs = m.value**2
    rhs_err = 2 * m.value * m.err_est + m.err_est**2
    return make_report(
        "carleman-exp", {}, lhs.value, rhs, lhs_err=lhs.err_est, rhs_err=rhs_err,
        constant=1.0, quad=_quad_meta(lhs, m),
    )


def check_thm_cp(u, p: float, tol: float = DEFAULT_TOL) -> InequalityReport:
    """``||u||_{b^{2p}} <= C_p ||u||_{h^p}`` for real harmonic ``u``."""
    if not p > 1:
        raise OutOfRange(f"p must exceed 1, got {p}")
    u = _require_real(u)
    C = constants.carleman_C(p)
    b = bergman_norm(u, 2 * p, tol, strict=False)
    h = hardy_norm(u, p, tol, strict=False)
    return make_report(
        "cp", {"p": p}, b.value, C * h.value, lhs_err=b.err_est, rhs_err=C * h.err_est,
        constant=C, quad=_quad_meta(b, h),
        values={"ratio": b.value / h.value if h.value > 0 else float("nan")},
    )


def check_thm_c4(f, tol: float = DEFAULT_TOL) -> InequalityReport:
    """``||f||_{b^8} <= ||f||_{h^4} / (2 sin(pi/16))`` for complex harmonic ``f``."""
    f = as_harmonic(f)
    C = constants.carleman_C(4)
    b = bergman_norm(f, 8, tol, strict=False)
    h = hardy_norm(f, 4, tol, strict=False)
    return make_report(
        "c4", {"p": 4}, b.value, C * h.value, lhs_err=b.err_est, rhs_err=C * h.err_est,
        constant=C, quad=_quad_meta(b, h),
        values={"ratio": b.value / h.value if h.value > 0 else float("nan")},
    )


def _riesz_parts(prefix, nF: NormResult, nPart: NormResult, L: float, R: float):
    lower = make_report(
        f"{prefix}lower", {}, L * nPart.value, nF.value,
        lhs_err=L * nPart.err_est, rhs_err=nF.err_est, constant=L, quad=_quad_meta(nF, nPart),
    )
    upper = make_report(
        f"{prefix}upper", {}, nF.value, R * nPart.value,
        lhs_err=nF.err_est, rhs_err=R * nPart.err_est, constant=R, quad=_quad_meta(nF, nPart),
    )
    return lower, upper


def check_riesz(F, p: float, tol: float = DEFAULT_TOL) -> InequalityReport:
    """``L_p ||Re F||_{h^p} <= ||F||_{h^p} <= R_p ||Re F||_{h^p}``.

    The hypothesis is checked as ``|arg F(0) - pi/2| >= pi / (2 pbar)`` or
    ``F(0) = 0``.
    """
    if not p > 1:
        raise OutOfRange(f"p must exceed 1, got {p}")
    F = _require_holomorphic(F)
    pbar = constants.conjugate_max(p)
    angle = math.pi / (2 * pbar)
    f0 = _value_at_zero(F)
    hyp = arg_hypothesis(f0, angle)
    nF = hardy_norm(F, p, tol, strict=False)
    nU = hardy_norm(real_part(F), p, tol, strict=False)
    lower, upper = _riesz_parts("", nF, nU, constants.riesz_L(p), constants.riesz_R(p))
    ratio = nF.value / nU.value if nU.value > 0 else float("inf")
    return combine(
        "riesz", {"p": p}, [lower, upper], hypothesis_ok=hyp,
        flags=["angle=pi/(2*pbar)"],
        values={"ratio": ratio, "norm_F": nF.value, "norm_re": nU.value, "angle": angle},
    )


def check_bergman_riesz(F, p: float, tol: float = DEFAULT_TOL) -> InequalityReport:
    """Bergman-space Riesz bounds for ``Re F`` and ``Im F``, ``p > 2``.

    The hypothesis uses the angle ``pi / (2p)`` for both parts.
    """
    if not p > 2:
        raise OutOfRange(f"the Bergman Riesz bounds need p > 2, got {p}")
    F = _require_holomorphic(F)
    angle = math.pi / (2 * p)
    hyp = arg_hypothesis(_value_at_zero(F), angle)
    L, R = constants.riesz_L(p), constants.riesz_R(p)
    nF = bergman_norm(F, p, tol, strict=False)
    nU = bergman_norm(real_part(F), p, tol, strict=False)
    nV = bergman_norm(imag_part(F), p, tol, strict=False)
    parts = [*_riesz_parts("re-", nF, nU, L, R), *_riesz_parts("im-", nF, nV, L, R)]
    return combine(
        "hed", {"p": p}, parts, hypothesis_ok=hyp, flags=["angle=pi/(2*p)"],
        values={"norm_F": nF.value, "norm_re": nU.value, "norm_im": nV.value, "angle": angle},
    )


def newt_means(F, p: float, tol: float = DEFAULT_TOL) -> tuple[QuadResult, QuadResult, QuadResult]:
    """Boundary means of ``|F|^p``, ``|Re F|^p`` and ``|Im F|^p``."""
    F = as_harmonic(F)
    return (
        hardy_mean(F, p, tol, strict=False),
        hardy_mean(real_part(F), p, tol, strict=False),
        hardy_mean(imag_part(F), p, tol, strict=False),
    )


def check_newt(F, p: float, tol: float = DEFAULT_TOL) -> InequalityReport:
    """``||F|| <= k (||u||^p + ||v||^p)^(1/p)`` for ``2 <= p <= 4``, reversed above 4.

    ``k = (p / (p - 1))^(1/p)``; both directions hold at ``p = 4`` so the
    report asserts equality there.
    """
    if not p >= 2:
        raise OutOfRange(f"p must be at least 2, got {p}")
    F = _require_holomorphic(F)
    if abs(_value_at_zero(F)) > ZERO_TOL:
        raise PreconditionFailed("F(0) must vanish")
    k = constants.newt_constant(p)
    a, u, v = newt_means(F, p, tol)
    lhs, lhs_err = root_with_error(a, p)
    s = QuadResult(u.value + v.value, u.err_est + v.err_est, max(u.N, v.N))
    root, root_err = root_with_error(s, p)
    relation = "<=" if p < 4 else (">=" if p > 4 else "=")
    return make_report(
        "newt", {"p": p}, lhs, k * root, lhs_err=lhs_err, rhs_err=k * root_err,
        constant=k, relation=relation, quad=_quad_meta(a, u, v),
        values={"mean_F": a.value, "mean_u": u.value, "mean_v": v.value},
    )


# ------------------------------------------------------------ log-subharmonic


def _point(z) -> np.ndarray:
    if isinstance(z, EvalPoint):
        return np.array(z.z)
    return np.asarray(z, dtype=complex)


def log_laplacian(a: TaylorSeries, b: TaylorSeries, z):
    """Laplacian of ``log(|a|^2 + |b|^2)`` from the closed form of its ``z zbar`` derivative."""
    z = _point(z)
    A, B = a(z), b(z)
    dA, dB = a.derivative()(z), b.derivative()(z)
    s = np.abs(A) ** 2 + np.abs(B) ** 2
    if np.any(s <= 1e-300):
        raise DegenerateZero("a and b vanish simultaneously")
    num = (np.abs(dA) ** 2 + np.abs(dB) ** 2) * s - np.abs(np.conj(A) * dA + np.conj(B) * dB) ** 2
    out = 4 * num / s**2
    return float(out) if out.ndim == 0 else out


def _poly_starts(degree: int, power: float) -> tuple[int, int]:
    deg = int(math.ceil(power * degree))
    return next_pow2(deg + 1), max(1, math.ceil((deg + 2) / 2))


def check_ipl(a: TaylorSeries, b: TaylorSeries, p: float, tol: float = DEFAULT_TOL) -> InequalityReport:
    """``int_U (|a|^2+|b|^2)^{2p} <= (int_T (|a|^2+|b|^2)^p)^2``."""
    if not p > 0:
        raise OutOfRange("p must be positive")
    a, b = as_series(a), as_series(b)
    D = max(a.degree, b.degree)

    def S(z):
        return np.abs(a(z)) ** 2 + np.abs(b(z)) ** 2

    N0, M0 = _poly_starts(D, 4 * p)
    lhs = adaptive_disk(lambda r, t: S(r * np.exp(1j * t)) ** (2 * p), tol, M0=M0, N0=N0, strict=False)
    m = adaptive_circle(lambda t: S(np.exp(1j * t)) ** p, tol, N0=_poly_starts(D, 2 * p)[0], strict=False)
    rhs = m.value**2
    return make_report(
        "ipl", {"p": p}, lhs.value, rhs, lhs_err=lhs.err_est,
        rhs_err=2 * m.value * m.err_est + m.err_est**2, constant=1.0, quad=_quad_meta(lhs, m),
    )


def abx_trace(g: TaylorSeries, h: TaylorSeries, tol: float = DEFAULT_TOL):
    """Boundary quantities ``A``, ``B``, ``X`` of ``f = g + conj(h)`` and their inequalities.

    Returns ``(A, B, X, reports)``.  The bound ``X >= (A - B/sqrt 2)^2``
    and the two consequences rest on ``h(0) = 0``, which is recorded as
    their hypothesis.
    """
    g, h = as_series(g), as_series(h)
    N0 = _poly_starts(max(g.degree, h.degree), 4)[0]

    def on_circle(fn):
        return adaptive_circle(lambda t: fn(np.exp(1j * t)), tol, N0=N0, strict=False)

    A2 = on_circle(lambda z: (np.abs(g(z)) ** 2 + np.abs(h(z)) ** 2) ** 2)
    B2 = on_circle(lambda z: 4 * np.abs(g(z)) ** 2 * np.abs(h(z)) ** 2)
    Xq = on_circle(lambda z: np.abs(g(z) + np.conj(h(z))) ** 4)
    D2 = on_circle(lambda z: (np.abs(g(z)) ** 2 - np.abs(h(z)) ** 2) ** 2)
    A, B, X = math.sqrt(max(A2.value, 0.0)), math.sqrt(max(B2.value, 0.0)), Xq.value
    hyp = abs(h.coeffs[0]) <= ZERO_TOL
    meta = _quad_meta(A2, B2, Xq, D2)
    c = ((2 - math.sqrt(2)) / 2) ** 2
    err = A2.err_est + B2.err_est + Xq.err_est
    reports = [
        make_report("A2>=B2", {}, B2.value, A2.value, lhs_err=B2.err_est, rhs_err=A2.err_est, quad=meta,
                    values={"A2-B2": A2.value - B2.value, "int(|g|^2-|h|^2)^2": D2.value}),
        make_report("A2-B2=int(|g|^2-|h|^2)^2", {}, A2.value - B2.value, D2.value,
                    lhs_err=A2.err_est + B2.err_est, rhs_err=D2.err_est, relation="=", quad=meta),
        make_report("X>=(A-B/sqrt2)^2", {}, (A - B / math.sqrt(2)) ** 2, X, lhs_err=err,
                    hypothesis_ok=hyp, quad=meta),
        make_report("x1", {}, c * B**2, X, lhs_err=err, constant=c, hypothesis_ok=hyp, quad=meta),
        make_report("x2", {}, c * A**2, X, lhs_err=err, constant=c, hypothesis_ok=hyp, quad=meta),
    ]
    return A, B, X, reports


# ------------------------------------------------------ epsilon regularization


@dataclass(frozen=True)
class EpsFamily:
    eps: float
    p: float

    def __post_init__(self):
        if not self.eps > 0:
            raise OutOfRange("eps must be positive")
        if not self.p > 1:
            raise OutOfRange("p must exceed 1")

    @property
    def q(self) -> float:
        return self.p / (self.p - 1.0)

    def F_eps(self, w):
        return (self.q * self.eps + np.abs(w) ** 2) ** (self.p / 2)

    def U_eps(self, w):
        return (self.eps + np.real(w) ** 2) ** (self.p / 2)

    def V_eps(self, w):
        return (self.eps + np.imag(w) ** 2) ** (self.p / 2)


def eps_laplacians(F, fam: EpsFamily, z):
    """Closed-form Laplacians of ``F_eps``, ``U_eps`` and ``V_eps`` at ``z``."""
    F = as_series(F)
    z = _point(z)
    f = F(z)
    df2 = np.abs(F.derivative()(z)) ** 2
    p, q, e = fam.p, fam.q, fam.eps
    u2, v2, f2 = f.real**2, f.imag**2, np.abs(f) ** 2
    dF = p * (q * e + f2) ** (p / 2 - 2) * (2 * q * e + p * f2) * df2
    dU = p * (u2 + e) ** (p / 2 - 2) * df2 * (e + (p - 1) * u2)
    dV = p * (v2 + e) ** (p / 2 - 2) * df2 * (e + (p - 1) * v2)
    if np.ndim(dF) == 0:
        return float(dF), float(dU), float(dV)
    return dF, dU, dV


def check_lemma_new(F, p: float, eps: float, z) -> InequalityReport:
    """Pointwise ``Lap(U_eps + V_eps)`` against ``((p-1)/p) Lap F_eps``.

    ``<=`` for ``p > 4``, ``>=`` for ``p < 4``, equality at ``p = 4``.
    """
    fam = EpsFamily(eps, p)
    dF, dU, dV = eps_laplacians(F, fam, z)
    k = (p - 1) / p
    relation = "<=" if p > 4 else (">=" if p < 4 else "=")
    pt = _point(z)
    return make_report(
        "lemma-new", {"p": p, "eps": eps, "z": [float(pt.real), float(pt.imag)]},
        dU + dV, k * dF, constant=k, relation=relation,
        values={"lap_F": dF, "lap_U": dU, "lap_V": dV},
    )


def q_value(s, r: float, eps: float, p: float):
    """Ratio ``Lap(U_eps + V_eps) / (((p-1)/p) Lap F_eps)`` at ``f = r e^{is}``."""
    if not (r > 0 and eps > 0 and p > 1):
        raise OutOfRange("q_value needs r > 0, eps > 0, p > 1")
    s = np.asarray(s, dtype=float)
    c2, s2 = np.cos(s) ** 2, np.sin(s) ** 2
    e = p / 2 - 2
    den = (2 * eps + (p - 1) * r**2) * (eps * p / (p - 1) + r**2) ** e
    num = (eps + r**2 * c2) ** e * (eps + (p - 1) * r**2 * c2) + (eps + r**2 * s2) ** e * (
        eps + (p - 1) * r**2 * s2
    )
    out = num / den
    return float(out) if out.ndim == 0 else out


def q_at_zero(r: float, eps: float, p: float) -> float:
    """``Q(0)`` rewritten with ``t = eps / r^2``."""
    t = eps / r**2
    return (
        (1 + p * t / (p - 1)) ** (2 - p / 2)
        * (t ** (p / 2 - 1) + (1 + t) ** (p / 2 - 2) * (p - 1 + t))
        / (p - 1 + 2 * t)
    )


def q_at_quarter(r: float, eps: float, p: float) -> float:
    """``Q(pi/4)`` rewritten with ``t = eps / r^2``."""
    t = eps / r**2
    return 2 ** (2 - p / 2) * ((p - 1 + p * t) / ((p - 1) * (1 + 2 * t))) ** (2 - p / 2)


STATIONARY = np.pi * np.arange(8) / 4


def q_report(r: float, eps: float, p: float, n_grid: int = 720) -> InequalityReport:
    """Sample ``Q`` on an angular grid plus the stationary points ``pi j / 4``.

    Asserts ``Q >= 1`` for ``p < 4``, ``Q <= 1`` for ``p > 4`` (``Q = 1`` at
    ``p = 4``), and that the grid extrema sit within one grid step of a
    stationary point.
    """
    step = 2 * np.pi / n_grid
    grid = np.concatenate([step * np.arange(n_grid), STATIONARY])
    Q = q_value(grid, r, eps, p)
    qmin, qmax = float(Q.min()), float(Q.max())
    relation = ">=" if p < 4 else ("<=" if p > 4 else "=")
    extreme = qmin if p < 4 else (qmax if p > 4 else (qmin if 1 - qmin > qmax - 1 else qmax))
    bound = make_report(
        "Q-vs-1", {}, extreme, 1.0, relation=relation,
        values={"min": qmin, "max": qmax},
    )
    flat = qmax - qmin <= 1e-13 * max(1.0, abs(qmax))

    def dist(s):
        d = np.abs((s - STATIONARY + np.pi) % (2 * np.pi) - np.pi)
        return float(d.min())

    d = 0.0 if flat else max(dist(grid[int(np.argmin(Q))]), dist(grid[int(np.argmax(Q))]))
    located = make_report("extrema-at-stationary-points", {}, d, step, floor=0.0)
    if flat:
        located.flags.append("constant")
    return combine(
        "lemma-new-Q", {"p": p, "r": r, "eps": eps, "n_grid": n_grid}, [bound, located],
        values={"min": qmin, "max": qmax, "Q0": q_at_zero(r, eps, p), "Q_pi4": q_at_quarter(r, eps, p)},
    )


# -------------------------------------------------------------------- Green


def fd_laplacian(G: Callable, z, h: float = 1e-4, extrapolate: bool = False):
    """Five-point Laplacian of ``G`` (a function of complex ``z``).

    ``extrapolate`` combines the stencils at ``h`` and ``h/2`` to cancel the
    ``h^2`` error term.  Extended-precision ``z`` is kept as is.
    """
    z = np.asarray(z)
    if not np.iscomplexobj(z):
        z = z.astype(complex)

    def stencil(k):
        return (G(z + k) + G(z - k) + G(z + 1j * k) + G(z - 1j * k) - 4 * G(z)) / k**2

    if extrapolate:
        return (4 * stencil(h / 2) - stencil(h)) / 3
    return stencil(h)


def green_check(
    G: Callable,
    r: float,
    laplacian: Callable | None = None,
    h: float = 1e-5,
    tol: float = 1e-9,
    rel_tol: float = 1e-6,
) -> InequalityReport:
    """Radial Green identity ``r int_0^{2pi} dG/dr dt = int_{|z|<=r} Lap G dx dy``.

    ``G`` and ``laplacian`` take complex points.  The radial derivative is a
    central difference with step ``h``; without a closed-form Laplacian the
    five-point stencil is used.
    """
    if not 0 < r < 1:
        raise OutOfRange("r must lie in (0, 1)")
    lap = laplacian if laplacian is not None else (lambda z: fd_laplacian(G, z))

    def dGdr(t):
        e = np.exp(1j * t)
        return (np.real(G((r + h) * e)) - np.real(G((r - h) * e))) / (2 * h)

    side = adaptive_circle(dGdr, tol, strict=False)
    inner = adaptive_disk(lambda rho, t: np.real(lap(r * rho * np.exp(1j * t))), tol, strict=False)
    lhs = r * 2 * np.pi * side.value
    rhs = np.pi * r**2 * inner.value
    return make_report(
        "green", {"r": r}, lhs, rhs, relation="=", quad=_quad_meta(side, inner),
        floor=rel_tol * (1 + abs(lhs)),
    )
