"""Quadrature on the unit circle and the unit disk.

Both measures are normalized: the circle carries ``dt / 2pi`` and the disk
carries ``dsigma = r dr dtheta / pi``, so constants integrate to one.

The circle rule is the equispaced trapezoid, which is exact for
trigonometric polynomials of degree below ``N`` and spectrally accurate for
smooth periodic integrands.  The disk rule is a tensor product of that rule
with Gauss-Legendre in ``r`` on ``[0, 1]``; the Jacobian ``2 r`` is folded
into the radial weights.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import NoConvergence, NonFiniteSample

N_CAP = 2**16
M_CAP = 2**12
DEFAULT_TOL = 1e-10
_BLOCK = 2**22


def _is_pow2(n: int) -> bool:
    return n > 0 and (n & (n - 1)) == 0


def next_pow2(n: int, floor: int = 16) -> int:
    n = max(int(n), floor)
    return 1 << (n - 1).bit_length()


@dataclass(frozen=True)
class CircleRule:
    N: int = 16

    def __post_init__(self):
        if not _is_pow2(self.N) or self.N < 16:
            raise ValueError(f"CircleRule needs a power of two >= 16, got {self.N}")

    @property
    def nodes(self) -> np.ndarray:
        return 2 * np.pi * np.arange(self.N) / self.N

    @property
    def weights(self) -> np.ndarray:
        return np.full(self.N, 1.0 / self.N)

    def refined(self) -> "CircleRule":
        return CircleRule(2 * self.N)


@lru_cache(maxsize=64)
def radial_rule(M: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes on ``[0, 1]`` and weights ``2 r w`` summing to one."""
    x, w = np.polynomial.legendre.leggauss(M)
    r = 0.5 * (x + 1.0)
    wr = w * r  # (w / 2) * 2r
    r.setflags(write=False)
    wr.setflags(write=False)
    return r, wr


@dataclass(frozen=True)
class DiskRule:
    M: int = 16
    N: int = 16

    def __post_init__(self):
        if self.M < 1:
            raise ValueError("DiskRule needs M >= 1")
        CircleRule(self.N)

    @property
    def radial(self) -> tuple[np.ndarray, np.ndarray]:
        return radial_rule(self.M)

    @property
    def angles(self) -> np.ndarray:
        return CircleRule(self.N).nodes

    def refined(self) -> "DiskRule":
        return DiskRule(2 * self.M, 2 * self.N)


@dataclass(frozen=True)
class QuadResult:
    value: float
    err_est: float
    N: int
    M: int = 0
    history: tuple = field(default=(), repr=False)
    converged: bool = True

    def __iter__(self):
        yield self.value
        yield self.err_est


def _check_finite(vals):
    if not np.all(np.isfinite(vals)):
        raise NonFiniteSample("integrand is not finite at some quadrature node")


def _real(x):
    return complex(x) if np.iscomplexobj(x) else float(x)


def circle_integral(phi, rule: CircleRule = CircleRule()):
    """Mean of ``phi(theta)`` over the equispaced nodes of ``rule``."""
    vals = np.asarray(phi(rule.nodes))
    _check_finite(vals)
    return _real(np.mean(vals))


def _ring_means(Phi, r, theta):
    out = []
    step = max(1, _BLOCK // theta.size)
    for i in range(0, r.size, step):
        vals = np.asarray(Phi(r[i : i + step, None], theta[None, :]))
        vals = np.broadcast_to(vals, (r[i : i + step].size, theta.size))
        _check_finite(vals)
        out.append(vals.mean(axis=1))
    return np.concatenate(out)


def disk_integral(Phi, rule: DiskRule = DiskRule()):
    """Tensor rule for ``Phi(r, theta)`` against normalized area measure."""
    r, wr = rule.radial
    return _real(np.dot(wr, _ring_means(Phi, r, rule.angles)))


def adaptive_circle(
    phi, tol: float = DEFAULT_TOL, N0: int = 16, N_max: int = N_CAP, strict: bool = True
) -> QuadResult:
    """Nested trapezoid doubling until ``|I_2N - I_N| <= tol (1 + |I_2N|)``.

    At the cap, ``strict`` raises :class:`NoConvergence`; otherwise the last
    value is returned with the last increment as its error estimate and
    ``converged=False``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    N = next_pow2(N0)
    vals = np.asarray(phi(CircleRule(N).nodes))
    _check_finite(vals)
    total = vals.sum()
    current = total / N
    history = []
    while True:
        if 2 * N > N_max:
            inc = history[-1] if history else float("nan")
            if strict:
                raise NoConvergence(f"circle rule did not converge by N={N}", inc, _real(current))
            return QuadResult(_real(current), inc, N, 0, tuple(history), converged=False)
        new_theta = np.pi * (2 * np.arange(N) + 1) / N
        new = np.asarray(phi(new_theta))
        _check_finite(new)
        total = total + new.sum()
        N *= 2
        refined = total / N
        inc = float(abs(refined - current))
        history.append(inc)
        current = refined
        if inc <= tol * (1.0 + abs(refined)):
            return QuadResult(_real(refined), inc, N, 0, tuple(history))


def _adaptive_rings(Phi, r, tol, N0, N_max):
    """Per-ring nested trapezoid doubling, vectorized over unconverged rings."""
    N = next_pow2(N0)
    theta = CircleRule(N).nodes
    sums = _ring_means(Phi, r, theta) * N
    means = sums / N
    err = np.zeros(r.size)
    active = np.arange(r.size)
    n_used = N
    while active.size:
        if 2 * N > N_max:
            return means, err, n_used, False
        new_theta = np.pi * (2 * np.arange(N) + 1) / N
        sums[active] += _ring_means(Phi, r[active], new_theta) * N
        N *= 2
        refined = sums[active] / N
        inc = np.abs(refined - means[active])
        means[active] = refined
        err[active] = inc
        n_used = N
        done = inc <= tol * (1.0 + np.abs(refined))
        active = active[~done]
    return means, err, n_used, True


def adaptive_disk(
    Phi,
    tol: float = DEFAULT_TOL,
    M0: int = 8,
    N0: int = 16,
    M_max: int = M_CAP,
    N_max: int = N_CAP,
    strict: bool = True,
) -> QuadResult:
    """Adaptive disk integral.

    ``M`` doubles until two successive radial rules agree to
    ``tol (1 + |I|)``.  Within each rule every ring refines its own angular
    resolution, so rings far from a near-boundary singularity stay cheap.
    The returned error estimate adds the last radial increment to the
    weighted angular increments.  ``strict`` behaves as in
    :func:`adaptive_circle`.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    M = max(1, int(M0))
    previous = None
    history = []
    while True:
        r, wr = radial_rule(M)
        means, ang_err, n_used, ang_ok = _adaptive_rings(Phi, r, tol, N0, N_max)
        value = np.dot(wr, means)
        ang = float(np.dot(wr, ang_err))
        inc = None
        if previous is not None:
            inc = float(abs(value - previous))
            history.append(inc)
            if inc <= tol * (1.0 + abs(value)) and ang_ok:
                return QuadResult(_real(value), inc + ang, n_used, M, tuple(history))
        if 2 * M > M_max or not ang_ok:
            last = (inc if inc is not None else 0.0) + ang
            if strict:
                raise NoConvergence(f"disk rule did not converge (M={M}, N={n_used})", last, _real(value))
            return QuadResult(_real(value), last, n_used, M, tuple(history), converged=False)
        previous = value
        M *= 2


def adaptive(integrator, phi, tol: float = DEFAULT_TOL, **kwargs) -> QuadResult:
    """Dispatch to the adaptive driver matching ``integrator``."""
    if integrator is circle_integral or integrator == "circle":
        return adaptive_circle(phi, tol, **kwargs)
    if integrator is disk_integral or integrator == "disk":
        return adaptive_disk(phi, tol, **kwargs)
    raise ValueError(f"unknown integrator {integrator!r}")
