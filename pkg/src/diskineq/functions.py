"""Holomorphic and harmonic functions on the closed unit disk.

Everything here is immutable and evaluates on numpy arrays of complex
points ``z`` with ``|z| <= 1``.  The polynomial representation is a pair of
truncated Taylor series ``(g, h)`` standing for ``f = g + conj(h)``; a few
closed-form families are kept as separate variants so that they are
evaluated exactly rather than through a truncated series.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .errors import NotRealValued

MAX_DEGREE = 256
REAL_TOL = 1e-12


def _as_coeffs(c) -> np.ndarray:
    arr = np.array(c, dtype=complex).ravel()
    if arr.size == 0:
        arr = np.zeros(1, dtype=complex)
    if arr.size - 1 > MAX_DEGREE:
        raise ValueError(f"degree {arr.size - 1} exceeds the supported maximum {MAX_DEGREE}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class TaylorSeries:
    """Coefficients ``c_0 .. c_D`` of ``sum c_n z**n``."""

    coeffs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _as_coeffs(self.coeffs))

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.full(z.shape, self.coeffs[-1], dtype=complex)
        for c in self.coeffs[-2::-1]:
            out *= z
            out += c
        return out

    def derivative(self) -> "TaylorSeries":
        if self.degree == 0:
            return TaylorSeries([0.0])
        n = np.arange(1, self.degree + 1)
        return TaylorSeries(self.coeffs[1:] * n)

    def is_zero(self, tol: float = 0.0) -> bool:
        return bool(np.all(np.abs(self.coeffs) <= tol))

    def __eq__(self, other):
        if not isinstance(other, TaylorSeries):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        n = max(a.size, b.size)
        return bool(np.array_equal(np.pad(a, (0, n - a.size)), np.pad(b, (0, n - b.size))))

    def __hash__(self):
        return hash(np.trim_zeros(self.coeffs, "b").tobytes())

    def __add__(self, other: "TaylorSeries") -> "TaylorSeries":
        n = max(self.coeffs.size, other.coeffs.size)
        return TaylorSeries(
            np.pad(self.coeffs, (0, n - self.coeffs.size))
            + np.pad(other.coeffs, (0, n - other.coeffs.size))
        )

    def __mul__(self, c) -> "TaylorSeries":
        return TaylorSeries(self.coeffs * complex(c))

    __rmul__ = __mul__

    def rotated(self, alpha: float) -> "TaylorSeries":
        """Coefficients of ``z -> self(exp(i alpha) z)``."""
        n = np.arange(self.coeffs.size)
        return TaylorSeries(self.coeffs * np.exp(1j * alpha * n))

    @classmethod
    def zero(cls) -> "TaylorSeries":
        return cls([0.0])


@dataclass(frozen=True)
class EvalPoint:
    r: float
    theta: float

    def __post_init__(self):
        if not 0.0 <= self.r <= 1.0:
            raise ValueError(f"r={self.r} outside [0, 1]")
        object.__setattr__(self, "theta", float(self.theta) % (2 * math.pi))

    @property
    def z(self) -> complex:
        return self.r * complex(math.cos(self.theta), math.sin(self.theta))

    @classmethod
    def from_complex(cls, z: complex) -> "EvalPoint":
        return cls(abs(z), math.atan2(z.imag, z.real))


class HarmonicFunction:
    """Common interface of the representable functions.

    Subclasses implement ``values(z)``.  ``bandwidth`` is the trigonometric
    degree of the boundary values when it is finite (polynomials) and
    ``None`` otherwise; quadrature uses it to pick exact starting rules.
    """

    bandwidth: int | None = None
    holomorphic: bool = False

    def values(self, z):
        raise NotImplementedError

    def __call__(self, z):
        return self.values(z)

    def to_json(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True, eq=False)
class TaylorPair(HarmonicFunction):
    """``f = g + conj(h)`` with ``g``, ``h`` polynomials."""

    g: TaylorSeries
    h: TaylorSeries = field(default_factory=TaylorSeries.zero)

    def __post_init__(self):
        if not isinstance(self.g, TaylorSeries):
            object.__setattr__(self, "g", TaylorSeries(self.g))
        if not isinstance(self.h, TaylorSeries):
            object.__setattr__(self, "h", TaylorSeries(self.h))

    @property
    def bandwidth(self) -> int:
        return max(self.g.degree, self.h.degree)

    @property
    def holomorphic(self) -> bool:
        return bool(np.all(self.h.coeffs[1:] == 0))

    def values(self, z):
        return self.g(z) + np.conj(self.h(z))

    def scaled(self, c: complex) -> "TaylorPair":
        return TaylorPair(self.g * c, self.h * np.conj(c))

    def rotated(self, alpha: float) -> "TaylorPair":
        return TaylorPair(self.g.rotated(alpha), self.h.rotated(alpha))

    def holomorphic_part(self) -> TaylorSeries:
        """``g + conj(h(0))``; equals ``f`` when ``h`` is constant."""
        c = self.g.coeffs.copy()
        c[0] += np.conj(self.h.coeffs[0])
        return TaylorSeries(c)

    def to_json(self) -> dict:
        return {
            "type": "taylor_pair",
            "g": [[c.real, c.imag] for c in self.g.coeffs],
            "h": [[c.real, c.imag] for c in self.h.coeffs],
        }


@dataclass(frozen=True)
class Monomial(HarmonicFunction):
    n: int

    def __post_init__(self):
        if self.n < 0 or int(self.n) != self.n:
            raise ValueError("monomial exponent must be a nonnegative integer")
        object.__setattr__(self, "n", int(self.n))

    holomorphic = True

    @property
    def bandwidth(self) -> int:
        return self.n

    def values(self, z):
        return np.asarray(z, dtype=complex) ** self.n

    def to_json(self) -> dict:
        return {"type": "monomial", "n": self.n}


@dataclass(frozen=True)
class FaFamily(HarmonicFunction):
    """``Re(z / (1 - a z))``, evaluated in closed form."""

    a: float

    def __post_init__(self):
        if not 0.0 <= self.a < 1.0:
            raise ValueError(f"FaFamily needs 0 <= a < 1, got a={self.a}")

    def values(self, z):
        z = np.asarray(z, dtype=complex)
        return (z / (1.0 - self.a * z)).real.astype(complex)

    def truncation(self, degree: int) -> TaylorPair:
        c = np.zeros(degree + 1)
        c[1:] = self.a ** np.arange(degree)
        return TaylorPair(TaylorSeries(c / 2), TaylorSeries(c / 2))

    def to_json(self) -> dict:
        return {"type": "fa", "a": self.a}


@dataclass(frozen=True)
class ExpOfHarmonic(HarmonicFunction):
    """``exp(scale * u)`` for a real-valued harmonic ``u``."""

    base: HarmonicFunction
    scale: float = 1.0

    def values(self, z):
        return np.exp(self.scale * self.base.values(z).real).astype(complex)

    def to_json(self) -> dict:
        return {"type": "exp", "scale": self.scale, "base": self.base.to_json()}


def holomorphic(coeffs) -> TaylorPair:
    """Wrap Taylor coefficients as a holomorphic ``TaylorPair``."""
    g = coeffs if isinstance(coeffs, TaylorSeries) else TaylorSeries(coeffs)
    return TaylorPair(g, TaylorSeries.zero())


def as_harmonic(f) -> HarmonicFunction:
    if isinstance(f, HarmonicFunction):
        return f
    if isinstance(f, TaylorSeries):
        return holomorphic(f)
    raise TypeError(f"cannot interpret {type(f).__name__} as a harmonic function")


def as_series(f) -> TaylorSeries:
    """Holomorphic Taylor series of ``f``; raises if ``f`` is not holomorphic."""
    if isinstance(f, TaylorSeries):
        return f
    if isinstance(f, Monomial):
        c = np.zeros(f.n + 1, dtype=complex)
        c[-1] = 1
        return TaylorSeries(c)
    if isinstance(f, TaylorPair) and f.holomorphic:
        return f.holomorphic_part()
    raise TypeError("a holomorphic polynomial is required")


def real_pair(F) -> TaylorPair:
    """``Re F`` for a holomorphic polynomial ``F``, as a ``TaylorPair``."""
    F = as_series(F)
    g = F.coeffs / 2
    h = g.copy()
    g[0] = F.coeffs[0].real
    h[0] = 0
    return TaylorPair(TaylorSeries(g), TaylorSeries(h))


def eval(f, p: EvalPoint) -> complex:  # noqa: A001 - mirrors the math notation
    return complex(as_harmonic(f).values(np.array([p.z]))[0])


def _grid_points(n: int = 64) -> np.ndarray:
    r = np.linspace(0.0, 1.0, n)
    t = 2 * np.pi * np.arange(n) / n
    return (r[:, None] * np.exp(1j * t)[None, :]).ravel()


def is_real(f) -> bool:
    f = as_harmonic(f)
    if isinstance(f, TaylorPair):
        g, h = f.g.coeffs, f.h.coeffs
        n = max(g.size, h.size)
        g = np.pad(g, (0, n - g.size))
        h = np.pad(h, (0, n - h.size))
        # Im f = Im(g - h), which vanishes iff g - h is a real constant.
        d = g - h
        d[0] = d[0].imag
        scale = 1.0 + max(np.abs(g).sum(), np.abs(h).sum())
        return bool(np.max(np.abs(d)) <= REAL_TOL * scale)
    if isinstance(f, FaFamily):
        return True
    if isinstance(f, Monomial):
        return f.n == 0
    vals = f.values(_grid_points())
    return bool(np.max(np.abs(vals.imag)) <= REAL_TOL * (1.0 + np.max(np.abs(vals))))


def analytic_completion(u) -> TaylorSeries:
    """Holomorphic ``F`` with ``Re F = u`` and ``Im F(0) = 0``."""
    u = as_harmonic(u)
    if isinstance(u, FaFamily):
        raise TypeError("truncate FaFamily to a TaylorPair first")
    if isinstance(u, Monomial):
        u = holomorphic(as_series(u))
    if not isinstance(u, TaylorPair):
        raise TypeError("analytic completion needs a TaylorPair")
    if not is_real(u):
        raise NotRealValued("function is not real-valued within tolerance")
    g, h = u.g.coeffs, u.h.coeffs
    n = max(g.size, h.size)
    g = np.pad(g, (0, n - g.size))
    h = np.pad(h, (0, n - h.size))
    # u = a0 + sum 2 Re(c_n z^n) with c_n the average of g_n and h_n.
    c = g + h
    c[0] = (g[0] + np.conj(h[0])).real
    return TaylorSeries(c)


def parse_function(obj: Any) -> HarmonicFunction:
    """Build a function from its JSON descriptor (dict or JSON text)."""
    if isinstance(obj, (str, bytes)):
        obj = json.loads(obj)
    kind = obj.get("type")
    if kind == "taylor_pair":
        g = [complex(*c) if isinstance(c, (list, tuple)) else complex(c) for c in obj["g"]]
        h = [complex(*c) if isinstance(c, (list, tuple)) else complex(c) for c in obj.get("h", [0])]
        return TaylorPair(TaylorSeries(g), TaylorSeries(h))
    if kind == "fa":
        return FaFamily(float(obj["a"]))
    if kind == "monomial":
        return Monomial(int(obj["n"]))
    if kind == "exp":
        return ExpOfHarmonic(parse_function(obj["base"]), float(obj.get("scale", 1.0)))
    raise ValueError(f"unknown function type {kind!r}")
