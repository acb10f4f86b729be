"""Closed-form constants of the Riesz and Carleman type inequalities.

At the seams (``p = 2`` for R, L and C; ``p = 4`` for M) both branch
formulas agree analytically; the left branch is used there.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from scipy.optimize import bisect

from .errors import OutOfRange

E4 = math.cos(math.pi / 8)


def _require(p: float, lower: float, name: str):
    if not p > lower:
        raise OutOfRange(f"{name} is defined for p > {lower}, got p={p}")


def conjugate_max(p: float) -> float:
    """``max(p, p / (p - 1))``."""
    _require(p, 1.0, "pbar")
    return max(p, p / (p - 1.0))


def riesz_R(p: float) -> float:
    _require(p, 1.0, "R_p")
    if p <= 2:
        return 1.0 / math.cos(math.pi / (2 * p))
    return 1.0 / math.sin(math.pi / (2 * p))


def riesz_L(p: float) -> float:
    _require(p, 1.0, "L_p")
    if p <= 2:
        return 1.0 / math.sin(math.pi / (2 * p))
    return 1.0 / math.cos(math.pi / (2 * p))


def M(p: float) -> float:
    """Constant of the chained Bergman estimate, defined for ``p > 2``."""
    _require(p, 2.0, "M_p")
    if p <= 4:
        return math.cos(math.pi / (2 * p)) / math.cos(math.pi / p)
    return math.cos(math.pi / (2 * p)) / math.sin(math.pi / p)


def carleman_C(p: float) -> float:
    _require(p, 1.0, "C_p")
    if p <= 2:
        return math.cos(math.pi / (4 * p)) / math.cos(math.pi / (2 * p))
    return math.cos(math.pi / (4 * p)) / math.sin(math.pi / (2 * p))


def newt_constant(p: float) -> float:
    """``(p / (p - 1)) ** (1 / p)``."""
    _require(p, 1.0, "newt constant")
    return (p / (p - 1.0)) ** (1.0 / p)


def _p1_equation(p: float) -> float:
    return newt_constant(p) - 2.0 ** (-1.0 / p) / math.sin(math.pi / (2 * p))


def p1_root(xtol: float = 1e-12) -> float:
    """Unique root in ``[2, 4]`` of ``newt_constant(p) = 2^(-1/p) R_p``."""
    return bisect(_p1_equation, 2.0, 4.0, xtol=xtol)


@dataclass(frozen=True)
class ConstantTable:
    p: float
    R_p: float | None
    L_p: float | None
    M_p: float | None
    C_p: float | None
    E4: float
    pbar: float | None
    newt: float | None
    p1: float

    def to_json(self) -> dict:
        return asdict(self)


def table(p: float) -> ConstantTable:
    """Every constant that is defined at ``p``; the others are ``None``."""
    above1 = p > 1
    return ConstantTable(
        p=float(p),
        R_p=riesz_R(p) if above1 else None,
        L_p=riesz_L(p) if above1 else None,
        M_p=M(p) if p > 2 else None,
        C_p=carleman_C(p) if above1 else None,
        E4=E4,
        pbar=conjugate_max(p) if above1 else None,
        newt=newt_constant(p) if above1 else None,
        p1=p1_root(),
    )
