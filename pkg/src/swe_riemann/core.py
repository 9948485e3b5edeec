"""States, gravity context, region classification and eigenstructure.

The phase space of the shallow water system with a discontinuous bottom
is split by the critical (sonic) curves ``u = +sqrt(g h)`` and
``u = -sqrt(g h)`` into three strictly hyperbolic regions:

* ``A1``: supercritical flow to the right, all wave speeds ordered
  ``0 < u - c < u + c``;
* ``A2``: subcritical flow, ``u - c < 0 < u + c`` (split by the sign of u);
* ``A3``: supercritical flow to the left, ``u - c < u + c < 0``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import NonPositiveDepth

__all__ = [
    "DEFAULT_CONTEXT",
    "GravityContext",
    "Region",
    "State",
    "celerity",
    "classify",
    "eigenstructure",
    "froude_sign",
    "reflect_state",
]


@dataclass(frozen=True)
class GravityContext:
    """Gravity constant plus the numerical tolerances shared by all solvers."""

    g: float = 9.81
    tol_abs: float = 1e-10
    tol_rel: float = 1e-12
    max_iter: int = 200

    def __post_init__(self):
        if not self.g > 0:
            raise ValueError(f"g must be positive, got {self.g}")
        if not self.tol_abs > 0 or not self.tol_rel > 0:
            raise ValueError("tolerances must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")


DEFAULT_CONTEXT = GravityContext()


@dataclass(frozen=True)
class State:
    """Primitive state: water height ``h``, velocity ``u``, bottom level ``a``."""

    h: float
    u: float
    a: float = 0.0

    def __post_init__(self):
        # plain floats throughout (ints and numpy scalars are converted)
        for name in ("h", "u", "a"):
            v = getattr(self, name)
            if type(v) is not float:
                object.__setattr__(self, name, float(v))

    def check(self) -> State:
        if not self.h > 0:
            raise NonPositiveDepth(f"depth must be positive, got h={self.h}")
        return self

    @property
    def discharge(self) -> float:
        return self.h * self.u

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.h, self.u, self.a)


class Region(str, enum.Enum):
    A1 = "A1"
    A2_PLUS = "A2_PLUS"
    A2_MINUS = "A2_MINUS"
    A3 = "A3"
    C_PLUS = "C_PLUS"
    C_MINUS = "C_MINUS"
    U_ZERO_AXIS = "U_ZERO_AXIS"

    @property
    def supercritical(self) -> bool:
        return self in (Region.A1, Region.A3)

    @property
    def subcritical(self) -> bool:
        return self in (Region.A2_PLUS, Region.A2_MINUS, Region.U_ZERO_AXIS)

    @property
    def critical(self) -> bool:
        return self in (Region.C_PLUS, Region.C_MINUS)


_REFLECTED_REGION = {
    Region.A1: Region.A3,
    Region.A3: Region.A1,
    Region.A2_PLUS: Region.A2_MINUS,
    Region.A2_MINUS: Region.A2_PLUS,
    Region.C_PLUS: Region.C_MINUS,
    Region.C_MINUS: Region.C_PLUS,
    Region.U_ZERO_AXIS: Region.U_ZERO_AXIS,
}


def reflected_region(region: Region) -> Region:
    return _REFLECTED_REGION[region]


def celerity(h: float, g: float) -> float:
    return math.sqrt(g * h)


def classify(U: State, ctx: GravityContext = DEFAULT_CONTEXT) -> Region:
    """Return the region of ``U`` in the (h, u) plane.

    The critical curves are thickened into bands of half-width
    ``tol_abs * max(1, c)`` so that states produced by root finding right
    on the sonic line are classified deterministically.
    """
    U.check()
    c = celerity(U.h, ctx.g)
    band = ctx.tol_abs * max(1.0, c)
    if abs(U.u - c) <= band:
        return Region.C_PLUS
    if abs(U.u + c) <= band:
        return Region.C_MINUS
    if U.u > c:
        return Region.A1
    if U.u < -c:
        return Region.A3
    if abs(U.u) <= ctx.tol_abs:
        return Region.U_ZERO_AXIS
    return Region.A2_PLUS if U.u > 0 else Region.A2_MINUS


def froude_sign(U: State, ctx: GravityContext = DEFAULT_CONTEXT) -> int:
    """Sign of ``u**2 - g h``: +1 supercritical, -1 subcritical, 0 critical."""
    region = classify(U, ctx)
    if region.critical:
        return 0
    return 1 if region.supercritical else -1


def eigenstructure(U: State, ctx: GravityContext = DEFAULT_CONTEXT):
    """Characteristic speeds and right eigenvectors of the quasi-linear system.

    Returns ``(lam1, lam2, lam3, r1, r2, r3)`` with ``lam1 = u - c``,
    ``lam2 = u + c``, ``lam3 = 0`` and eigenvectors given in the
    ``(h, u, a)`` coordinates.
    """
    U.check()
    g = ctx.g
    c = celerity(U.h, g)
    lam1 = U.u - c
    lam2 = U.u + c
    r1 = (U.h, -c, 0.0)
    r2 = (U.h, c, 0.0)
    r3 = (g * U.h, -g * U.u, U.u * U.u - g * U.h)
    return lam1, lam2, 0.0, r1, r2, r3


def char_speed(family: int, U: State, g: float) -> float:
    c = math.sqrt(g * U.h)
    return U.u - c if family == 1 else U.u + c


def reflect_state(U: State) -> State:
    """Image of a state under ``x -> -x`` (velocity changes sign)."""
    return State(U.h, -U.u, U.a)
