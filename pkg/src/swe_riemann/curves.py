"""Shock, rarefaction and composite wave curves of the two nonlinear families.

Every curve is parameterised by the depth ``h``.  Forward curves are
anchored at a left state and collect the admissible right states;
backward curves (suffix ``B`` in the usual notation) are anchored at a
right state and collect the admissible left states.  For family 1 the
velocity decreases with ``h``; for family 2 it increases.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_CONTEXT, GravityContext, Region, State, char_speed, classify
from .errors import (
    DegenerateJump,
    NoIntersection,
    NonPositiveDepth,
    NoSonicPoint,
    OffCurve,
    RangeViolation,
    WrongRegion,
)
from .roots import newton_bisect

__all__ = [
    "W1",
    "W1B",
    "W2",
    "W2B",
    "CurveSpec",
    "Direction",
    "WaveFamily",
    "check_lax",
    "curve_u_array",
    "hugoniot_u",
    "intersect_W1_W2B",
    "lax_margin",
    "rarefaction_u",
    "shock_speed",
    "sonic_point",
    "wave_curve_dudh",
    "wave_curve_u",
    "zero_speed_point",
]


class WaveFamily(enum.IntEnum):
    FAMILY_1 = 1
    FAMILY_2 = 2
    FAMILY_3 = 3


class Direction(str, enum.Enum):
    FORWARD = "FORWARD"
    BACKWARD = "BACKWARD"


@dataclass(frozen=True)
class CurveSpec:
    family: WaveFamily
    direction: Direction
    anchor: State

    def __post_init__(self):
        if self.family not in (WaveFamily.FAMILY_1, WaveFamily.FAMILY_2):
            raise ValueError("wave curves exist only for families 1 and 2")
        self.anchor.check()


def W1(anchor: State) -> CurveSpec:
    return CurveSpec(WaveFamily.FAMILY_1, Direction.FORWARD, anchor)


def W2(anchor: State) -> CurveSpec:
    return CurveSpec(WaveFamily.FAMILY_2, Direction.FORWARD, anchor)


def W1B(anchor: State) -> CurveSpec:
    return CurveSpec(WaveFamily.FAMILY_1, Direction.BACKWARD, anchor)


def W2B(anchor: State) -> CurveSpec:
    return CurveSpec(WaveFamily.FAMILY_2, Direction.BACKWARD, anchor)


def _sign(family) -> float:
    if family == 1:
        return -1.0
    if family == 2:
        return 1.0
    raise ValueError(f"family must be 1 or 2, got {family}")


def _positive(*hs: float) -> None:
    for h in hs:
        if not h > 0:
            raise NonPositiveDepth(f"depth must be positive, got {h}")


def hugoniot_u(family, h: float, U0: State, ctx: GravityContext = DEFAULT_CONTEXT) -> float:
    """Velocity on the ``family`` Hugoniot locus through ``U0`` at depth ``h``."""
    _positive(h, U0.h)
    s = _sign(family)
    return U0.u + s * math.sqrt(ctx.g / 2.0) * (h - U0.h) * math.sqrt(1.0 / h + 1.0 / U0.h)


def _hugoniot_dudh(s: float, h: float, h0: float, g: float) -> float:
    root = math.sqrt(1.0 / h + 1.0 / h0)
    return s * math.sqrt(g / 2.0) * (root - (h - h0) / (2.0 * h * h * root))


def rarefaction_u(
    family,
    h: float,
    U0: State,
    ctx: GravityContext = DEFAULT_CONTEXT,
    direction: Direction = Direction.FORWARD,
) -> float:
    """Velocity on the ``family`` integral curve through ``U0``.

    The admissible half-line depends on the direction: a forward 1-fan
    lowers the depth, a forward 2-fan raises it, and backward fans do the
    opposite.
    """
    _positive(h, U0.h)
    s = _sign(family)
    forward = Direction(direction) is Direction.FORWARD
    shallower_ok = (family == 1) == forward
    if shallower_ok and h > U0.h or not shallower_ok and h < U0.h:
        raise RangeViolation(
            f"family {int(family)} {Direction(direction).value.lower()} rarefaction "
            f"cannot reach h={h} from h0={U0.h}"
        )
    return U0.u + s * 2.0 * math.sqrt(ctx.g) * (math.sqrt(h) - math.sqrt(U0.h))


def _is_shock_branch(family, direction, h: float, h0: float) -> bool:
    forward = Direction(direction) is Direction.FORWARD
    deeper = h > h0
    # forward 1-shocks and backward 2-shocks increase the depth
    return deeper if (family == 1) == forward else h < h0


def wave_curve_u(spec: CurveSpec, h: float, ctx: GravityContext = DEFAULT_CONTEXT) -> float:
    _positive(h)
    U0 = spec.anchor
    s = _sign(spec.family)
    if _is_shock_branch(spec.family, spec.direction, h, U0.h):
        return U0.u + s * math.sqrt(ctx.g / 2.0) * (h - U0.h) * math.sqrt(1.0 / h + 1.0 / U0.h)
    return U0.u + s * 2.0 * math.sqrt(ctx.g) * (math.sqrt(h) - math.sqrt(U0.h))


def wave_curve_dudh(spec: CurveSpec, h: float, ctx: GravityContext = DEFAULT_CONTEXT) -> float:
    _positive(h)
    s = _sign(spec.family)
    if _is_shock_branch(spec.family, spec.direction, h, spec.anchor.h):
        return _hugoniot_dudh(s, h, spec.anchor.h, ctx.g)
    return s * math.sqrt(ctx.g / h)


def curve_u_array(family, direction, h0, u0, h, g: float):
    """Vectorised :func:`wave_curve_u`; anchors and depths broadcast."""
    h = np.asarray(h, dtype=float)
    h0 = np.asarray(h0, dtype=float)
    s = _sign(family)
    with np.errstate(invalid="ignore", divide="ignore"):
        shock = u0 + s * np.sqrt(g / 2.0) * (h - h0) * np.sqrt(1.0 / h + 1.0 / h0)
        fan = u0 + s * 2.0 * np.sqrt(g) * (np.sqrt(h) - np.sqrt(h0))
    forward = Direction(direction) is Direction.FORWARD
    use_shock = (h > h0) if (family == 1) == forward else (h < h0)
    return np.where(use_shock, shock, fan)


def _on_hugoniot(family, U0: State, U: State, g: float) -> float:
    """Signed velocity defect of ``U`` from the Hugoniot locus of ``U0``."""
    s = _sign(family)
    u_h = U0.u + s * math.sqrt(g / 2.0) * (U.h - U0.h) * math.sqrt(1.0 / U.h + 1.0 / U0.h)
    return U.u - u_h


def shock_speed(family, U0: State, U: State, ctx: GravityContext = DEFAULT_CONTEXT) -> float:
    """Speed of the ``family`` shock joining ``U0`` and ``U``.

    Uses the closed form ``u0 -/+ sqrt(g/2 (h + h**2/h0))`` and checks it
    against the mass-flux divided difference.
    """
    _positive(U.h, U0.h)
    g = ctx.g
    scale_h = max(U.h, U0.h)
    if abs(U.h - U0.h) <= ctx.tol_abs * max(1.0, scale_h):
        raise DegenerateJump("shock speed undefined for a jump of zero height")
    c_scale = max(1.0, abs(U.u), abs(U0.u), math.sqrt(g * scale_h))
    if abs(_on_hugoniot(family, U0, U, g)) > 1e-8 * c_scale:
        raise OffCurve(f"states are not on a common family-{int(family)} Hugoniot locus")
    s = _sign(family)
    return U0.u + s * math.sqrt(g / 2.0 * (U.h + U.h * U.h / U0.h))


def shock_speed_divided(U0: State, U: State) -> float:
    return (U.h * U.u - U0.h * U0.u) / (U.h - U0.h)


def lax_margin(family, U0: State, U: State, ctx: GravityContext = DEFAULT_CONTEXT) -> float:
    """Smallest gap in ``lam(U) < speed < lam(U0)``; positive when admissible."""
    speed = shock_speed(family, U0, U, ctx)
    return min(speed - char_speed(int(family), U, ctx.g), char_speed(int(family), U0, ctx.g) - speed)


def check_lax(family, U0: State, U: State, ctx: GravityContext = DEFAULT_CONTEXT) -> bool:
    """Lax admissibility of the shock with left state ``U0`` and right state ``U``."""
    return lax_margin(family, U0, U, ctx) > 0.0


def zero_speed_point(family, U0: State, ctx: GravityContext = DEFAULT_CONTEXT) -> float:
    """Depth at which a shock issued from ``U0`` becomes stationary.

    Family 1 (forward 1-shock, ``U0`` in A1) and family 2 (backward 2-shock,
    ``U0`` in A3) share the closed form
    ``(-h0 + sqrt(h0**2 + 8 h0 u0**2 / g)) / 2``.
    """
    region = classify(U0, ctx)
    if family == 1 and region is not Region.A1:
        raise WrongRegion(f"1-shock from a state in {region.value} never has zero speed")
    if family == 2 and region is not Region.A3:
        raise WrongRegion(f"backward 2-shock from a state in {region.value} never has zero speed")
    if family not in (1, 2):
        raise ValueError("family must be 1 or 2")
    h0 = U0.h
    return 0.5 * (-h0 + math.sqrt(h0 * h0 + 8.0 * h0 * U0.u * U0.u / ctx.g))


def sonic_point(U0: State, ctx: GravityContext = DEFAULT_CONTEXT) -> State:
    """End state of the 1-rarefaction from ``U0`` that stops on ``u = +sqrt(g h)``.

    Along the fan ``u + 2 sqrt(g h)`` is constant, so the sonic depth
    satisfies ``3 sqrt(g h) = u0 + 2 sqrt(g h0)``.
    """
    U0.check()
    g = ctx.g
    invariant = U0.u + 2.0 * math.sqrt(g * U0.h)
    if invariant <= 0:
        raise NoSonicPoint("the 1-rarefaction reaches vacuum before the sonic line")
    c = invariant / 3.0
    h = c * c / g
    if h > U0.h * (1.0 + 1e-14):
        raise NoSonicPoint("the state is supercritical; a 1-rarefaction moves away from C+")
    return State(h, math.sqrt(g * h), U0.a)


def intersect_W1_W2B(
    UL: State,
    UR: State,
    ctx: GravityContext = DEFAULT_CONTEXT,
    h_max_factor: float = 1e6,
) -> State:
    """Intersection of the forward 1-curve of ``UL`` with the backward 2-curve of ``UR``.

    The difference of the two velocities is strictly decreasing in ``h``, so
    the root is unique when it exists.  The returned state carries the
    bottom level of ``UL``.
    """
    UL.check()
    UR.check()
    g = ctx.g
    if UL.h == UR.h and UL.u == UR.u:
        return State(UL.h, UL.u, UL.a)
    s1, s2 = W1(UL), W2B(UR)

    def f(h):
        return wave_curve_u(s1, h, ctx) - wave_curve_u(s2, h, ctx)

    def df(h):
        return wave_curve_dudh(s1, h, ctx) - wave_curve_dudh(s2, h, ctx)

    if UL.u + 2.0 * math.sqrt(g * UL.h) <= UR.u - 2.0 * math.sqrt(g * UR.h):
        raise NoIntersection("wave curves meet only at zero depth (vacuum)")
    h_ref = max(UL.h, UR.h)
    hi = h_ref
    while f(hi) > 0:
        hi *= 2.0
        if hi > h_max_factor * h_ref:
            raise NoIntersection("no intersection below the depth ceiling")
    lo = min(UL.h, UR.h)
    while f(lo) < 0:
        lo *= 0.5
        if lo < 1e-14 * h_ref:
            raise NoIntersection("intersection depth below resolution (near vacuum)")
    h = newton_bisect(f, df, lo, hi, tol_abs=ctx.tol_abs, tol_rel=ctx.tol_rel, max_iter=ctx.max_iter)
    return State(h, wave_curve_u(s1, h, ctx), UL.a)
