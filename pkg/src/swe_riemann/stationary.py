"""Stationary (zero-speed) jumps across a bottom step.

A stationary wave joining ``U0 = (h0, u0, a0)`` to ``U = (h, u, a)``
conserves the discharge ``h u`` and the Bernoulli head
``u**2 / 2 + g (h + a)``.  Eliminating ``u = h0 u0 / h`` leaves the scalar
equation ``phi(h) = 0`` with

    phi(h) = (a - a0) + u0**2 / (2 g) * (h0**2 / h**2 - 1) + h - h0.

``phi`` is convex with its minimum at the critical depth
``h_min = (u0**2 h0**2 / g) ** (1/3)``.  It has two roots (one
supercritical, one subcritical) as long as the step ``a - a0`` does not
exceed ``a_threshold - a0 = h0 (t - 1)**2 (t + 2) / 2`` with
``t = h_min / h0``; above that level the flow is choked.

The monotonicity criterion keeps the bottom level monotone along the
jump, which selects the root on the same side of the sonic line as
``U0``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_CONTEXT, GravityContext, State, classify
from .errors import DegenerateVelocity, NonPositiveDepth, NoStationaryWave
from .roots import newton_bisect

__all__ = [
    "Multiplicity",
    "StationaryRoots",
    "critical_data",
    "jump_residuals",
    "phi",
    "stationary_curve",
    "stationary_curve_dadh",
    "stationary_roots",
    "sw_images",
    "sw_map",
    "sw_map_array",
]


class Multiplicity(str, enum.Enum):
    TWO = "TWO"
    DOUBLE = "DOUBLE"
    NONE = "NONE"


@dataclass(frozen=True)
class StationaryRoots:
    h_star: float
    h_star_upper: float
    h_min: float
    a_threshold: float
    multiplicity: Multiplicity


def phi(h: float, U0: State, a: float, ctx: GravityContext = DEFAULT_CONTEXT) -> float:
    if not h > 0:
        raise NonPositiveDepth(f"depth must be positive, got {h}")
    U0.check()
    k = U0.u * U0.u / (2.0 * ctx.g)
    return (a - U0.a) + k * (U0.h * U0.h / (h * h) - 1.0) + h - U0.h


def _dphi(h: float, U0: State, g: float) -> float:
    return 1.0 - U0.u * U0.u * U0.h * U0.h / (g * h ** 3)


def critical_data(U0: State, ctx: GravityContext = DEFAULT_CONTEXT) -> tuple[float, float]:
    """Critical depth and the bottom level at which the two roots collide.

    For ``u0 == 0`` the critical depth is 0 and the threshold is reported
    as ``+inf``: still water crosses any step (the single jump keeps the
    free surface level).
    """
    U0.check()
    if U0.u == 0.0:
        return 0.0, math.inf
    h_min = (U0.u * U0.u * U0.h * U0.h / ctx.g) ** (1.0 / 3.0)
    t = h_min / U0.h
    return h_min, U0.a + 0.5 * (t - 1.0) ** 2 * (t + 2.0) * U0.h


def _cubic_seeds(B: float, D: float) -> tuple[float, float]:
    """Two positive roots of ``h**3 + B h**2 + D`` (``B < 0 < D``) by the trigonometric formula."""
    absB = -B
    arg = 1.0 + 27.0 * D / (2.0 * B ** 3)
    theta = math.acos(max(-1.0, min(1.0, arg)))
    upper = absB / 3.0 * (1.0 + 2.0 * math.cos(theta / 3.0))
    lower = absB / 3.0 * (1.0 + 2.0 * math.cos(theta / 3.0 - 2.0 * math.pi / 3.0))
    return lower, upper


def _polish(h: float, U0: State, a: float, g: float, h_min: float, below: bool):
    """Newton polish of a cubic seed; ``None`` if it does not settle quickly."""
    k = U0.u * U0.u / (2.0 * g)
    c = k * U0.h * U0.h
    base = (a - U0.a) - k - U0.h
    for _ in range(6):
        if not (0.0 < h < h_min if below else h > h_min):
            return None
        fh = base + c / (h * h) + h
        d = 1.0 - 2.0 * c / (h * h * h)
        if d == 0.0:
            return None
        step = fh / d
        h -= step
        if abs(step) <= 4e-16 * h:
            if 0.0 < h < h_min if below else h > h_min:
                return h
            return None
    return None


def stationary_roots(U0: State, a: float, ctx: GravityContext = DEFAULT_CONTEXT) -> StationaryRoots:
    """Both depths reachable from ``U0`` by a stationary jump to level ``a``."""
    U0.check()
    if U0.u == 0.0:
        raise DegenerateVelocity("u0 = 0: the jump is h = h0 + a0 - a, use sw_map")
    g = ctx.g
    h0 = U0.h
    h_min, a_thr = critical_data(U0, ctx)
    k = U0.u * U0.u / (2.0 * g)
    da = a - U0.a
    f = lambda h: phi(h, U0, a, ctx)
    df = lambda h: _dphi(h, U0, g)
    phi_min = f(h_min)
    band = 1e-13 * max(h0, abs(da), k)
    if phi_min > band:
        return StationaryRoots(math.nan, math.nan, h_min, a_thr, Multiplicity.NONE)
    if phi_min >= -band:
        return StationaryRoots(h_min, h_min, h_min, a_thr, Multiplicity.DOUBLE)
    lower_seed, upper_seed = _cubic_seeds(da - h0 - k, k * h0 * h0)
    eps = 0.5 * h0 * math.sqrt(k / (h0 + k + abs(da)))
    big = h0 + k + abs(da) + h_min
    kw = {"tol_abs": 1e-15 * max(h0, abs(da), k), "tol_rel": ctx.tol_rel, "max_iter": ctx.max_iter}
    if da == 0.0:
        # h0 is an exact root; keep it exact
        other_lo = h0 > h_min
        h_other = newton_bisect(f, df, *((eps, h_min) if other_lo else (h_min, big)),
                                x0=lower_seed if other_lo else upper_seed, **kw)
        lo, hi = (h_other, h0) if other_lo else (h0, h_other)
    else:
        lo = _polish(lower_seed, U0, a, g, h_min, True)
        if lo is None:
            lo = newton_bisect(f, df, eps, h_min, x0=lower_seed, **kw)
        hi = _polish(upper_seed, U0, a, g, h_min, False)
        if hi is None:
            hi = newton_bisect(f, df, h_min, big, x0=upper_seed, **kw)
    return StationaryRoots(lo, hi, h_min, a_thr, Multiplicity.TWO)


def sw_images(U0: State, a: float, ctx: GravityContext = DEFAULT_CONTEXT) -> tuple[State, State]:
    """Supercritical and subcritical images of ``U0`` at level ``a`` (in that order)."""
    roots = stationary_roots(U0, a, ctx)
    if roots.multiplicity is Multiplicity.NONE:
        raise NoStationaryWave(
            f"step to a={a} exceeds the critical level {roots.a_threshold} for this flow"
        )
    q = U0.h * U0.u
    return (
        State(roots.h_star, q / roots.h_star, a),
        State(roots.h_star_upper, q / roots.h_star_upper, a),
    )


def sw_map(U0: State, a: float, ctx: GravityContext = DEFAULT_CONTEXT):
    """State at level ``a`` joined to ``U0`` by an admissible stationary wave.

    The root on the same side of the sonic line as ``U0`` is chosen.  On
    the sonic line itself both images are admissible and a
    ``(supercritical, subcritical)`` pair is returned.
    """
    U0.check()
    if a == U0.a:
        return U0
    if U0.u == 0.0:
        h = U0.h + U0.a - a
        if not h > 0:
            raise NonPositiveDepth(f"still water cannot cover a step to a={a}: h={h}")
        return State(h, 0.0, a)
    region = classify(U0, ctx)
    sup, sub = sw_images(U0, a, ctx)
    if region.critical:
        return sup, sub
    return sup if region.supercritical else sub


def sw_map_array(h0, u0, a0, a, g: float, crit_band: float = 1e-10, branch: str = "mc"):
    """Vectorised :func:`sw_map` for scans.

    Returns ``(h, u)`` arrays; ``nan`` where no admissible jump exists or,
    for ``branch="mc"``, where the source state sits on the sonic line
    (two-valued map).  ``branch="sub"`` / ``"super"`` force the subcritical
    or supercritical root whatever the side of the source state.
    """
    h0, u0, a0, a = np.broadcast_arrays(*(np.asarray(x, dtype=float) for x in (h0, u0, a0, a)))
    k = u0 * u0 / (2.0 * g)
    da = a - a0
    B = da - h0 - k
    D = k * h0 * h0
    with np.errstate(invalid="ignore", divide="ignore", over="ignore"):
        absB = -B
        arg = 1.0 + 27.0 * D / (2.0 * B ** 3)
        ok = (B < 0) & (arg >= -1.0) & (D > 0)
        theta = np.arccos(np.clip(arg, -1.0, 1.0))
        upper = absB / 3.0 * (1.0 + 2.0 * np.cos(theta / 3.0))
        lower = absB / 3.0 * (1.0 + 2.0 * np.cos(theta / 3.0 - 2.0 * np.pi / 3.0))
        c0 = np.sqrt(g * h0)
        if branch == "mc":
            supercritical = np.abs(u0) > c0
        else:
            supercritical = np.full(h0.shape, branch == "super")
        h = np.where(supercritical, lower, upper)
        for _ in range(3):
            P = h * h * h + B * h * h + D
            dP = 3.0 * h * h + 2.0 * B * h
            step = np.where(dP != 0, P / dP, 0.0)
            h = h - step
        critical = np.abs(np.abs(u0) - c0) <= crit_band * np.maximum(1.0, c0)
        if branch != "mc":
            critical = np.zeros(h0.shape, dtype=bool)
        still = u0 == 0.0
        h = np.where(ok & ~critical & (h > 0), h, np.nan)
        h = np.where(still, np.where(h0 - da > 0, h0 - da, np.nan), h)
        h = np.where(da == 0.0, h0, h)
        u = np.where(da == 0.0, u0, h0 * u0 / h)
    return h, u


def stationary_curve(h: float, U0: State, ctx: GravityContext = DEFAULT_CONTEXT) -> tuple[float, float]:
    """Velocity and bottom level along the stationary curve through ``U0``."""
    if not h > 0:
        raise NonPositiveDepth(f"depth must be positive, got {h}")
    U0.check()
    u = U0.h * U0.u / h
    return u, U0.a + (U0.u * U0.u - u * u) / (2.0 * ctx.g) + U0.h - h


def stationary_curve_dadh(h: float, U0: State, ctx: GravityContext = DEFAULT_CONTEXT) -> float:
    u = U0.h * U0.u / h
    return 1.0 - u * u / (ctx.g * h)


def jump_residuals(UL: State, UR: State, ctx: GravityContext = DEFAULT_CONTEXT) -> tuple[float, float]:
    """Relative residuals of discharge and Bernoulli-head conservation."""
    g = ctx.g
    qL, qR = UL.h * UL.u, UR.h * UR.u
    mass = abs(qR - qL) / max(abs(qL), abs(qR), math.sqrt(g * max(UL.h, UR.h)) * min(UL.h, UR.h), 1e-300)
    headL = 0.5 * UL.u * UL.u + g * (UL.h + UL.a)
    headR = 0.5 * UR.u * UR.u + g * (UR.h + UR.a)
    scale = max(0.5 * UL.u * UL.u + g * (UL.h + abs(UL.a)), 0.5 * UR.u * UR.u + g * (UR.h + abs(UR.a)))
    return mass, abs(headR - headL) / scale
