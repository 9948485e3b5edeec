"""Candidate constructions C1-C7 for the Riemann problem with a bottom step.

Each generator assembles one family of wave sequences:

====  ==========================================  ==========================
tag   waves                                       free parameter
====  ==========================================  ==========================
C1    W3 + W1 + W2  (U_L supercritical, A1)       none
C2    W1 + W3 + W2  (U_L not in A3)               h of the state before W3
C3    W1 + W3 + W2  (U_L in A3)                   h of the state before W3
C4    W1 + W2 + W3  (U_R supercritical, A3)       none
C5    R1 + W3 + W1 + W2  (fan to the sonic line)  none
C6    W1 + R2 + W3 + W2  (jump from C-)           h of the sonic state
C7    W3 + S1 + W3 + W2  (zero-speed 1-shock)     intermediate bottom level
====  ==========================================  ==========================

Generators make no assumption on the sign of ``a_R - a_L``: whether a
stationary jump exists is decided at run time.  Every assembled candidate
is passed through :func:`~swe_riemann.waves.validate`; side conditions such
as "the 1-shock must not move left" are enforced by that check.  An empty
result carries the reason codes of the rejected attempts.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import Region, State, classify
from .curves import (
    W1,
    W2B,
    Direction,
    curve_u_array,
    hugoniot_u,
    intersect_W1_W2B,
    sonic_point,
    wave_curve_u,
    zero_speed_point,
)
from .errors import (
    NoIntersection,
    NonPositiveDepth,
    NoSonicPoint,
    NoStationaryWave,
    SWEError,
)
from .roots import scan_roots
from .stationary import critical_data, sw_images, sw_map, sw_map_array
from .waves import RiemannProblem, Solution, assemble, validate

__all__ = [
    "DEFAULT_GRID",
    "GENERATORS",
    "GeneratorResult",
    "generate_C1",
    "generate_C2_C3",
    "generate_C4",
    "generate_C5",
    "generate_C6",
    "generate_C7",
]

DEFAULT_GRID = 512
# depth range of the scans, relative to the data depths
SCAN_DEPTH_RATIO = 1e3


@dataclass
class GeneratorResult:
    candidates: list[Solution] = field(default_factory=list)
    reasons: list[str] = field(default_factory=list)

    def offer(self, solution: Solution, problem: RiemannProblem) -> None:
        report = validate(solution, problem)
        if report.valid:
            solution.diagnostics = report.as_diagnostics()
            solution.validated = True
            self.candidates.append(solution)
        else:
            checks = {v.check for v in report.violations}
            self.reasons.append("SpeedOrderViolation" if checks <= {"speed_order", "lax", "fan_direction"}
                                else "ValidationFailure:" + ",".join(sorted(checks)))


def _reason(exc: Exception) -> str:
    return type(exc).__name__


def _single(image) -> State:
    if isinstance(image, tuple):
        raise NoStationaryWave("critical source state: jump image is two-valued")
    return image


def generate_C1(problem: RiemannProblem, grid: int = DEFAULT_GRID) -> GeneratorResult:
    """Stationary jump first, then a right-moving 1-wave and a 2-wave."""
    out = GeneratorResult()
    UL, UR, ctx = problem.U_L, problem.U_R, problem.ctx
    if classify(UL, ctx) is not Region.A1:
        out.reasons.append("WrongRegion")
        return out
    try:
        U1 = _single(sw_map(UL, UR.a, ctx))
        U2 = intersect_W1_W2B(U1, UR, ctx)
    except (NoStationaryWave, NoIntersection) as exc:
        out.reasons.append(_reason(exc))
        return out
    out.offer(assemble("C1", [UL, U1, U2, UR], ["W3", "W1", "W2"], ctx), problem)
    return out


def _scan_grid(lo: float, hi: float, n: int) -> np.ndarray:
    return np.geomspace(lo, hi, n)


def generate_C2_C3(problem: RiemannProblem, grid: int = DEFAULT_GRID) -> GeneratorResult:
    """Left-moving 1-wave, stationary jump, right-moving 2-wave.

    The state ``U3`` before the jump runs over the part of the forward
    1-curve of ``U_L`` reached by non-positive speeds; every zero of the
    velocity mismatch with the backward 2-curve of ``U_R`` is a candidate.
    """
    out = GeneratorResult()
    UL, UR, ctx = problem.U_L, problem.U_R, problem.ctx
    g = ctx.g
    region = classify(UL, ctx)
    tag = "C3" if region is Region.A3 else "C2"
    if UL.a == UR.a:
        try:
            Um = intersect_W1_W2B(UL, UR, ctx)
        except NoIntersection as exc:
            out.reasons.append(_reason(exc))
            return out
        out.offer(assemble(tag, [UL, Um, UR], ["W1", "W2"], ctx), problem)
        return out

    if region is Region.A1:
        h_lo = zero_speed_point(1, UL, ctx)
    elif region is Region.C_PLUS:
        h_lo = UL.h
    else:
        try:
            h_lo = sonic_point(UL, ctx).h
        except NoSonicPoint:
            h_lo = 1e-6 * min(UL.h, UR.h)
    h_hi = SCAN_DEPTH_RATIO * max(UL.h, UR.h, h_lo)
    hs = _scan_grid(h_lo, h_hi, grid)
    c1 = W1(UL)
    c2 = W2B(UR)

    def mismatch_vec(h3):
        u3 = curve_u_array(1, Direction.FORWARD, UL.h, UL.u, h3, g)
        h1, u1 = sw_map_array(h3, u3, UL.a, UR.a, g, ctx.tol_abs)
        with np.errstate(invalid="ignore"):
            return curve_u_array(2, Direction.BACKWARD, UR.h, UR.u, h1, g) - u1

    def margin(h3: float) -> float:
        # the jump exists while the target level stays below the threshold
        return critical_data(State(h3, wave_curve_u(c1, h3, ctx), UL.a), ctx)[1] - UR.a

    def mismatch(h3: float) -> float:
        U3 = State(h3, wave_curve_u(c1, h3, ctx), UL.a)
        try:
            U1 = _single(sw_map(U3, UR.a, ctx))
        except (NoStationaryWave, NonPositiveDepth):
            return math.nan
        return wave_curve_u(c2, U1.h, ctx) - U1.u

    try:
        roots = scan_roots(mismatch, hs, max_iter=ctx.max_iter, f_vector=mismatch_vec,
                           margin=margin)
    except SWEError as exc:
        out.reasons.append(_reason(exc))
        return out
    if not roots:
        out.reasons.append("NoIntersection")
    for h3 in roots:
        U3 = State(h3, wave_curve_u(c1, h3, ctx), UL.a)
        try:
            U1 = _single(sw_map(U3, UR.a, ctx))
        except (NoStationaryWave, NonPositiveDepth) as exc:
            out.reasons.append(_reason(exc))
            continue
        out.offer(assemble(tag, [UL, U3, U1, UR], ["W1", "W3", "W2"], ctx), problem)
    return out


def generate_C4(problem: RiemannProblem, grid: int = DEFAULT_GRID) -> GeneratorResult:
    """1-wave and left-moving 2-wave, then the stationary jump into ``U_R``."""
    out = GeneratorResult()
    UL, UR, ctx = problem.U_L, problem.U_R, problem.ctx
    if classify(UR, ctx) is not Region.A3:
        out.reasons.append("WrongRegion")
        return out
    try:
        U1 = _single(sw_map(UR, UL.a, ctx))
        U2 = intersect_W1_W2B(UL, U1, ctx)
    except (NoStationaryWave, NoIntersection) as exc:
        out.reasons.append(_reason(exc))
        return out
    out.offer(assemble("C4", [UL, U2, U1, UR], ["W1", "W2", "W3"], ctx), problem)
    return out


def generate_C5(problem: RiemannProblem, grid: int = DEFAULT_GRID) -> GeneratorResult:
    """1-fan up to the sonic line, jump to the supercritical side, then W1 + W2."""
    out = GeneratorResult()
    UL, UR, ctx = problem.U_L, problem.U_R, problem.ctx
    region = classify(UL, ctx)
    if region is Region.A1:
        out.reasons.append("WrongRegion")
        return out
    try:
        U_plus = UL if region is Region.C_PLUS else sonic_point(UL, ctx)
        if U_plus.a == UR.a:
            raise NoStationaryWave("flat bottom")
        U1, _ = sw_images(U_plus, UR.a, ctx)
        U2 = intersect_W1_W2B(U1, UR, ctx)
    except (NoSonicPoint, NoStationaryWave, NoIntersection) as exc:
        out.reasons.append(_reason(exc))
        return out
    out.offer(assemble("C5", [UL, U_plus, U1, U2, UR], ["W1", "W3", "W1", "W2"], ctx), problem)
    return out


def generate_C6(problem: RiemannProblem, grid: int = DEFAULT_GRID) -> GeneratorResult:
    """Jump from the sonic line ``u = -sqrt(g h)`` preceded by a 2-fan.

    The sonic state ``U2`` at level ``a_L`` is found by matching its
    subcritical image at level ``a_R`` with the backward 2-curve of ``U_R``.
    """
    out = GeneratorResult()
    UL, UR, ctx = problem.U_L, problem.U_R, problem.ctx
    g = ctx.g
    if UL.a == UR.a:
        out.reasons.append("NoStationaryWave")
        return out
    c2 = W2B(UR)
    h_ref_lo = min(UL.h, UR.h) / SCAN_DEPTH_RATIO
    h_ref_hi = max(UL.h, UR.h) * SCAN_DEPTH_RATIO
    hs = _scan_grid(h_ref_lo, h_ref_hi, grid)
    def mismatch_vec(h2):
        h1, u1 = sw_map_array(h2, -np.sqrt(g * h2), UL.a, UR.a, g, branch="sub")
        with np.errstate(invalid="ignore"):
            return u1 - curve_u_array(2, Direction.BACKWARD, UR.h, UR.u, h1, g)

    def sonic(h2: float) -> State:
        return State(h2, -math.sqrt(g * h2), UL.a)

    def mismatch(h2: float) -> float:
        try:
            _, U1 = sw_images(sonic(h2), UR.a, ctx)
        except NoStationaryWave:
            return math.nan
        return U1.u - wave_curve_u(c2, U1.h, ctx)

    roots = scan_roots(mismatch, hs, max_iter=ctx.max_iter, f_vector=mismatch_vec)
    if not roots:
        out.reasons.append("NoIntersection")
    for h2 in roots:
        U2 = sonic(h2)
        try:
            _, U1 = sw_images(U2, UR.a, ctx)
            U3 = intersect_W1_W2B(UL, U2, ctx)
        except (NoStationaryWave, NoIntersection) as exc:
            out.reasons.append(_reason(exc))
            continue
        if U3.h > U2.h:
            out.reasons.append("SpeedOrderViolation")
            continue
        out.offer(assemble("C6", [UL, U3, U2, U1, UR], ["W1", "W2", "W3", "W2"], ctx), problem)
    return out


def generate_C7(problem: RiemannProblem, grid: int = DEFAULT_GRID) -> GeneratorResult:
    """Two stationary jumps around a zero-speed 1-shock at an intermediate level."""
    out = GeneratorResult()
    UL, UR, ctx = problem.U_L, problem.U_R, problem.ctx
    g = ctx.g
    if classify(UL, ctx) is not Region.A1:
        out.reasons.append("WrongRegion")
        return out
    if UL.a == UR.a:
        out.reasons.append("NoStationaryWave")
        return out
    c2 = W2B(UR)
    levels = np.linspace(UL.a, UR.a, grid)
    def mismatch_vec(a_m):
        h1, u1 = sw_map_array(UL.h, UL.u, UL.a, a_m, g, ctx.tol_abs)
        with np.errstate(invalid="ignore"):
            ht = 0.5 * (-h1 + np.sqrt(h1 * h1 + 8.0 * h1 * u1 * u1 / g))
            ut = u1 - np.sqrt(g / 2.0) * (ht - h1) * np.sqrt(1.0 / ht + 1.0 / h1)
            h2, u2 = sw_map_array(ht, ut, a_m, UR.a, g, ctx.tol_abs)
            return u2 - curve_u_array(2, Direction.BACKWARD, UR.h, UR.u, h2, g)

    def chain(a_m: float):
        U1 = _single(sw_map(UL, a_m, ctx))
        h_t = zero_speed_point(1, U1, ctx)
        Ut = State(h_t, hugoniot_u(1, h_t, U1, ctx), a_m)
        U2 = _single(sw_map(Ut, UR.a, ctx))
        return U1, Ut, U2

    def mismatch(a_m: float) -> float:
        try:
            _, _, U2 = chain(a_m)
        except (SWEError, ValueError):
            return math.nan
        return U2.u - wave_curve_u(c2, U2.h, ctx)

    def margin(a_m: float) -> float:
        m1 = critical_data(UL, ctx)[1] - a_m
        if m1 < 0:
            return m1
        try:
            U1 = _single(sw_map(UL, a_m, ctx))
            h_t = zero_speed_point(1, U1, ctx)
        except (SWEError, ValueError):
            return math.nan
        Ut = State(h_t, hugoniot_u(1, h_t, U1, ctx), a_m)
        return min(m1, critical_data(Ut, ctx)[1] - UR.a)

    roots = scan_roots(mismatch, levels, max_iter=ctx.max_iter, f_vector=mismatch_vec,
                       margin=margin)
    if not roots:
        out.reasons.append("EmptyBracket")
    for a_m in roots:
        try:
            U1, Ut, U2 = chain(a_m)
        except SWEError as exc:
            out.reasons.append(_reason(exc))
            continue
        out.offer(assemble("C7", [UL, U1, Ut, U2, UR], ["W3", "W1", "W3", "W2"], ctx), problem)
    return out


GENERATORS = {
    "C1": generate_C1,
    "C2_C3": generate_C2_C3,
    "C4": generate_C4,
    "C5": generate_C5,
    "C6": generate_C6,
    "C7": generate_C7,
}
