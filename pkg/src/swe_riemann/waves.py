"""Elementary waves, Riemann solutions and their validation.

The validator is the ground truth for admissibility: every candidate
produced by a construction is re-checked here against the jump relations,
the Lax inequalities, the monotonicity criterion for stationary jumps and
the ordering of wave speeds.
"""
from __future__ import annotations

import enum
import math
from collections.abc import Sequence
from dataclasses import dataclass, field, replace

from .core import DEFAULT_CONTEXT, GravityContext, State, char_speed, reflect_state
from .curves import WaveFamily
from .errors import NonPositiveDepth
from .stationary import jump_residuals

__all__ = [
    "RiemannProblem",
    "Solution",
    "ValidationReport",
    "Violation",
    "Wave",
    "WaveKind",
    "assemble",
    "make_wave",
    "reflect_problem",
    "reflect_solution",
    "same_solution",
    "validate",
]

# thresholds of the admissibility checks
RH_TOL = 1e-9
STATIONARY_TOL = 1e-10
STATE_TOL = 1e-12
SPEED_TOL = 1e-9
MERGE_TOL = 1e-12
EPS = 2.0 ** -52


class WaveKind(str, enum.Enum):
    SHOCK = "SHOCK"
    RAREFACTION = "RAREFACTION"
    STATIONARY = "STATIONARY"


@dataclass(frozen=True)
class Wave:
    kind: WaveKind
    family: WaveFamily
    left: State
    right: State
    speed_lo: float
    speed_hi: float


@dataclass(frozen=True)
class RiemannProblem:
    U_L: State
    U_R: State
    ctx: GravityContext = DEFAULT_CONTEXT

    def __post_init__(self):
        for name, U in (("U_L", self.U_L), ("U_R", self.U_R)):
            if not U.h > 0:
                raise NonPositiveDepth(f"{name}.h must be positive, got {U.h}")

    @property
    def flat(self) -> bool:
        return self.U_L.a == self.U_R.a


@dataclass
class Solution:
    waves: tuple[Wave, ...]
    structure_tag: str
    aliases: tuple[str, ...] = ()
    diagnostics: dict = field(default_factory=dict)
    validated: bool = False
    g: float = DEFAULT_CONTEXT.g
    # data state of a wave-free (constant) solution
    constant: State | None = None

    @property
    def tags(self) -> tuple[str, ...]:
        return (self.structure_tag,) + tuple(self.aliases)

    @property
    def states(self) -> list[State]:
        """Constant states in order, from the left data to the right data."""
        if not self.waves:
            return []
        return [self.waves[0].left] + [w.right for w in self.waves]


@dataclass(frozen=True)
class Violation:
    check: str
    wave: int | None
    magnitude: float
    message: str


@dataclass
class ValidationReport:
    violations: list[Violation]
    max_rh_residual: float = 0.0
    max_stationary_residual: float = 0.0
    min_lax_margin: float = math.inf
    total_bottom_variation: float = 0.0

    @property
    def valid(self) -> bool:
        return not self.violations

    def as_diagnostics(self) -> dict:
        return {
            "max_rh_residual": self.max_rh_residual,
            "max_stationary_residual": self.max_stationary_residual,
            "min_lax_margin": self.min_lax_margin,
            "total_bottom_variation": self.total_bottom_variation,
        }


def _shock_speed_raw(family: int, left: State, right: State, g: float) -> float:
    s = -1.0 if family == 1 else 1.0
    return left.u + s * math.sqrt(g / 2.0 * (right.h + right.h * right.h / left.h))


def make_wave(kind: str, left: State, right: State, ctx: GravityContext = DEFAULT_CONTEXT) -> Wave:
    """Build the wave of type ``kind`` ('W1', 'W2' or 'W3') between two states.

    For the nonlinear families the shock/rarefaction choice follows from
    the depth change: 1-shocks and 2-rarefactions deepen the flow.
    """
    g = ctx.g
    if kind == "W3":
        return Wave(WaveKind.STATIONARY, WaveFamily.FAMILY_3, left, right, 0.0, 0.0)
    family = 1 if kind == "W1" else 2
    deeper = right.h > left.h
    if (family == 1) == deeper:
        speed = _shock_speed_raw(family, left, right, g)
        # zero-speed shocks come out as round-off; keep them in the x = 0 cluster
        scale = max(abs(left.u), abs(right.u)) + math.sqrt(g * max(left.h, right.h))
        if abs(speed) <= 64 * EPS * scale:
            speed = 0.0
        return Wave(WaveKind.SHOCK, WaveFamily(family), left, right, speed, speed)
    return Wave(
        WaveKind.RAREFACTION,
        WaveFamily(family),
        left,
        right,
        char_speed(family, left, g),
        char_speed(family, right, g),
    )


def _close(U: State, V: State, tol: float) -> bool:
    scale_h = max(U.h, V.h)
    scale_u = max(1.0, abs(U.u), abs(V.u))
    return (
        abs(U.h - V.h) <= tol * scale_h
        and abs(U.u - V.u) <= tol * scale_u
        and U.a == V.a
    )


def assemble(
    tag: str,
    states: Sequence[State],
    kinds: Sequence[str],
    ctx: GravityContext = DEFAULT_CONTEXT,
) -> Solution:
    """Chain waves through ``states``; zero-strength waves are dropped.

    ``kinds[i]`` is the wave type joining ``states[i]`` and ``states[i+1]``.
    Intermediate states that coincide with their predecessor are merged so
    that the wave list stays exactly chained.
    """
    kept = [states[0]]
    kept_kinds: list[str] = []
    last = len(states) - 1
    for i in range(1, len(states)):
        U = states[i]
        if _close(kept[-1], U, MERGE_TOL):
            if i == last:
                # keep the exact data on the right
                kept[-1] = U
            continue
        kept.append(U)
        kept_kinds.append(kinds[i - 1])
    waves = tuple(make_wave(k, kept[j], kept[j + 1], ctx) for j, k in enumerate(kept_kinds))
    return Solution(waves=waves, structure_tag=tag, g=ctx.g, constant=None if waves else kept[0])


def _rh_residuals(w: Wave, g: float) -> float:
    L, R, s = w.left, w.right, w.speed_lo
    mass = -s * (R.h - L.h) + (R.h * R.u - L.h * L.u)
    mom = -s * (R.h * R.u - L.h * L.u) + (
        R.h * R.u * R.u + 0.5 * g * R.h * R.h - L.h * L.u * L.u - 0.5 * g * L.h * L.h
    )
    mass_scale = max(abs(s) * max(L.h, R.h), abs(L.h * L.u), abs(R.h * R.u), 1e-300)
    mom_scale = max(
        abs(s) * max(abs(L.h * L.u), abs(R.h * R.u)),
        L.h * L.u * L.u + 0.5 * g * L.h * L.h,
        R.h * R.u * R.u + 0.5 * g * R.h * R.h,
    )
    return max(abs(mass) / mass_scale, abs(mom) / mom_scale)


def validate(solution: Solution, problem: RiemannProblem) -> ValidationReport:
    """Check a solution against the data and every admissibility condition."""
    ctx = problem.ctx
    g = ctx.g
    report = ValidationReport(violations=[])
    bad = report.violations
    waves = solution.waves
    UL, UR = problem.U_L, problem.U_R

    def state_gap(U: State, V: State) -> float:
        return max(
            abs(U.h - V.h) / max(U.h, V.h),
            abs(U.u - V.u) / max(1.0, abs(U.u), abs(V.u)),
            abs(U.a - V.a) / max(1.0, abs(U.a), abs(V.a)),
        )

    if not waves:
        gap = state_gap(UL, UR)
        if gap > STATE_TOL:
            bad.append(Violation("endpoints", None, gap, "no waves but the data differ"))
        return report

    gap = state_gap(waves[0].left, UL)
    if gap > STATE_TOL:
        bad.append(Violation("endpoints", 0, gap, "first wave does not start at U_L"))
    gap = state_gap(waves[-1].right, UR)
    if gap > STATE_TOL:
        bad.append(Violation("endpoints", len(waves) - 1, gap, "last wave does not end at U_R"))

    total_da = 0.0
    for k, w in enumerate(waves):
        L, R = w.left, w.right
        if not (L.h > 0 and R.h > 0):
            bad.append(Violation("depth", k, min(L.h, R.h), "non-positive depth"))
            continue
        if k + 1 < len(waves):
            gap = state_gap(R, waves[k + 1].left)
            if gap > STATE_TOL:
                bad.append(Violation("chaining", k, gap, "consecutive waves do not share a state"))
        if w.kind is WaveKind.STATIONARY:
            mass, head = jump_residuals(L, R, ctx)
            res = max(mass, head)
            report.max_stationary_residual = max(report.max_stationary_residual, res)
            if res > STATIONARY_TOL:
                bad.append(Violation("stationary_jump", k, res, "discharge/head not conserved"))
            if w.speed_lo != 0.0 or w.speed_hi != 0.0:
                bad.append(Violation("stationary_speed", k, max(abs(w.speed_lo), abs(w.speed_hi)),
                                     "stationary wave with nonzero speed"))
            # bottom level is monotone along the jump iff the critical depth
            # of the discharge is not strictly inside the depth range
            q = L.h * L.u
            h_crit = (q * q / g) ** (1.0 / 3.0)
            lo, hi = sorted((L.h, R.h))
            inside = min(h_crit - lo, hi - h_crit) / hi
            if inside > 1e-9:
                bad.append(Violation("monotonicity", k, inside, "stationary jump crosses the sonic line"))
            total_da += abs(R.a - L.a)
            continue

        family = int(w.family)
        if L.a != R.a:
            bad.append(Violation("bottom", k, abs(R.a - L.a), "nonlinear wave across a bottom step"))
        if w.kind is WaveKind.SHOCK:
            speed = _shock_speed_raw(family, L, R, g)
            drift = abs(speed - w.speed_lo) + abs(w.speed_hi - w.speed_lo)
            if drift > SPEED_TOL * max(1.0, abs(speed)):
                bad.append(Violation("shock_speed", k, drift, "recorded speed inconsistent"))
            res = _rh_residuals(w, g)
            report.max_rh_residual = max(report.max_rh_residual, res)
            if res > RH_TOL:
                bad.append(Violation("rankine_hugoniot", k, res, "shock violates Rankine-Hugoniot"))
            margin = min(speed - char_speed(family, R, g), char_speed(family, L, g) - speed)
            report.min_lax_margin = min(report.min_lax_margin, margin)
            if not margin > 0:
                bad.append(Violation("lax", k, -margin, "shock violates the Lax inequalities"))
        else:
            # family 1 keeps u + 2c, family 2 keeps u - 2c
            s = 1.0 if family == 1 else -1.0
            invL = L.u + s * 2.0 * math.sqrt(g * L.h)
            invR = R.u + s * 2.0 * math.sqrt(g * R.h)
            scale = max(1.0, abs(L.u), abs(R.u), math.sqrt(g * max(L.h, R.h)))
            res = abs(invR - invL) / scale
            report.max_rh_residual = max(report.max_rh_residual, res)
            if res > RH_TOL:
                bad.append(Violation("riemann_invariant", k, res, "rarefaction endpoints off the integral curve"))
            lamL, lamR = char_speed(family, L, g), char_speed(family, R, g)
            drift = abs(lamL - w.speed_lo) + abs(lamR - w.speed_hi)
            if drift > SPEED_TOL * max(1.0, abs(lamL), abs(lamR)):
                bad.append(Violation("fan_speed", k, drift, "recorded fan speeds inconsistent"))
            if lamR < lamL:
                bad.append(Violation("fan_direction", k, lamL - lamR, "characteristic speed decreases through fan"))

    for k in range(len(waves) - 1):
        a, b = waves[k], waves[k + 1]
        overlap = a.speed_hi - b.speed_lo
        if overlap > SPEED_TOL * max(1.0, abs(a.speed_hi), abs(b.speed_lo)):
            bad.append(Violation("speed_order", k, overlap, "waves out of speed order"))

    report.total_bottom_variation = total_da
    jump = abs(UR.a - UL.a)
    if abs(total_da - jump) > 1e-12 * max(1.0, abs(UL.a), abs(UR.a)):
        bad.append(Violation("bottom_variation", None, abs(total_da - jump),
                             "stationary waves do not carry exactly |a_R - a_L|"))
    return report


def reflect_problem(problem: RiemannProblem) -> RiemannProblem:
    """Image under ``x -> -x``: data swapped, velocities negated."""
    return RiemannProblem(reflect_state(problem.U_R), reflect_state(problem.U_L), problem.ctx)


def _mirror_tag(tag: str) -> str:
    return tag[:-1] if tag.endswith("m") else tag + "m"


def reflect_solution(solution: Solution) -> Solution:
    waves = []
    for w in reversed(solution.waves):
        family = w.family
        if family != WaveFamily.FAMILY_3:
            family = WaveFamily(3 - int(family))
        # 0.0 - s keeps zero speeds as +0.0 in the output
        waves.append(Wave(w.kind, family, reflect_state(w.right), reflect_state(w.left),
                          0.0 - w.speed_hi, 0.0 - w.speed_lo))
    return replace(
        solution,
        waves=tuple(waves),
        structure_tag=_mirror_tag(solution.structure_tag),
        aliases=tuple(_mirror_tag(t) for t in solution.aliases),
        diagnostics=dict(solution.diagnostics),
        constant=None if solution.constant is None else reflect_state(solution.constant),
    )


def same_solution(s1: Solution, s2: Solution, tol: float = 1e-8) -> bool:
    """Equal wave sequences, endpoints agreeing within ``tol``."""
    if len(s1.waves) != len(s2.waves):
        return False
    for w1, w2 in zip(s1.waves, s2.waves):
        if w1.kind is not w2.kind or w1.family != w2.family:
            return False
        for U, V in ((w1.left, w2.left), (w1.right, w2.right)):
            if abs(U.h - V.h) > tol * max(1.0, U.h) or abs(U.u - V.u) > tol * max(1.0, abs(U.u)) \
                    or abs(U.a - V.a) > tol * max(1.0, abs(U.a)):
                return False
    return True
