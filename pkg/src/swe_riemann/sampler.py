"""Evaluation of self-similar Riemann solutions at ``xi = x / t``."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .core import State
from .errors import UnvalidatedSolution
from .waves import Solution, WaveKind

__all__ = ["ProfileRequest", "Side", "interface_states", "sample", "sample_profile"]


class Side(str, enum.Enum):
    LEFT = "LEFT"
    RIGHT = "RIGHT"


@dataclass(frozen=True)
class ProfileRequest:
    x_min: float
    x_max: float
    t: float
    n: int
    side_at_zero: Side = Side.RIGHT

    def __post_init__(self):
        if not self.x_min < self.x_max:
            raise ValueError("x_min must be smaller than x_max")
        if not self.t > 0:
            raise ValueError("t must be positive")
        if self.n < 2:
            raise ValueError("n must be at least 2")


def _fan_state(family: int, anchor: State, xi: float, g: float) -> State:
    ca = math.sqrt(g * anchor.h)
    if family == 1:
        c = (anchor.u + 2.0 * ca - xi) / 3.0
        u = xi + c
    else:
        c = (xi - anchor.u + 2.0 * ca) / 3.0
        u = xi - c
    return State(c * c / g, u, anchor.a)


def sample(solution: Solution, xi: float, side_at_zero: Side = Side.RIGHT) -> State:
    """State of the solution at ``x / t = xi``.

    Discontinuities take their right limit, except at ``xi = 0`` with
    ``side_at_zero=LEFT`` where the whole cluster of zero-speed waves is
    approached from the left.
    """
    if not solution.validated:
        raise UnvalidatedSolution("sample() needs a validated solution")
    waves = solution.waves
    if not waves:
        return solution.constant
    left_at_zero = xi == 0.0 and Side(side_at_zero) is Side.LEFT
    for w in waves:
        if xi < w.speed_lo or (left_at_zero and w.speed_lo == 0.0 and w.speed_hi == 0.0):
            return w.left
        if w.kind is WaveKind.RAREFACTION and xi < w.speed_hi:
            if xi == w.speed_lo:
                return w.left
            return _fan_state(int(w.family), w.left, xi, solution.g)
    return waves[-1].right


def interface_states(solution: Solution) -> list[State]:
    """Ordered states inside the zero-speed cluster at ``xi = 0``.

    Begins with the left limit and ends with the right limit; interior
    entries are the zero-measure states between stacked stationary jumps.
    """
    zero = [w for w in solution.waves if w.speed_lo == 0.0 and w.speed_hi == 0.0]
    if not zero:
        return []
    return [zero[0].left] + [w.right for w in zero]


def sample_profile(solution: Solution, req: ProfileRequest) -> np.ndarray:
    """Table of ``(x, h, u, a)`` rows at ``n`` evenly spaced points."""
    if not solution.validated:
        raise UnvalidatedSolution("sample_profile() needs a validated solution")
    xs = np.linspace(req.x_min, req.x_max, req.n)
    rows = np.empty((req.n, 4))
    for i, x in enumerate(xs):
        U = sample(solution, x / req.t, req.side_at_zero)
        rows[i] = (x, U.h, U.u, U.a)
    return rows
