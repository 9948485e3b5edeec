"""Exact Riemann solver for the shallow water equations over a bottom step.

The solver enumerates every admissible solution built from shocks,
rarefactions and stationary jumps at the step, validates each one, and
samples the resulting self-similar profiles.

>>> from swe_riemann import State, RiemannProblem, solve
>>> sols = solve(RiemannProblem(State(2.0, 0.0), State(1.0, 0.0)))
>>> [s.structure_tag for s in sols]
['C2']
"""
from .core import (
    DEFAULT_CONTEXT,
    GravityContext,
    Region,
    State,
    celerity,
    char_speed,
    classify,
    eigenstructure,
    reflect_state,
)
from .curves import (
    W1,
    W1B,
    W2,
    W2B,
    CurveSpec,
    Direction,
    WaveFamily,
    check_lax,
    hugoniot_u,
    intersect_W1_W2B,
    lax_margin,
    rarefaction_u,
    shock_speed,
    sonic_point,
    wave_curve_u,
    zero_speed_point,
)
from .errors import (
    ConvergenceFailure,
    DegenerateJump,
    DegenerateVelocity,
    EmptyBracket,
    NoIntersection,
    NonPositiveDepth,
    NoSolution,
    NoSonicPoint,
    NoStationaryWave,
    OffCurve,
    ParseError,
    RangeViolation,
    SWEError,
    UnvalidatedSolution,
    VacuumData,
    ValidationError,
    WrongRegion,
)
from .sampler import ProfileRequest, Side, interface_states, sample, sample_profile
from .solver import SolveResult, normalize, solve, solve_detailed
from .stationary import (
    Multiplicity,
    StationaryRoots,
    critical_data,
    jump_residuals,
    phi,
    stationary_curve,
    stationary_roots,
    sw_images,
    sw_map,
)
from .waves import (
    RiemannProblem,
    Solution,
    ValidationReport,
    Wave,
    WaveKind,
    reflect_problem,
    reflect_solution,
    same_solution,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_CONTEXT",
    "W1",
    "W1B",
    "W2",
    "W2B",
    "ConvergenceFailure",
    "CurveSpec",
    "DegenerateJump",
    "DegenerateVelocity",
    "Direction",
    "EmptyBracket",
    "GravityContext",
    "Multiplicity",
    "NoIntersection",
    "NoSolution",
    "NoSonicPoint",
    "NoStationaryWave",
    "NonPositiveDepth",
    "OffCurve",
    "ParseError",
    "ProfileRequest",
    "RangeViolation",
    "Region",
    "RiemannProblem",
    "SWEError",
    "Side",
    "Solution",
    "SolveResult",
    "State",
    "StationaryRoots",
    "UnvalidatedSolution",
    "VacuumData",
    "ValidationError",
    "ValidationReport",
    "Wave",
    "WaveFamily",
    "WaveKind",
    "WrongRegion",
    "celerity",
    "char_speed",
    "check_lax",
    "classify",
    "critical_data",
    "eigenstructure",
    "hugoniot_u",
    "interface_states",
    "intersect_W1_W2B",
    "jump_residuals",
    "lax_margin",
    "normalize",
    "phi",
    "rarefaction_u",
    "reflect_problem",
    "reflect_solution",
    "reflect_state",
    "same_solution",
    "sample",
    "sample_profile",
    "shock_speed",
    "solve",
    "solve_detailed",
    "sonic_point",
    "stationary_curve",
    "stationary_roots",
    "sw_images",
    "sw_map",
    "validate",
    "wave_curve_u",
    "zero_speed_point",
]
