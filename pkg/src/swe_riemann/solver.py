"""Top-level Riemann solver: runs every construction and returns all admissible solutions."""
from __future__ import annotations

from dataclasses import dataclass, field

from .curves import intersect_W1_W2B
from .errors import NoIntersection, VacuumData
from .generators import DEFAULT_GRID, GENERATORS, GeneratorResult
from .waves import (
    RiemannProblem,
    Solution,
    reflect_problem,
    reflect_solution,
    same_solution,
    validate,
)

__all__ = ["SolveResult", "normalize", "solve", "solve_detailed"]


def normalize(problem: RiemannProblem) -> tuple[RiemannProblem, bool]:
    """Reflect the problem, if needed, so that ``a_L <= a_R``."""
    if problem.U_L.a > problem.U_R.a:
        return reflect_problem(problem), True
    return problem, False


@dataclass
class SolveResult:
    solutions: list[Solution]
    reasons: dict[str, list[str]] = field(default_factory=dict)


def _tag_key(solution: Solution):
    tag = solution.structure_tag
    first = solution.waves[0].right.h if solution.waves else 0.0
    return (int(tag[1]), tag.endswith("m"), first)


def _run(problem: RiemannProblem, grid: int, mirrored: bool, reasons: dict) -> list[Solution]:
    target = reflect_problem(problem) if mirrored else problem
    found: list[Solution] = []
    for name, gen in GENERATORS.items():
        result: GeneratorResult = gen(target, grid)
        key = name + ("m" if mirrored else "")
        if result.reasons:
            reasons[key] = sorted(set(result.reasons))
        for sol in result.candidates:
            found.append(reflect_solution(sol) if mirrored else sol)
    return found


def _dedupe(solutions: list[Solution]) -> list[Solution]:
    unique: list[Solution] = []
    for sol in solutions:
        for kept in unique:
            if same_solution(kept, sol):
                extra = [t for t in sol.tags if t not in kept.tags]
                kept.aliases = tuple(kept.aliases) + tuple(extra)
                break
        else:
            unique.append(sol)
    return unique


def solve_detailed(problem: RiemannProblem, grid: int = DEFAULT_GRID) -> SolveResult:
    """Like :func:`solve` but also reports why each construction came up empty."""
    reasons: dict[str, list[str]] = {}
    if problem.flat:
        try:
            intersect_W1_W2B(problem.U_L, problem.U_R, problem.ctx)
        except NoIntersection as exc:
            raise VacuumData(str(exc)) from None
        result = GENERATORS["C2_C3"](problem, grid)
        sols = result.candidates
        if result.reasons:
            reasons["C2_C3"] = result.reasons
    else:
        work, reflected = normalize(problem)
        # the construction catalogue is applied in both orientations: a
        # structure that needs a step down is found in the mirrored frame
        sols = _run(work, grid, False, reasons) + _run(work, grid, True, reasons)
        if reflected:
            sols = [reflect_solution(s) for s in sols]
            reasons = {(k[:-1] if k.endswith("m") else k + "m"): v for k, v in reasons.items()}
        sols.sort(key=_tag_key)
        sols = _dedupe(sols)
    checked = []
    for sol in sols:
        report = validate(sol, problem)
        if report.valid:
            sol.diagnostics = report.as_diagnostics()
            sol.validated = True
            checked.append(sol)
    checked.sort(key=_tag_key)
    return SolveResult(checked, reasons)


def solve(problem: RiemannProblem, grid: int = DEFAULT_GRID) -> list[Solution]:
    """All admissible solutions found by the construction catalogue.

    An empty list is a legitimate answer: some data admit no solution.
    Solutions built in the mirrored frame carry tags with an ``m`` suffix
    (``"C5m"`` is the image of a C5 structure under ``x -> -x``).
    """
    return solve_detailed(problem, grid).solutions
