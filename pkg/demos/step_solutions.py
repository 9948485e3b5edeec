"""Riemann problems over a bottom step.

Each case below produces a different wave structure.  For every solution
the script lists the waves from left to right together with the
diagnostics that the validator recorded.
"""
from swe_riemann import RiemannProblem, State, solve

CASES = {
    # still water meeting a step up: the level stays flat, so nothing moves
    "lake at rest": (State(1.0, 0.0, 0.0), State(0.8, 0.0, 0.2)),
    # subcritical flow with a step: jump, then waves on the upper level
    "subcritical step": (State(1.0, 0.0, 0.0), State(1.0, 0.0, 0.2)),
    # fast flow against a step: a slow bore, a jump to critical flow, a transonic fan
    "supercritical step": (State(1.0, 4.0, 0.0), State(1.2, 3.5, 0.1)),
    # a fast stream running down a step into slow water
    "step down into a pool": (State(0.5, 3.0, 0.0), State(1.5, 0.5, -0.2)),
}


def describe(sol):
    if not sol.waves:
        return ["    constant state " + str(sol.constant)]
    lines = []
    for w in sol.waves:
        speed = f"{w.speed_lo:+.4f}" if w.speed_lo == w.speed_hi else \
            f"{w.speed_lo:+.4f}..{w.speed_hi:+.4f}"
        lines.append(f"    {w.kind.value:<11} fam {int(w.family)}  speed {speed:<18}"
                     f" -> h={w.right.h:.5f} u={w.right.u:+.5f} a={w.right.a:+.3f}")
    return lines


for name, (UL, UR) in CASES.items():
    sols = solve(RiemannProblem(UL, UR))
    print(f"{name}: {len(sols)} solution(s)")
    for sol in sols:
        print(f"  {sol.structure_tag} (also {', '.join(sol.aliases) or '-'})")
        print("\n".join(describe(sol)))
        d = sol.diagnostics
        print(f"    max RH residual {d['max_rh_residual']:.1e}, "
              f"stationary residual {d['max_stationary_residual']:.1e}")
    print()
