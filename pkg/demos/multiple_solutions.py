"""Non-uniqueness near resonance.

A supercritical inflow whose zero-speed 1-shock lands exactly at the step
admits two admissible solutions: the shock can sit in front of the step,
or the flow can jump first and the bore runs slowly downstream.  Both pass
every admissibility check.
"""
from swe_riemann import (
    W2,
    RiemannProblem,
    State,
    hugoniot_u,
    solve,
    sw_map,
    wave_curve_u,
    zero_speed_point,
)

UL = State(1.0, 5.0, 0.0)
h_t = zero_speed_point(1, UL)
U_shock = State(h_t, hugoniot_u(1, h_t, UL), 0.0)
U_step = sw_map(U_shock, 0.1)
h_R = 1.3 * U_step.h
UR = State(h_R, wave_curve_u(W2(U_step), h_R), 0.1)

sols = solve(RiemannProblem(UL, UR))
print(f"U_L = {UL}\nU_R = {UR}\n{len(sols)} solutions\n")
for sol in sols:
    kinds = " + ".join(f"{w.kind.value.lower()}({w.speed_lo:+.3f})" for w in sol.waves)
    print(f"{sol.structure_tag:<4} {kinds}")
    print(f"     min Lax margin {sol.diagnostics['min_lax_margin']:.3e}")
