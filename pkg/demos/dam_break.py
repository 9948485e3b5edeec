"""Dam break over a flat bottom.

Water at rest, 2 m deep on the left and 1 m deep on the right.  The exact
solution is a left-going rarefaction followed by a right-going bore; the
script prints the middle state, the wave speeds and a coarse profile at
t = 0.5 s.
"""
from swe_riemann import ProfileRequest, RiemannProblem, State, sample_profile, solve

problem = RiemannProblem(State(2.0, 0.0), State(1.0, 0.0))
(sol,) = solve(problem)

fan, bore = sol.waves
mid = fan.right
print(f"structure      {sol.structure_tag}")
print(f"middle state   h = {mid.h:.6f}  u = {mid.u:.6f}")
print(f"fan            {fan.speed_lo:+.4f} .. {fan.speed_hi:+.4f}")
print(f"bore speed     {bore.speed_lo:+.4f}")

table = sample_profile(sol, ProfileRequest(-4.0, 4.0, 0.5, 17))
print("\n     x        h        u")
for x, h, u, _ in table:
    print(f"{x:+7.2f}  {h:7.4f}  {u:7.4f}")
