"""Wave curves through a subcritical state.

Tabulates the forward 1-curve, the backward 2-curve and the stationary
curve through U0 = (1, 1, 0), and marks where the stationary curve meets
the sonic line.
"""
import math

from swe_riemann import W1, W2B, State, critical_data, stationary_curve, wave_curve_u

g = 9.81
U0 = State(1.0, 1.0, 0.0)
h_min, a_thr = critical_data(U0)
print(f"sonic depth {h_min:.5f}, highest passable step {a_thr:.5f}\n")

print("   h       W1(h)     W2B(h)    W3 u      W3 a")
for h in (0.3, 0.4, h_min, 0.6, 0.8, 1.0, 1.5, 2.0):
    u3, a3 = stationary_curve(h, U0)
    mark = "  <- sonic" if math.isclose(h, h_min) else ""
    print(f"{h:6.3f}  {wave_curve_u(W1(U0), h):+8.4f}  {wave_curve_u(W2B(U0), h):+8.4f}"
          f"  {u3:+8.4f}  {a3:+8.4f}{mark}")
