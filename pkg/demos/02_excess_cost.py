"""How much extra description cost can a small total-variation shift buy?"""

import numpy as np

from relaybounds import channels, delta

w = channels.make_bsc(0.2).link
px = np.array([0.5, 0.5])
for d in (0.0, 0.05, 0.2, 0.8, 0.9):
    sol = delta.delta_general(px, w, d)
    print(f"d={d:<4}  greedy {sol.value:.6f}  closed form {float(delta.delta_bsc(0.2, d)):.6f}"
          f"  saturated={sol.saturated}")

# The whole curve is piecewise linear and concave in d.
bac = channels.make_bac(0.01, 0.3).link
curve = delta.DeltaCurve([0.53, 0.47], bac)
print("BAC knots (d, Delta):")
for d, v in zip(curve.knots_d, curve.knots_v):
    print(f"  {d:.4f}  {v:.4f}")

# A zero in a used row makes the cost unbounded for any d > 0.
print("BEC:", delta.delta_general(px, channels.make_bec(0.3).link, 0.01).value)
