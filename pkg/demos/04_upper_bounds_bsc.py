"""Four upper bounds on C(R0) for a BSC(0.2) relay channel, across relay rates.

The resulting table is the data behind the relay-rate figure; pass it to
``relaybounds sweep-bounds --emit-gnuplot`` to get a plot script.
"""

from relaybounds import bounds, reproduce

print("r0      cutset    xue       thm1      thm2      (active constraint of thm2)")
for r0 in reproduce.grid(0.15, 0.21, 0.01):
    res = bounds.bsc_suite(0.2, float(r0))
    vals = "  ".join(f"{res[n].value:.6f}" for n in bounds.BOUND_NAMES)
    print(f"{r0:.3f}  {vals}  {res['thm2'].active_constraint}")
