"""Lower and upper bounds on the critical relay rate R0* for BSC links."""

import math

from relaybounds import cover

print("p       hf_upper  cutset    thm1      thm2      thm3")
for p in (0.01, 0.05, 0.1, 0.2, 0.3, 0.4, 0.45, 0.49):
    b = cover.cover_bounds(p)
    print(f"{p:<6}  {b.hf_upper:.6f}  {b.cutset_lower:.6f}  {b.thm1_lower:.6f}"
          f"  {b.thm2_lower:.6f}  {b.thm3_lower:.6f}")

# Near p = 1/2 the cut-set gap vanishes but the third bound stays positive.
for k in range(2, 7):
    print(f"p = 0.5 - 1e-{k}: thm3 = {cover.thm3_lower(0.5 - 10.0 ** -k):.8f}")
print("limit 1/(8 ln 2) =", 1 / (8 * math.log(2)))

# Ratio of the hash-and-forward bound to the cut-set bound for tiny p.
for k in (3, 6, 9):
    print(f"p = 1e-{k}: ratio {cover.hf_cs_ratio(10.0 ** -k):.4f}")
