"""Strong-converse exponent above capacity, in two independent forms."""

import numpy as np

from relaybounds import channels, reliability

spec = channels.make_bac(0.01, 0.3)
c = channels.capacity_xy(spec).value
print(f"C_XY = {c:.6f}")

rates = c + np.linspace(0.0, 0.25, 6)
e = reliability.error_exponent(rates, spec)
alt = reliability.exponent_alt_form(rates, spec)
for r, a, b in zip(rates, e, alt):
    print(f"R={r:.4f}  E={a:.5f}  alt={b:.5f}  R-C={r - c:.5f}")

# The inverse maps an exponent budget back to the largest admissible rate.
y = float(reliability.error_exponent(channels.capacity_xyz(spec).value, spec))
print("E(C_XYZ) =", y, " inverse ->", reliability.inverse_exponent(y, spec))
