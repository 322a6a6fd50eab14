"""Smallest relay rate compatible with C_XYZ on BAC(0.01, 0.3)."""

from relaybounds import bounds, channels, reproduce

spec = channels.make_bac(0.01, 0.3)
xc = bounds.xue_critical(spec)
tc = bounds.theorem1_critical(spec)
print(f"Xue:   E(C_XYZ)={xc.exponent:.5f}  a={xc.a:.6f}  R0 >= {xc.r0:.5f}")
print(f"Thm 1: I(X;Y)={tc.mi_xy:.5f}  a={tc.a:.6f}  R0 >= {tc.r0:.5f}")

print()
for row in reproduce.bac_example():
    mark = "" if row.ok else "   <- outside tolerance"
    print(f"{row.name:<10} {row.computed:.6f}  ref {row.reference}{mark}")

# The reference maximizers sit one coarse grid step away from the optimum.
for k, v in reproduce.bac_at_reference_alpha().items():
    print(f"{k:<18} {v:.6f}")
