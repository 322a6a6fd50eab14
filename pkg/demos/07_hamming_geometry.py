"""Exact counts in Hamming space and the blowing-up inequality for balls."""

from relaybounds import geometry, info

for n in (50, 100, 200, 400):
    v = geometry.exact_ball_volume(n, int(0.3 * n))
    print(f"n={n:<4} (1/n)log2|Ball| = {v.exponent():.5f}   limit {info.ball_exponent(0.3, 2):.5f}")

print("Inter count n=12, d0n=4, r=rho=4:", geometry.sphere_intersection(12, 4, 4, 4).value)
print("by enumeration:                 ", geometry.intersection_by_enumeration(12, 4)[4, 4])

r, v = geometry.f_r_argmax(0.3, 0.32)
print(f"f(r) peaks at r={r:.4f} (d0*q = {info.binary_convolve(0.3, 0.32):.4f}), value {v:.6f}")

rep = geometry.blowup_check(200, 80, 0.1, 0.5, trials=5000, seed=0)
print(f"Pr(A)={rep.prob_base:.3e}  blown radius {rep.blown_radius}  "
      f"Pr(blown)={rep.prob_blown:.5f} >= {rep.lower_bound:.5f}  (MC {rep.extra['monte_carlo_blown']:.4f})")
