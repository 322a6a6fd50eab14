"""Direct-link and broadcast-cut capacities for a few binary links."""

import numpy as np

from relaybounds import channels, info

# A BSC has a uniform optimal input and closed-form capacities.
bsc = channels.make_bsc(0.2)
print("BSC(0.2)  C_XY  =", channels.capacity_xy(bsc).value, " 1 - H(p) =", 1 - info.binary_entropy(0.2))
print("BSC(0.2)  C_XYZ =", channels.capacity_xyz(bsc).value)

# The asymmetric link needs a search over alpha = P(X = 0).
bac = channels.make_bac(0.01, 0.3)
for label, cap in (("C_XY", channels.capacity_xy(bac)), ("C_XYZ", channels.capacity_xyz(bac))):
    print(f"BAC(0.01, 0.3) {label:<5} = {cap.value:.6f} at alpha = {cap.argmax_input[0]:.5f}")

# Inputs with more than two symbols go through Blahut-Arimoto.
w = np.array([[0.8, 0.1, 0.1], [0.1, 0.8, 0.1], [0.1, 0.1, 0.8]])
res = channels.channel_capacity(w)
print("ternary symmetric:", res.value, "after", res.iterations, "iterations")
