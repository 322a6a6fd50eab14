"""Grid search with local refinement, shared by the optimizers."""

import itertools

import numpy as np
from scipy.optimize import minimize_scalar


def maximize_1d(f, lo, hi, step, xtol=1e-10):
    """Maximize f on [lo, hi]: dense grid, then bounded refinement around the best point.

    ``f`` must accept a 1-D array. Returns ``(x, f(x))``. The refined point is
    kept only if it beats the grid value, so the result is never worse than
    the grid optimum. Ties on the grid go to the lowest x.
    """
    n = max(int(round((hi - lo) / step)), 1)
    xs = np.linspace(lo, hi, n + 1)
    vals = np.asarray(f(xs), dtype=float)
    i = int(np.argmax(vals))
    best_x, best_v = float(xs[i]), float(vals[i])
    a, b = xs[max(i - 1, 0)], xs[min(i + 1, n)]
    if b > a:
        res = minimize_scalar(
            lambda x: -float(np.asarray(f(np.array([x])))[0]),
            bounds=(a, b),
            method="bounded",
            options={"xatol": xtol},
        )
        if -res.fun > best_v:
            best_x, best_v = float(res.x), float(-res.fun)
    return best_x, best_v


def simplex_lattice(k, step):
    """All points of the probability simplex in R^k whose coordinates are multiples of step."""
    n = int(round(1.0 / step))
    pts = []
    for bars in itertools.combinations(range(n + k - 1), k - 1):
        prev = -1
        parts = []
        for b in bars:
            parts.append(b - prev - 1)
            prev = b
        parts.append(n + k - 2 - prev)
        pts.append(parts)
    return np.array(pts, dtype=float) / n
