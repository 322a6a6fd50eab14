"""Scalar information measures in bits.

Distributions are plain 1-D numpy arrays and channels are row-stochastic
2-D arrays (rows indexed by the input symbol). ``check_distribution`` and
``check_channel`` validate and, for tiny rounding drift, renormalize.
"""

import math

import numpy as np

LN2 = math.log(2.0)

SUM_TOL = 1e-12
RENORM_TOL = 1e-9


class DomainError(ValueError):
    """An argument lies outside the domain of the function."""


class DimensionError(ValueError):
    """Array shapes of a distribution and a channel do not agree."""


def check_distribution(p, name="p"):
    p = np.array(p, dtype=float)
    if p.ndim != 1 or p.size == 0:
        raise DimensionError(f"{name} must be a non-empty 1-D array")
    if not np.all(np.isfinite(p)) or np.any(p < 0):
        raise DomainError(f"{name} has negative or non-finite entries")
    dev = abs(p.sum() - 1.0)
    if dev > RENORM_TOL:
        raise DomainError(f"{name} sums to {p.sum():.12g}, not 1")
    if dev > 0:
        p = p / p.sum()
    return p


def check_channel(w, name="w"):
    w = np.array(w, dtype=float)
    if w.ndim != 2 or w.shape[0] == 0 or w.shape[1] == 0:
        raise DimensionError(f"{name} must be a non-empty 2-D array")
    if not np.all(np.isfinite(w)) or np.any(w < 0) or np.any(w > 1):
        raise DomainError(f"{name} has entries outside [0, 1]")
    dev = np.abs(w.sum(axis=1) - 1.0)
    if np.any(dev > RENORM_TOL):
        bad = int(np.argmax(dev))
        raise DomainError(f"row {bad} of {name} sums to {w[bad].sum():.12g}, not 1")
    if np.any(dev > 0):
        w = w / w.sum(axis=1, keepdims=True)
    return w


def _check_pair(px, w):
    px = check_distribution(px, "px")
    w = check_channel(w)
    if w.shape[0] != px.size:
        raise DimensionError(
            f"input distribution has {px.size} symbols, channel has {w.shape[0]} rows"
        )
    return px, w


def log2(x):
    """Base-2 logarithm through the module constant LN2."""
    if np.ndim(x) == 0:
        return math.log(x) / LN2
    return np.log(x) / LN2


def _xlog2x(p):
    p = np.asarray(p, dtype=float)
    out = np.zeros_like(p)
    pos = p > 0
    out[pos] = p[pos] * np.log2(p[pos])
    return out


def binary_entropy(r):
    """Binary entropy H(r) in bits; accepts scalars or arrays."""
    arr = np.asarray(r, dtype=float)
    if np.any(np.isnan(arr)) or np.any(arr < 0) or np.any(arr > 1):
        raise DomainError("binary entropy argument must lie in [0, 1]")
    h = -_xlog2x(arr) - _xlog2x(1.0 - arr)
    return float(h) if h.ndim == 0 else h


def entropy(p):
    p = check_distribution(p)
    return float(-_xlog2x(p).sum())


def conditional_entropy(px, w):
    """H(W|X) = -sum_x p(x) sum_w W(w|x) log W(w|x)."""
    px, w = _check_pair(px, w)
    return float(-(px[:, None] * _xlog2x(w)).sum())


def mutual_information(px, w):
    px, w = _check_pair(px, w)
    q = px @ w
    mi = -_xlog2x(q).sum() + (px[:, None] * _xlog2x(w)).sum()
    return max(float(mi), 0.0)


def conditional_relative_entropy(px, w_tilde, w):
    """D(w_tilde || w | px); +inf when w_tilde is not dominated by w on supp(px)."""
    px, w_tilde = _check_pair(px, w_tilde)
    w = check_channel(w)
    if w.shape != w_tilde.shape:
        raise DimensionError("w_tilde and w must have the same shape")
    joint = px[:, None] * w_tilde
    active = joint > 0
    if np.any(active & (w == 0)):
        return math.inf
    d = (joint[active] * np.log2(w_tilde[active] / w[active])).sum()
    return max(float(d), 0.0)


def binary_convolve(p1, p2):
    """Crossover probability p1*p2 of two cascaded binary symmetric channels."""
    a = np.asarray(p1, dtype=float)
    b = np.asarray(p2, dtype=float)
    for v in (a, b):
        if np.any(np.isnan(v)) or np.any(v < 0) or np.any(v > 1):
            raise DomainError("binary_convolve arguments must lie in [0, 1]")
    out = a * (1 - b) + b * (1 - a)
    return float(out) if out.ndim == 0 else out


def product_channel(w):
    """Channel X -> (Y, Z) with Y, Z i.i.d. given X; output index is y * m + z."""
    w = check_channel(w)
    k, m = w.shape
    return np.einsum("xy,xz->xyz", w, w).reshape(k, m * m)


def ball_exponent(r, alphabet_size):
    """Exponential growth rate of a Hamming ball of normalized radius r."""
    if alphabet_size < 2:
        raise DomainError("alphabet_size must be at least 2")
    if r < 0:
        raise DomainError("radius must be nonnegative")
    q = alphabet_size
    if r > (q - 1) / q:
        return math.log2(q)
    return binary_entropy(r) + r * math.log2(q - 1)
