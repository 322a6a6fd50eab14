"""Exact Hamming-space counts and the blowing-up inequality for balls.

Counts are Python integers; probabilities in ``blowup_check`` are exact
rationals (the float q is converted to the binary fraction it represents)
and are compared with the concentration bound in 50-digit arithmetic.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np

from relaybounds import info
from relaybounds.info import DomainError

WINDOW_TOL = 1e-12


@dataclass
class ExactCount:
    value: int
    n: int
    params: dict = field(default_factory=dict)

    def log2(self):
        return math.log2(self.value) if self.value > 0 else -math.inf

    def exponent(self):
        """(1/n) log2 of the count."""
        return self.log2() / self.n


def exact_ball_volume(n, radius, alphabet_size=2):
    if n < 0 or not (0 <= radius <= n):
        raise DomainError("need 0 <= radius <= n")
    if alphabet_size < 2:
        raise DomainError("alphabet_size must be at least 2")
    total = sum(math.comb(n, k) * (alphabet_size - 1) ** k for k in range(radius + 1))
    return ExactCount(total, n, {"radius": radius, "alphabet_size": alphabet_size})


def f_window(d0, q):
    return max(q - d0, d0 - q), min(q + d0, 2 - q - d0)


def f_r(r, d0, q):
    """Exponent of the sphere intersection Inter(r, q) around centers at distance d0."""
    if not (0 < d0 < 1 and 0 < q < 1):
        raise DomainError("d0 and q must lie in (0, 1)")
    lo, hi = f_window(d0, q)
    r = np.asarray(r, dtype=float)
    if np.any(r < lo - WINDOW_TOL) or np.any(r > hi + WINDOW_TOL):
        raise DomainError(f"r outside the window [{lo}, {hi}]")
    t1 = np.clip((r + d0 - q) / (2 * d0), 0.0, 1.0)
    t2 = np.clip((r + q - d0) / (2 * (1 - d0)), 0.0, 1.0)
    out = d0 * info.binary_entropy(t1) + (1 - d0) * info.binary_entropy(t2)
    return float(out) if np.ndim(out) == 0 else out


def f_r_argmax(d0, q, step=1e-4):
    lo, hi = f_window(d0, q)
    rs = np.linspace(lo, hi, int(round((hi - lo) / step)) + 1)
    vals = f_r(rs, d0, q)
    i = int(np.argmax(vals))
    return float(rs[i]), float(vals[i])


def sphere_intersection(n, d0n, rn, rhon):
    """Points at distance rn from 0 and distance rhon from a point z0 of weight d0n."""
    if not (0 <= d0n <= n) or rn < 0 or rhon < 0:
        raise DomainError("distances must be nonnegative and d0n <= n")
    params = {"d0n": d0n, "rn": rn, "rhon": rhon}
    two_n1 = rn + d0n - rhon
    two_n2 = rn + rhon - d0n
    if two_n1 % 2 or two_n2 % 2:
        return ExactCount(0, n, params)
    n1, n2 = two_n1 // 2, two_n2 // 2
    if not (0 <= n1 <= d0n and 0 <= n2 <= n - d0n):
        return ExactCount(0, n, params)
    return ExactCount(math.comb(d0n, n1) * math.comb(n - d0n, n2), n, params)


def _popcount(x):
    x = x.astype(np.uint64)
    count = np.zeros(x.shape, dtype=np.int64)
    while np.any(x):
        count += (x & np.uint64(1)).astype(np.int64)
        x >>= np.uint64(1)
    return count


def intersection_by_enumeration(n, d0n):
    """Table T[rn, rhon] of intersection sizes from a full scan of {0,1}^n."""
    if n > 24:
        raise DomainError("enumeration limited to n <= 24")
    pts = np.arange(2 ** n, dtype=np.uint64)
    z0 = np.uint64((1 << d0n) - 1)
    d_y = _popcount(pts)
    d_z = _popcount(pts ^ z0)
    table = np.zeros((n + 1, n + 1), dtype=np.int64)
    np.add.at(table, (d_y, d_z), 1)
    return table


def _binomial_cdf(n, k, q):
    if k < 0:
        return Fraction(0)
    k = min(k, n)
    return sum((math.comb(n, j) * q ** j * (1 - q) ** (n - j) for j in range(k + 1)),
               Fraction(0))


@dataclass
class BlowupReport:
    n: int
    q: float
    base_radius: int
    blow_r: float
    prob_base: float
    a_n: float
    blown_radius: int
    prob_blown: float
    lower_bound: float
    slack: float
    holds: bool
    mode: str = "ball"
    extra: dict = field(default_factory=dict)


def blowup_check(n, base_radius, blow_r, q, trials=0, seed=None):
    """Check Pr(U in Gamma_l(A)) >= 1 - exp(-2 n r^2) for a Hamming ball A.

    U is i.i.d. Bernoulli(q) and A is the ball of radius ``base_radius``
    around the all-zero word, so Pr(U in A) is a binomial cdf and a_n is
    chosen tight, Pr(A) = 2^(-n a_n). The blow-up of a ball by l is the ball
    of radius base_radius + floor(l). ``trials`` > 0 adds a seeded Monte-Carlo
    estimate of the blown-up probability, for illustration only.
    """
    if n < 1 or not (0 <= base_radius <= n):
        raise DomainError("need n >= 1 and 0 <= base_radius <= n")
    if not (0 <= q <= 1) or blow_r < 0:
        raise DomainError("need q in [0, 1] and blow_r >= 0")
    with mpmath.workdps(50):
        qf = Fraction(q)
        pa = _binomial_cdf(n, base_radius, qf)
        if pa == 0:
            raise DomainError("the base ball has probability zero under this measure")
        pa_mp = mpmath.mpf(pa.numerator) / pa.denominator
        a_n = -mpmath.log(pa_mp, 2) / n
        ell = n * (mpmath.sqrt(a_n * mpmath.log(2) / 2) + blow_r)
        blown = int(min(base_radius + int(mpmath.floor(ell)), n))
        pb = _binomial_cdf(n, blown, qf)
        pb_mp = mpmath.mpf(pb.numerator) / pb.denominator
        bound = 1 - mpmath.exp(-2 * n * mpmath.mpf(blow_r) ** 2)
        slack = pb_mp - bound
        report = BlowupReport(n, q, base_radius, blow_r, float(pa_mp), float(a_n), blown,
                              float(pb_mp), float(bound), float(slack),
                              bool(slack >= -1e-12))
    if trials:
        rng = np.random.default_rng(seed)
        weights = (rng.random((trials, n)) < q).sum(axis=1)
        report.extra["monte_carlo_blown"] = float(np.mean(weights <= blown))
    return report


def blowup_check_random_set(n, set_size, blow_r, q, trials, seed=0):
    """Blow-up of a random set A in {0,1}^n; Pr(A) exact, Pr(Gamma(A)) sampled."""
    if n > 20:
        raise DomainError("random-set mode limited to n <= 20")
    rng = np.random.default_rng(seed)
    members = rng.choice(2 ** n, size=set_size, replace=False).astype(np.uint64)
    w = _popcount(members)
    pa = float(np.sum(q ** w * (1 - q) ** (n - w)))
    a_n = -math.log2(pa) / n
    ell = math.floor(n * (math.sqrt(a_n * info.LN2 / 2) + blow_r))
    bits = (rng.random((trials, n)) < q).astype(np.uint64)
    samples = (bits << np.arange(n, dtype=np.uint64)).sum(axis=1).astype(np.uint64)
    hits = 0
    for s in samples:
        if _popcount(members ^ s).min() <= ell:
            hits += 1
    est = hits / trials
    bound = 1 - math.exp(-2 * n * blow_r ** 2)
    return BlowupReport(n, q, -1, blow_r, pa, a_n, ell, est, bound, est - bound,
                        est >= bound, mode="random_set",
                        extra={"set_size": set_size, "trials": trials, "seed": seed})
