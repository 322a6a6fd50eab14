"""Strong-converse error exponent E(R) of the X-Y link and its inverse.

    E(R) = max_{rho in [-1, 0)} ( -rho R + min_{p(x)} E0(rho, p(x)) )

E0 is evaluated in the log domain: near rho = -1 the power 1/(1+rho) is huge
and W(y|x)^(1/(1+rho)) underflows in linear arithmetic.
"""

import functools
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import logsumexp

from relaybounds import channels, info
from relaybounds._search import simplex_lattice
from relaybounds.info import DomainError

RHO_POINTS = 2000
RHO_MARGIN = 1e-6
ALPHA_STEP = 1e-3
LATTICE_STEP = 0.02
INVERSE_TOL = 1e-8
ALT_STEP = 0.01
ALT_MAX_POINTS = 200_000_000

_GOLDEN = (math.sqrt(5) - 1) / 2


class ScopeError(ValueError):
    """The requested computation is outside the supported problem size."""


def rho_grid():
    return np.linspace(-1 + RHO_MARGIN, -RHO_MARGIN, RHO_POINTS)


def _safe_log(a):
    a = np.asarray(a, dtype=float)
    with np.errstate(divide="ignore"):
        return np.log(a)


def _e0_matrix(rho, logpx, logw):
    """E0 for every (rho, px) pair; rho shape (R,), logpx shape (P, K)."""
    s = 1.0 / (1.0 + rho)
    # (R, P, K, Y) -> logsumexp over K gives (R, P, Y)
    terms = logpx[None, :, :, None] + s[:, None, None, None] * logw[None, None, :, :]
    inner = logsumexp(terms, axis=2)
    outer = logsumexp((1.0 + rho)[:, None, None] * inner, axis=2)
    return -outer / info.LN2


def e0(rho, px, w):
    """Gallager's E0(rho, p(x)) in bits, for rho in [-1, 0)."""
    if not (-1 <= rho < 0):
        raise DomainError("rho must lie in [-1, 0)")
    if rho == -1:
        raise DomainError("rho = -1 is excluded; use a value slightly above -1")
    px, w = info._check_pair(px, w)
    val = _e0_matrix(np.array([rho]), _safe_log(px)[None, :], _safe_log(w))
    return float(val[0, 0])


def _binary_min_e0(rho, logw):
    """min over alpha of E0 per rho: alpha grid, then vectorized golden section."""
    alphas = np.linspace(0.0, 1.0, int(round(1 / ALPHA_STEP)) + 1)

    def evaluate(a, r):
        lp = np.stack([_safe_log(a), _safe_log(1 - a)], axis=-1)
        s = 1.0 / (1.0 + r)
        terms = lp[:, :, :, None] + s[:, None, None, None] * logw[None, None, :, :]
        inner = logsumexp(terms, axis=2)
        outer = logsumexp((1.0 + r)[:, None, None] * inner, axis=2)
        return -outer / info.LN2

    grid = np.concatenate([
        evaluate(np.broadcast_to(alphas, (chunk.size, alphas.size)), chunk)
        for chunk in np.array_split(rho, max(rho.size // 200, 1))
    ])
    rows = np.arange(rho.size)
    idx = np.argmin(grid, axis=1)
    best_v = grid[rows, idx]
    best_a = alphas[idx]
    lo = alphas[np.maximum(idx - 1, 0)]
    hi = alphas[np.minimum(idx + 1, alphas.size - 1)]

    def f(a):
        return evaluate(a[:, None], rho)[:, 0]

    # E0 is convex in p(x) for rho in (-1, 0), so golden section is exact here.
    x1 = hi - _GOLDEN * (hi - lo)
    x2 = lo + _GOLDEN * (hi - lo)
    f1, f2 = f(x1), f(x2)
    for _ in range(45):
        left = f1 < f2
        hi, lo = np.where(left, x2, hi), np.where(left, lo, x1)
        x1, x2 = (np.where(left, hi - _GOLDEN * (hi - lo), x2),
                  np.where(left, x1, lo + _GOLDEN * (hi - lo)))
        fe = f(np.where(left, x1, x2))
        f1, f2 = np.where(left, fe, f2), np.where(left, f1, fe)
    mid = 0.5 * (lo + hi)
    fm = f(mid)
    better = fm < best_v
    best_a = np.where(better, mid, best_a)
    best_v = np.where(better, fm, best_v)
    return best_v, np.stack([best_a, 1 - best_a], axis=1)


def _lattice_min_e0(rho, logw):
    pts = simplex_lattice(logw.shape[0], LATTICE_STEP)
    vals = np.empty((rho.size, pts.shape[0]))
    logp = _safe_log(pts)
    for start in range(0, rho.size, 50):
        sl = slice(start, start + 50)
        vals[sl] = _e0_matrix(rho[sl], logp, logw)
    idx = np.argmin(vals, axis=1)
    return vals[np.arange(rho.size), idx], pts[idx]


class ReliabilityFunction:
    """E(R) for one link law, with min_p E0 tabulated once on the rho grid."""

    def __init__(self, w):
        self.link = info.check_channel(w)
        self.rho = rho_grid()
        logw = _safe_log(self.link)
        if self.link.shape[0] == 2:
            self.min_e0, self.argmin_px = _binary_min_e0(self.rho, logw)
        else:
            self.min_e0, self.argmin_px = _lattice_min_e0(self.rho, logw)
        self.capacity = channels.channel_capacity(self.link).value
        self.max_rate = math.log2(self.link.shape[0])

    def __call__(self, rate):
        r = np.atleast_1d(np.asarray(rate, dtype=float))
        vals = (-self.rho[None, :] * r[:, None] + self.min_e0[None, :]).max(axis=1)
        out = np.maximum(vals, 0.0)
        return float(out[0]) if np.ndim(rate) == 0 else out

    def maximizer(self, rate):
        vals = -self.rho * rate + self.min_e0
        i = int(np.argmax(vals))
        return float(self.rho[i]), self.argmin_px[i]

    def inverse(self, y, full_output=False):
        """Largest R in [C_XY, log2|X|] with E(R) <= y, by bisection."""
        ys = np.atleast_1d(np.asarray(y, dtype=float))
        if np.any(ys < 0) or np.any(np.isnan(ys)):
            raise DomainError("exponent value must be nonnegative")
        lo = np.full(ys.shape, self.capacity)
        hi = np.full(ys.shape, self.max_rate)
        saturated = self(hi) <= ys
        while np.max(hi - lo) > INVERSE_TOL:
            mid = 0.5 * (lo + hi)
            ok = self(mid) <= ys
            lo = np.where(ok, mid, lo)
            hi = np.where(ok, hi, mid)
        rates = np.where(saturated, self.max_rate, lo)
        rates = np.where(ys == 0, self.capacity, rates)
        if np.ndim(y) == 0:
            rates, saturated = float(rates[0]), bool(saturated[0])
        return (rates, saturated) if full_output else rates


@functools.lru_cache(maxsize=64)
def _cached(shape, raw):
    return ReliabilityFunction(np.frombuffer(raw).reshape(shape))


def reliability_function(spec_or_link):
    link = getattr(spec_or_link, "link", spec_or_link)
    link = info.check_channel(link)
    return _cached(link.shape, link.tobytes())


def error_exponent(rate, spec):
    if np.any(np.asarray(rate) < 0):
        raise DomainError("rate must be nonnegative")
    return reliability_function(spec)(rate)


def inverse_exponent(y, spec, full_output=False):
    return reliability_function(spec).inverse(y, full_output=full_output)


@dataclass
class ExponentCurve:
    link: np.ndarray
    rates: np.ndarray
    values: np.ndarray
    meta: dict = field(default_factory=dict)


def exponent_curve(spec, rates):
    rf = reliability_function(spec)
    rates = np.asarray(rates, dtype=float)
    return ExponentCurve(rf.link, rates, rf(rates),
                         {"rho_points": RHO_POINTS, "rho_margin": RHO_MARGIN,
                          "alpha_step": ALPHA_STEP})


@functools.lru_cache(maxsize=16)
def _alt_tables(shape, raw, step):
    w = np.frombuffer(raw).reshape(shape)
    rows = simplex_lattice(shape[1], step)
    n_alpha = int(round(1 / step)) + 1
    if n_alpha * rows.shape[0] ** 2 > ALT_MAX_POINTS:
        raise ScopeError("alternative-form grid too large for this output alphabet")
    alphas = np.linspace(0.0, 1.0, n_alpha)

    def kl_rows(t, ref):
        with np.errstate(divide="ignore", invalid="ignore"):
            terms = np.where(t > 0, t * (np.log2(t) - np.log2(ref)), 0.0)
        return terms.sum(axis=-1)

    d0 = kl_rows(rows, w[0])
    d1 = kl_rows(rows, w[1])
    # alpha x row0 x row1
    a = alphas[:, None, None]
    div = a * d0[None, :, None] + (1 - a) * d1[None, None, :]
    with np.errstate(invalid="ignore"):
        div = np.where(a == 0, d1[None, None, :], np.where(a == 1, d0[None, :, None], div))
    q = a[..., None] * rows[None, :, None, :] + (1 - a[..., None]) * rows[None, None, :, :]
    hq = -info._xlog2x(q).sum(axis=-1)
    hrow = -info._xlog2x(rows).sum(axis=-1)
    mi = hq - (a * hrow[None, :, None] + (1 - a) * hrow[None, None, :])
    return div.ravel(), np.maximum(mi, 0.0).ravel()


def exponent_alt_form(rate, spec, step=ALT_STEP):
    """min over grids of D(w~ || w | p) + |R - I(p, w~)|^+ (binary input only)."""
    link = info.check_channel(getattr(spec, "link", spec))
    if link.shape[0] != 2:
        raise ScopeError("the alternative form is only tabulated for binary-input links")
    div, mi = _alt_tables(link.shape, link.tobytes(), step)
    finite = np.isfinite(div)
    div, mi = div[finite], mi[finite]
    rates = np.atleast_1d(np.asarray(rate, dtype=float))
    vals = np.array([np.min(div + np.maximum(r - mi, 0.0)) for r in rates])
    return float(vals[0]) if np.ndim(rate) == 0 else vals
