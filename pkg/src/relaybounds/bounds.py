"""Upper bounds on the capacity C(R0) of a symmetric primitive relay channel.

Every bound is a max-min: maximize, over an input distribution p(x) and an
auxiliary rate a (the entropy H(I_n | X^n) per symbol left to the relay
message), the smallest of its constraint expressions:

    broadcast          I(X; Y, Z)
    multiple_access    I(X; Y) + R0 - a
    third_constraint   bound-specific, forces a > 0 whenever it matters

The max-min is evaluated on an exhaustive (p(x), a) grid and refined locally
around the best grid point. Binary symmetric links take closed-form fast paths
in which the uniform input is optimal.
"""

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from relaybounds import channels, info, reliability
from relaybounds._search import maximize_1d, simplex_lattice
from relaybounds.delta import DeltaCurve, delta_general

BROADCAST = "broadcast"
MULTIPLE_ACCESS = "multiple_access"
THIRD = "third_constraint"
CONSTRAINT_ORDER = (BROADCAST, MULTIPLE_ACCESS, THIRD)

GENERAL_GRID = "general_grid"
BSC_CLOSED_FORM = "bsc_closed_form"

A_STEP = 1e-4
ALPHA_STEP = 1e-3
LATTICE_STEP = 0.02
CROSSING_STEP = 1e-6

BOUND_NAMES = ("cutset", "xue", "thm1", "thm2")


@dataclass
class BoundEvaluation:
    name: str
    value: float
    witness_px: np.ndarray
    witness_a: float | None
    active_constraint: str
    method: str
    constraints: dict = field(default_factory=dict)


def thm1_a_cap(alphabet_size):
    """Largest a allowed by the first new bound's interval, (2/ln2) ((m-1)/m)^2."""
    return 2.0 / info.LN2 * ((alphabet_size - 1) / alphabet_size) ** 2


def blowup_radius(a):
    """Normalized Hamming blow-up radius sqrt(a ln2 / 2) matching H(I_n|X^n) = n a."""
    return np.sqrt(np.asarray(a, dtype=float) * info.LN2 / 2.0)


def thm1_slack(a, alphabet_size):
    """H(s) + s log2(m - 1) - a with s the blow-up radius; the excess over I(X;Y)."""
    s = blowup_radius(a)
    return info.binary_entropy(np.minimum(s, 1.0)) + s * math.log2(alphabet_size - 1) - a


def xue_target(a, alphabet_size):
    sa = np.sqrt(np.asarray(a, dtype=float))
    return info.binary_entropy(np.minimum(sa, 1.0)) + sa * math.log2(alphabet_size)


def _mi_many(pxs, w):
    q = pxs @ w
    hq = -info._xlog2x(q).sum(axis=1)
    hrow = -info._xlog2x(w).sum(axis=1)
    return np.maximum(hq - pxs @ hrow, 0.0)


def _cond_entropy_many(pxs, w):
    return pxs @ (-info._xlog2x(w).sum(axis=1))


# -- direct evaluation at a witness ------------------------------------------

def constraint_values(name, spec, px, a=None, amend_xue=True):
    """Constraint expressions of bound ``name`` at (px, a), from the scalar kernels."""
    px = info.check_distribution(px, "px")
    m = spec.output_size
    if name == "xue":
        cxy = channels.capacity_xy(spec).value
        vals = {}
        if amend_xue:
            vals[BROADCAST] = channels.capacity_xyz(spec).value
        vals[MULTIPLE_ACCESS] = cxy + spec.r0 - a
        vals[THIRD] = float(reliability.inverse_exponent(float(xue_target(a, m)), spec))
        return vals
    ixyz = channels.broadcast_mi(px, spec)
    ixy = info.mutual_information(px, spec.link)
    if name == "cutset":
        return {BROADCAST: ixyz, MULTIPLE_ACCESS: ixy + spec.r0}
    if name == "thm1":
        third = ixy + float(thm1_slack(a, m))
    elif name == "thm2":
        third = ixy + delta_general(px, spec.link, float(blowup_radius(a))).value
    else:
        raise ValueError(f"unknown bound {name!r}")
    return {BROADCAST: ixyz, MULTIPLE_ACCESS: ixy + spec.r0 - a, THIRD: third}


def _finish(name, spec, px, a, method, tol=1e-12, **kw):
    cons = constraint_values(name, spec, px, a, **kw)
    value = min(cons.values())
    active = next(c for c in CONSTRAINT_ORDER if c in cons and cons[c] <= value + tol)
    return BoundEvaluation(name, float(value), np.asarray(px, dtype=float),
                           None if a is None else float(a), active, method, cons)


# -- cut-set ------------------------------------------------------------------

def cutset(spec, method="auto"):
    p = spec.bsc_crossover()
    if p is not None and method != GENERAL_GRID:
        return _finish("cutset", spec, np.array([0.5, 0.5]), None, BSC_CLOSED_FORM)
    w = spec.link
    w2 = info.product_channel(w)
    if spec.input_size == 2:
        def score(alpha):
            pxs = np.stack([alpha, 1 - alpha], axis=1)
            return np.minimum(_mi_many(pxs, w2), _mi_many(pxs, w) + spec.r0)

        alpha, _ = maximize_1d(score, 0.0, 1.0, ALPHA_STEP)
        px = np.array([alpha, 1 - alpha])
    else:
        pxs = simplex_lattice(spec.input_size, LATTICE_STEP)
        scores = np.minimum(_mi_many(pxs, w2), _mi_many(pxs, w) + spec.r0)
        px = pxs[int(np.argmax(scores))]
    return _finish("cutset", spec, px, None, GENERAL_GRID)


# -- Xue ----------------------------------------------------------------------

def xue(spec, amend=True):
    """Xue's bound; with ``amend`` the broadcast cut R <= C_XYZ is appended."""
    cap = channels.capacity_xy(spec)
    cxy = cap.value
    cxyz = channels.capacity_xyz(spec).value if amend else math.inf
    rf = reliability.reliability_function(spec)
    m = spec.output_size

    def score(a):
        a = np.asarray(a, dtype=float)
        third = rf.inverse(xue_target(a, m))
        return np.minimum(np.minimum(cxy + spec.r0 - a, third), cxyz)

    a, _ = maximize_1d(score, 0.0, spec.r0, A_STEP)
    method = BSC_CLOSED_FORM if spec.bsc_crossover() is not None else GENERAL_GRID
    return _finish("xue", spec, cap.argmax_input, a, method, amend_xue=amend)


# -- the two new bounds ---------------------------------------------------------

def _third_thm1(m):
    def build(px, ixy):
        return lambda a: ixy + thm1_slack(a, m)
    return build


def _third_thm2(w):
    def build(px, ixy):
        curve = DeltaCurve(px, w)
        return lambda a: ixy + curve(blowup_radius(a))
    return build


def _a_max(name, r0, hzx, m):
    top = np.minimum(r0, hzx)
    if name == "thm1":
        top = np.minimum(top, thm1_a_cap(m))
    return top


def _theorem_general(name, spec):
    w = spec.link
    w2 = info.product_channel(w)
    m = spec.output_size
    build = _third_thm1(m) if name == "thm1" else _third_thm2(w)

    if spec.input_size == 2:
        alphas = np.linspace(0.0, 1.0, int(round(1 / ALPHA_STEP)) + 1)
        pxs = np.stack([alphas, 1 - alphas], axis=1)
    else:
        pxs = simplex_lattice(spec.input_size, LATTICE_STEP)
    ixyz = _mi_many(pxs, w2)
    ixy = _mi_many(pxs, w)
    amax = _a_max(name, spec.r0, _cond_entropy_many(pxs, w), m)
    n_a = int(math.floor(float(amax.max()) / A_STEP + 1e-9)) + 1
    a_grid = np.arange(n_a) * A_STEP

    best = (-math.inf, 0, 0)
    for i in range(pxs.shape[0]):
        ok = a_grid <= amax[i] + 1e-15
        ag = a_grid[ok]
        third = build(pxs[i], ixy[i])(ag)
        s = np.minimum(np.minimum(ixyz[i], ixy[i] + spec.r0 - ag), third)
        j = int(np.argmax(s))
        # ties: lowest a first, then lowest input index
        if s[j] > best[0] or (s[j] == best[0] and j < best[2]):
            best = (float(s[j]), i, j)
    _, i, j = best
    px, a = pxs[i], float(a_grid[j])
    best_v = best[0]

    if spec.input_size == 2:
        def inner(alpha):
            pv = np.array([alpha, 1 - alpha])
            iyz = info.mutual_information(pv, w2)
            iy = info.mutual_information(pv, w)
            top = float(_a_max(name, spec.r0, info.conditional_entropy(pv, w), m))
            third = build(pv, iy)

            def score(av):
                return np.minimum(np.minimum(iyz, iy + spec.r0 - av), third(av))

            return maximize_1d(score, 0.0, top, A_STEP)

        lo, hi = alphas[max(i - 1, 0)], alphas[min(i + 1, alphas.size - 1)]
        res = minimize_scalar(lambda al: -inner(al)[1], bounds=(lo, hi), method="bounded",
                              options={"xatol": 1e-10})
        a_ref, v_ref = inner(float(res.x))
        if v_ref > best_v:
            px, a = np.array([float(res.x), 1 - float(res.x)]), a_ref
        else:
            a_loc, v_loc = inner(float(alphas[i]))
            if v_loc > best_v:
                a = a_loc
    return px, a


def _theorem_bsc(name, spec, p):
    cxy = 1 - info.binary_entropy(p)
    cxyz = 1 + info.binary_entropy(info.binary_convolve(p, p)) - 2 * info.binary_entropy(p)
    hp = info.binary_entropy(p)
    if name == "thm1":
        top = min(spec.r0, hp, 1 / (2 * info.LN2))
        third = lambda a: cxy + info.binary_entropy(np.minimum(blowup_radius(a), 1.0)) - a
    else:
        top = min(spec.r0, hp, 2 / info.LN2 * (1 - p) ** 2)
        gain = math.log2((1 - p) / p)
        third = lambda a: cxy + blowup_radius(a) * gain

    def score(a):
        return np.minimum(np.minimum(cxyz, cxy + spec.r0 - a), third(a))

    a, _ = maximize_1d(score, 0.0, top, A_STEP)
    return np.array([0.5, 0.5]), a


def theorem1(spec, method="auto"):
    p = spec.bsc_crossover()
    if p is not None and method != GENERAL_GRID:
        px, a = _theorem_bsc("thm1", spec, p)
        return _finish("thm1", spec, px, a, BSC_CLOSED_FORM)
    px, a = _theorem_general("thm1", spec)
    return _finish("thm1", spec, px, a, GENERAL_GRID)


def theorem2(spec, method="auto"):
    p = spec.bsc_crossover()
    if p is not None and method != GENERAL_GRID:
        px, a = _theorem_bsc("thm2", spec, p)
        return _finish("thm2", spec, px, a, BSC_CLOSED_FORM)
    px, a = _theorem_general("thm2", spec)
    return _finish("thm2", spec, px, a, GENERAL_GRID)


def all_bounds(spec):
    return {
        "cutset": cutset(spec),
        "xue": xue(spec),
        "thm1": theorem1(spec),
        "thm2": theorem2(spec),
    }


def bsc_suite(p, r0):
    if not (0 < p < 0.5):
        raise info.DomainError("crossover probability must lie in (0, 1/2)")
    spec = channels.make_bsc(p, r0)
    return all_bounds(spec)


# -- smallest relay rate compatible with a target rate -------------------------

@dataclass
class CriticalRate:
    """Smallest a meeting a bound's third constraint at ``rate``, and the implied R0."""

    bound: str
    rate: float
    px: np.ndarray
    mi_xy: float
    a: float
    r0: float
    exponent: float | None = None


def first_crossing(f, target, hi, step=CROSSING_STEP, check_unimodal=False):
    """Smallest a in [0, hi] with f(a) >= target: grid scan, then root refinement."""
    grid = np.arange(int(math.floor(hi / step)) + 1) * step
    vals = np.asarray(f(grid), dtype=float)
    if check_unimodal:
        signs = np.sign(np.diff(vals))
        signs = signs[signs != 0]
        if np.count_nonzero(np.diff(signs)) > 1:
            raise ArithmeticError("scanned function is not unimodal")
    hit = np.nonzero(vals >= target)[0]
    if hit.size == 0:
        raise ArithmeticError(f"no a in [0, {hi}] reaches {target}")
    k = int(hit[0])
    if k == 0:
        return 0.0
    return float(brentq(lambda a: float(f(np.array([a]))[0]) - target,
                        grid[k - 1], grid[k], xtol=1e-15, rtol=1e-14))


def xue_critical(spec, rate=None):
    cap = channels.capacity_xy(spec)
    if rate is None:
        rate = channels.capacity_xyz(spec).value
    e = reliability.error_exponent(rate, spec)
    m = spec.output_size
    # H(sqrt a) + sqrt(a) log2 m increases up to sqrt(a) = m / (m + 1)
    a = first_crossing(lambda a: xue_target(a, m), e, (m / (m + 1)) ** 2)
    return CriticalRate("xue", rate, cap.argmax_input, cap.value, a,
                        rate - cap.value + a, exponent=e)


def theorem1_critical(spec, rate=None):
    """Input fixed by the broadcast cut at C_XYZ; then the least a and R0."""
    cxyz = channels.capacity_xyz(spec)
    if rate is None:
        rate = cxyz.value
    px = cxyz.argmax_input
    ixy = info.mutual_information(px, spec.link)
    m = spec.output_size
    gap = rate - ixy
    hi = min(thm1_a_cap(m), info.conditional_entropy(px, spec.link))
    a = first_crossing(lambda a: thm1_slack(a, m), gap, hi, check_unimodal=True)
    return CriticalRate("thm1", rate, px, ixy, a, gap + a)
