"""Self-check suites: each compares a library routine with an independent oracle.

Every suite returns a list of ``Check`` records. Anchors marked frozen were
computed once from closed forms with ``math.log`` and are stored as literals.
"""

import math
from dataclasses import dataclass

import numpy as np

from relaybounds import bounds, channels, cover, delta, geometry, info, reliability


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


# frozen anchors
THM2_AT_0P2 = 0.20646646607422897
THM3_LIMIT = 1 / (8 * math.log(2))


def delta_grid_oracle(px, w, d, step=1e-3):
    """Brute-force search over 2x2 w_tilde using the defining objective.

    Each row's offset from w runs over a grid of the given step plus the
    simplex endpoints; the other row additionally tries the offsets that use
    up the remaining budget exactly.
    """
    px, w = info._check_pair(px, w)
    if w.shape != (2, 2):
        raise info.DimensionError("grid oracle handles 2x2 links only")
    logw = np.log2(w)
    h = info.conditional_entropy(px, w)
    best = 0.0
    for first in (0, 1):
        other = 1 - first
        offs = np.arange(-w[first, 0], 1 - w[first, 0] + step, step)
        offs = np.concatenate([offs, [0.0, -w[first, 0], 1 - w[first, 0]],
                               np.arange(0, -w[first, 0], -step)])
        offs = offs[(w[first, 0] + offs >= 0) & (w[first, 0] + offs <= 1)]
        offs = offs[px[first] * np.abs(offs) <= d + 1e-15]
        rest = (d - px[first] * np.abs(offs)) / px[other] if px[other] > 0 else 0 * offs
        grid2 = np.arange(-w[other, 0], 1 - w[other, 0] + step, step)
        for o, r in zip(offs, rest):
            cand = np.concatenate([grid2, [0.0, r, -r]])
            cand = np.clip(cand, -w[other, 0], 1 - w[other, 0])
            cand = cand[px[other] * np.abs(cand) <= r * px[other] + 1e-15]
            a = w[first, 0] + o
            b = w[other, 0] + cand
            # H(w~|p) + D(w~||w|p) - H(w|p) reduces to cross-entropy minus H(w|p)
            cross = (-px[first] * (a * logw[first, 0] + (1 - a) * logw[first, 1])
                     - px[other] * (b * logw[other, 0] + (1 - b) * logw[other, 1]))
            if cand.size:
                best = max(best, float(cross.max() - h))
    return best


def _random_links(count, seed):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        r = rng.uniform(0.05, 0.95, size=2)
        a = rng.uniform(0.1, 0.9)
        out.append((np.array([a, 1 - a]), np.array([[r[0], 1 - r[0]], [r[1], 1 - r[1]]])))
    return out


def suite_delta(quick=True):
    checks = []
    worst = 0.0
    for p in (0.1, 0.2, 0.3, 0.4):
        w = channels.make_bsc(p).link
        for d in np.round(np.arange(0, 1.0001, 0.01), 2):
            g = delta.delta_general([0.5, 0.5], w, d).value
            worst = max(worst, abs(g - float(delta.delta_bsc(p, d))))
    checks.append(Check("greedy = BSC closed form", worst <= 1e-9, f"max diff {worst:.3g}"))

    worst_grid, worst_def = 0.0, 0.0
    links = _random_links(4 if quick else 20, seed=7)
    for px, w in links:
        for d in (0.02, 0.1, 0.3):
            sol = delta.delta_general(px, w, d)
            worst_grid = max(worst_grid, abs(sol.value - delta_grid_oracle(px, w, d)))
            worst_def = max(worst_def,
                            abs(sol.value - delta.definition_objective(px, sol.optimizer, w)))
    checks.append(Check("greedy = grid search", worst_grid <= 2e-3, f"max diff {worst_grid:.3g}"))
    checks.append(Check("greedy optimizer in defining objective", worst_def <= 1e-9,
                        f"max diff {worst_def:.3g}"))
    anchor = float(delta.delta_bsc(0.2, 0.1))
    checks.append(Check("frozen anchor Delta_BSC(0.2, 0.1) = 0.2", abs(anchor - 0.2) <= 1e-12,
                        f"{anchor:.12g}"))
    return checks


def suite_exponent(quick=True):
    checks = []
    for label, spec in (("BSC(0.2)", channels.make_bsc(0.2)),
                        ("BAC(0.01,0.3)", channels.make_bac(0.01, 0.3))):
        c = channels.capacity_xy(spec).value
        rates = c + np.linspace(0.0125, 0.25, 5 if quick else 20)
        e = reliability.error_exponent(rates, spec)
        alt = reliability.exponent_alt_form(rates, spec)
        diff = float(np.max(np.abs(e - alt)))
        checks.append(Check(f"{label} E vs alternative form", diff <= 0.01, f"max diff {diff:.3g}"))
        checks.append(Check(f"{label} E(R) <= R - C", bool(np.all(e <= rates - c + 1e-12))))
        e_c = reliability.error_exponent(c, spec)
        checks.append(Check(f"{label} E(C) ~ 0", e_c <= 1e-4, f"{e_c:.3g}"))
    return checks


def suite_ball(quick=True):
    checks = []
    for q, r in ((2, 0.3), (3, 0.4), (2, 0.1)):
        gaps = []
        for n in (50, 100, 200):
            count = geometry.exact_ball_volume(n, math.floor(r * n), q)
            gap = abs(count.exponent() - info.ball_exponent(r, q))
            gaps.append(gap)
            bound = (math.log2(n + 1) + 2) / n + 1e-9
            checks.append(Check(f"ball q={q} r={r} n={n}", gap <= bound, f"gap {gap:.3g}"))
        checks.append(Check(f"ball q={q} r={r} gap shrinks", gaps[0] > gaps[1] > gaps[2]))
    return checks


def suite_sphere(quick=True):
    bad = 0
    total = 0
    for n in ((8, 10) if quick else (8, 10, 12, 14)):
        for d0n in range(n + 1):
            table = geometry.intersection_by_enumeration(n, d0n)
            for rn in range(n + 1):
                for rhon in range(n + 1):
                    total += 1
                    if geometry.sphere_intersection(n, d0n, rn, rhon).value != table[rn, rhon]:
                        bad += 1
    return [Check("sphere intersection = enumeration", bad == 0, f"{bad}/{total} mismatches")]


def suite_blowup(quick=True):
    checks = []
    configs = [(200, 80, 0.1, 0.5), (100, 10, 0.05, 0.3), (60, 30, 0.2, 0.5),
               (150, 0, 0.08, 0.1), (40, 40, 0.0, 0.7)]
    for n, k, r, q in configs:
        rep = geometry.blowup_check(n, k, r, q)
        checks.append(Check(f"blow-up n={n} k={k} r={r} q={q}", rep.holds,
                            f"slack {rep.slack:.3g}"))
    return checks


def suite_ordering(quick=True):
    checks = []
    ps = np.round(np.arange(0.01, 0.495, 0.01), 2)
    bad = [p for p in ps if not cover.cover_bounds(float(p)).ordered()]
    checks.append(Check("cover bound ordering", not bad, f"violations at {bad}" if bad else ""))
    for r0 in ((0.15, 0.18) if quick else (0.15, 0.16, 0.17, 0.18, 0.19, 0.2, 0.21)):
        res = bounds.bsc_suite(0.2, r0)
        v = [res[n].value for n in ("thm2", "thm1", "xue", "cutset")]
        ok = all(a <= b + 1e-12 for a, b in zip(v, v[1:]))
        checks.append(Check(f"BSC(0.2) bounds ordered at R0={r0}", ok,
                            " <= ".join(f"{x:.6f}" for x in v)))
    t2 = cover.thm2_lower(0.2)
    checks.append(Check("frozen anchor thm2_lower(0.2)", abs(t2 - THM2_AT_0P2) <= 1e-10,
                        f"{t2:.12g}"))
    return checks


def suite_thm3(quick=True):
    checks = []
    errs = [abs(cover.thm3_lower(0.5 - 10.0 ** -k) - THM3_LIMIT) for k in range(3, 7)]
    checks.append(Check("thm3 converges monotonically", all(a > b for a, b in zip(errs, errs[1:]))))
    checks.append(Check("thm3 limit 1/(8 ln 2)", errs[-1] < 1e-4, f"error {errs[-1]:.3g}"))
    checks.append(Check("thm3 matches 0.1803", abs(cover.thm3_lower(0.4999) - 0.1803) < 1e-3))
    return checks


SUITES = {
    "delta": suite_delta,
    "exponent": suite_exponent,
    "ball": suite_ball,
    "sphere": suite_sphere,
    "blowup": suite_blowup,
    "ordering": suite_ordering,
    "thm3": suite_thm3,
}


def run(names=None, quick=True):
    """Run the named suites (all by default); returns {suite: [Check, ...]}."""
    names = list(SUITES) if names is None else list(names)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}")
    return {n: SUITES[n](quick=quick) for n in names}


def passed(results):
    return all(c.ok for checks in results.values() for c in checks)
