"""Bounds on the critical relay rate R0* for the binary symmetric case.

R0* is the smallest R0 at which C(R0) reaches C_XYZ. With gap = H(p*p) - H(p):

    cutset      gap
    thm1        gap + a*, a* least with H(sqrt(a ln2/2)) - a >= gap
    thm2        gap + (2/ln2) (gap / log2((1-p)/p))^2
    thm3        gap + (2/ln2) (gap / ((1-2p) log2((1-p)/p)))^2
    hash & fwd  H(p*p)   (an achievable upper bound)

Near p = 1/2 both entropies approach 1 and ``1 - H`` is computed from
u = 1 - 2p directly, since subtracting from 1 would lose every digit of gap.
"""

import math
from dataclasses import dataclass

import numpy as np

from relaybounds import info
from relaybounds.bounds import first_crossing
from relaybounds.info import DomainError


def _deficit_u(u):
    """1 - H((1 - u) / 2) for u in [0, 1]."""
    if u < 1e-2:
        u2 = u * u
        total, term = 0.0, u2
        for k in range(1, 8):
            total += term / (2 * k * (2 * k - 1))
            term *= u2
        return total / info.LN2
    if u == 1.0:
        return 1.0
    return ((1 + u) * math.log1p(u) + (1 - u) * math.log1p(-u)) / (2 * info.LN2)


def _terms(p):
    """(H(p), H(p*p), gap, log2((1-p)/p), 1-2p) without cancellation."""
    if p < 0.25:
        q = 2 * p * (1 - p)
        hp, hq = info.binary_entropy(p), info.binary_entropy(q)
        return hp, hq, hq - hp, math.log2((1 - p) / p), 1 - 2 * p
    u = 1 - 2 * p
    dp, dq = _deficit_u(u), _deficit_u(u * u)
    return 1 - dp, 1 - dq, dp - dq, 2 * math.atanh(u) / info.LN2, u


def _open(p):
    if not (0 < p < 0.5):
        raise DomainError("crossover probability must lie in (0, 1/2)")


def hf_upper(p):
    if not (0 <= p <= 0.5):
        raise DomainError("crossover probability must lie in [0, 1/2]")
    if p == 0:
        return 0.0
    if p == 0.5:
        return 1.0
    return _terms(p)[1]


def cutset_lower(p):
    if not (0 <= p <= 0.5):
        raise DomainError("crossover probability must lie in [0, 1/2]")
    if p in (0, 0.5):
        return 0.0
    return _terms(p)[2]


def thm1_lower(p):
    _open(p)
    gap = _terms(p)[2]
    a = first_crossing(
        lambda a: info.binary_entropy(np.minimum(np.sqrt(a * info.LN2 / 2), 1.0)) - a,
        gap, 1 / (2 * info.LN2), check_unimodal=True)
    return gap + a


def thm2_lower(p):
    _open(p)
    _, _, gap, log_ratio, _ = _terms(p)
    return gap + 2 / info.LN2 * (gap / log_ratio) ** 2


def thm3_lower(p):
    _open(p)
    _, _, gap, log_ratio, u = _terms(p)
    return gap + 2 / info.LN2 * (gap / (u * log_ratio)) ** 2


def hf_cs_ratio(p):
    _open(p)
    _, hq, gap, _, _ = _terms(p)
    return hq / gap


def limits():
    """One-sided limits of each bound as p -> 0 and p -> 1/2."""
    return {
        "p->0": {"hf_upper": 0.0, "cutset_lower": 0.0, "thm1_lower": 0.0,
                 "thm2_lower": 0.0, "thm3_lower": 0.0, "hf_cs_ratio": 2.0},
        "p->1/2": {"hf_upper": 1.0, "cutset_lower": 0.0, "thm1_lower": 0.0,
                   "thm2_lower": 0.0, "thm3_lower": 1 / (8 * info.LN2)},
    }


@dataclass
class CoverBounds:
    p: float
    hf_upper: float
    cutset_lower: float
    thm1_lower: float
    thm2_lower: float
    thm3_lower: float

    def ordered(self, tol=0.0):
        return (self.cutset_lower <= self.thm1_lower + tol
                and self.cutset_lower <= self.thm2_lower + tol
                and self.thm2_lower <= self.thm3_lower + tol
                and max(self.thm1_lower, self.thm3_lower) <= self.hf_upper + tol)


def cover_bounds(p):
    _open(p)
    return CoverBounds(p, hf_upper(p), cutset_lower(p), thm1_lower(p),
                       thm2_lower(p), thm3_lower(p))
