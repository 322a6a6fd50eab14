"""Maximal excess description cost Delta(p(x), d) under a total-variation budget.

Delta is the maximum over row-stochastic w_tilde of

    H(w_tilde | px) + D(w_tilde || w | px) - H(w | px)
      = sum_{x,y} px(x) (w_tilde(y|x) - w(y|x)) log2(1 / w(y|x))

subject to (1/2) sum |px w_tilde - px w| <= d. The right-hand form is linear in
w_tilde, so moving conditional mass t from y- to y+ in row x costs px(x) t of
budget and earns log2(w(y-|x) / w(y+|x)) per unit of budget. Filling the
budget greedily in decreasing gain order is exact (fractional knapsack).
"""

import math
from dataclasses import dataclass

import numpy as np

from relaybounds import info
from relaybounds.info import DomainError


@dataclass
class DeltaSolution:
    value: float
    optimizer: np.ndarray
    budget_used: float
    infinite: bool = False
    saturated: bool = False


def _moves(px, w):
    """Positive-gain moves (gain, x, donor, recipient) in processing order."""
    moves = []
    k, m = w.shape
    for x in range(k):
        if px[x] <= 0:
            continue
        row = w[x]
        for i in range(m):
            for j in range(m):
                if i != j and row[i] > row[j]:
                    moves.append((info.log2(row[i] / row[j]), x, i, j))
    moves.sort(key=lambda mv: (-mv[0], mv[1], mv[2], mv[3]))
    return moves


def _not_fully_connected(px, w):
    return bool(np.any((px[:, None] > 0) & (w == 0)))


def _greedy(px, w, budget):
    """Run the exchange; return (w_tilde, knots) with knots = [(budget spent, gain)]."""
    wt = w.copy()
    spent = 0.0
    gain = 0.0
    knots = [(0.0, 0.0)]
    for g, x, i, j in _moves(px, w):
        if spent >= budget:
            break
        t = min(wt[x, i], 1.0 - wt[x, j], (budget - spent) / px[x])
        if t <= 0:
            continue
        wt[x, i] -= t
        wt[x, j] += t
        spent += px[x] * t
        gain += px[x] * t * g
        knots.append((spent, gain))
    return wt, knots


def linearized_objective(px, w_tilde, w):
    joint_diff = px[:, None] * (w_tilde - w)
    active = px[:, None] * np.maximum(w_tilde, w) > 0
    if np.any(active & (w == 0)):
        return math.inf
    logs = np.zeros_like(w)
    logs[active] = -info.log2(w[active])
    return float((joint_diff * logs).sum())


def definition_objective(px, w_tilde, w):
    """The defining entropy/relative-entropy objective, evaluated term by term."""
    return (info.conditional_entropy(px, w_tilde)
            + info.conditional_relative_entropy(px, w_tilde, w)
            - info.conditional_entropy(px, w))


def tv_distance(px, w_tilde, w):
    return 0.5 * float(np.abs(px[:, None] * (w_tilde - w)).sum())


def delta_general(px, w, d):
    px, w = info._check_pair(px, w)
    if not d >= 0:
        raise DomainError("budget d must be nonnegative")
    if d == 0:
        return DeltaSolution(0.0, w.copy(), 0.0)
    if _not_fully_connected(px, w):
        return DeltaSolution(math.inf, w.copy(), 0.0, infinite=True)
    wt, knots = _greedy(px, w, d)
    used = tv_distance(px, wt, w)
    value = max(linearized_objective(px, wt, w), 0.0)
    return DeltaSolution(value, wt, used, saturated=knots[-1][0] < d * (1 - 1e-12))


class DeltaCurve:
    """Delta(px, .) as a concave piecewise-linear function of the budget."""

    def __init__(self, px, w):
        px, w = info._check_pair(px, w)
        self.infinite = _not_fully_connected(px, w)
        if self.infinite:
            self.knots_d = np.array([0.0])
            self.knots_v = np.array([0.0])
        else:
            _, knots = _greedy(px, w, math.inf)
            self.knots_d, self.knots_v = (np.array(v) for v in zip(*knots))

    def __call__(self, d):
        d = np.asarray(d, dtype=float)
        if self.infinite:
            return np.where(d > 0, math.inf, 0.0)
        return np.interp(d, self.knots_d, self.knots_v)


def _crossover(p):
    if not (0 < p < 0.5):
        raise DomainError("crossover probability must lie in (0, 1/2)")


def delta_bsc(p, d):
    """Closed form for a BSC link; independent of the input distribution."""
    _crossover(p)
    if not np.all(np.asarray(d) >= 0):
        raise DomainError("budget d must be nonnegative")
    return np.minimum(d, 1 - p) * info.log2((1 - p) / p)


def delta_prime(d, p):
    _crossover(p)
    if not np.all(np.asarray(d) >= 0):
        raise DomainError("budget d must be nonnegative")
    return d * (1 - 2 * p) * info.log2((1 - p) / p)
