"""Symmetric primitive relay channels and their single-letter capacities."""

import json
import math
from dataclasses import dataclass, field

import numpy as np

from relaybounds import info
from relaybounds._search import maximize_1d
from relaybounds.info import DimensionError, DomainError

ALPHA_STEP = 1e-4
ALPHA_XTOL = 1e-10
BA_RTOL = 1e-10
BA_MAX_ITER = 100_000


class ConvergenceError(RuntimeError):
    pass


class SpecError(ValueError):
    """A channel-spec document is malformed; ``field`` names the offending key."""

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field


@dataclass(frozen=True, eq=False)
class RelayChannelSpec:
    """X reaches Y and Z through the same law ``link``; Z talks to Y at rate r0."""

    link: np.ndarray
    r0: float = 0.0

    def __post_init__(self):
        link = info.check_channel(self.link, "link")
        if link.shape[0] < 2 or link.shape[1] < 2:
            raise DimensionError("link must have at least 2 inputs and 2 outputs")
        if not (self.r0 >= 0 and math.isfinite(self.r0)):
            raise DomainError("r0 must be a finite nonnegative rate")
        link.setflags(write=False)
        object.__setattr__(self, "link", link)
        object.__setattr__(self, "r0", float(self.r0))

    @property
    def input_size(self):
        return self.link.shape[0]

    @property
    def output_size(self):
        return self.link.shape[1]

    def with_r0(self, r0):
        return RelayChannelSpec(self.link, r0)

    def bsc_crossover(self):
        """Crossover probability if the link is a BSC with p in (0, 1/2), else None."""
        w = self.link
        if w.shape != (2, 2):
            return None
        p = w[0, 1]
        if abs(w[1, 0] - p) > 1e-15 or not (0 < p < 0.5):
            return None
        return float(p)

    def to_dict(self):
        return {
            "input_size": self.input_size,
            "output_size": self.output_size,
            "transition": self.link.tolist(),
            "r0": self.r0,
        }

    def cache_key(self):
        return (self.link.shape, self.link.tobytes())


def spec_from_dict(doc):
    if not isinstance(doc, dict):
        raise SpecError("<root>", "expected a JSON object")
    for key in ("input_size", "output_size", "transition", "r0"):
        if key not in doc:
            raise SpecError(key, "missing field")
    k, m = doc["input_size"], doc["output_size"]
    for key, v in (("input_size", k), ("output_size", m)):
        if not isinstance(v, int) or isinstance(v, bool) or v < 2:
            raise SpecError(key, "must be an integer >= 2")
    rows = doc["transition"]
    if not isinstance(rows, list) or len(rows) != k:
        raise SpecError("transition", f"expected {k} rows")
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != m:
            raise SpecError(f"transition[{i}]", f"expected {m} entries")
        for j, v in enumerate(row):
            if not isinstance(v, (int, float)) or isinstance(v, bool):
                raise SpecError(f"transition[{i}][{j}]", "not a number")
    r0 = doc["r0"]
    if not isinstance(r0, (int, float)) or isinstance(r0, bool) or r0 < 0:
        raise SpecError("r0", "must be a nonnegative number")
    try:
        return RelayChannelSpec(np.array(rows, dtype=float), float(r0))
    except ValueError as exc:
        raise SpecError("transition", str(exc)) from exc


def load_spec(path):
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SpecError("<json>", f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return spec_from_dict(doc)


def _probability(name, v):
    if not (0 <= v <= 1):
        raise DomainError(f"{name} must lie in [0, 1]")
    return float(v)


def make_bsc(p, r0=0.0):
    p = _probability("p", p)
    return RelayChannelSpec(np.array([[1 - p, p], [p, 1 - p]]), r0)


def make_bac(p1, p2, r0=0.0):
    """Binary asymmetric link: 0 flips with probability p1, 1 flips with p2."""
    p1 = _probability("p1", p1)
    p2 = _probability("p2", p2)
    return RelayChannelSpec(np.array([[1 - p1, p1], [p2, 1 - p2]]), r0)


def make_bec(e, r0=0.0):
    """Binary erasure link with outputs (0, erasure, 1)."""
    e = _probability("e", e)
    return RelayChannelSpec(np.array([[1 - e, e, 0.0], [0.0, e, 1 - e]]), r0)


def binary_input_mi(alpha, w):
    """I(X;Y) for X ~ (alpha, 1 - alpha), vectorized over alpha."""
    alpha = np.atleast_1d(np.asarray(alpha, dtype=float))
    w = np.asarray(w, dtype=float)
    px = np.stack([alpha, 1 - alpha], axis=1)
    q = px @ w
    hq = -info._xlog2x(q).sum(axis=1)
    hrow = -info._xlog2x(w).sum(axis=1)
    return np.maximum(hq - px @ hrow, 0.0)


def binary_input_cond_entropy(alpha, w):
    alpha = np.atleast_1d(np.asarray(alpha, dtype=float))
    hrow = -info._xlog2x(np.asarray(w, dtype=float)).sum(axis=1)
    return alpha * hrow[0] + (1 - alpha) * hrow[1]


@dataclass
class CapacityResult:
    value: float
    argmax_input: np.ndarray
    method: str
    iterations: int = 0
    meta: dict = field(default_factory=dict)


def blahut_arimoto(w, rtol=BA_RTOL, max_iter=BA_MAX_ITER):
    """Capacity of ``w`` by Blahut-Arimoto; stops when the upper/lower gap is below rtol."""
    w = info.check_channel(w)
    k = w.shape[0]
    px = np.full(k, 1.0 / k)
    logw = np.where(w > 0, np.log2(np.where(w > 0, w, 1.0)), 0.0)
    for it in range(1, max_iter + 1):
        q = px @ w
        logq = np.log2(np.where(q > 0, q, 1.0))
        d = (w * (logw - logq)).sum(axis=1)
        lower = float(px @ d)
        upper = float(d.max())
        if upper - lower <= rtol * max(lower, 1e-300) or upper <= 0:
            return CapacityResult(max(lower, 0.0), px, "blahut_arimoto", it,
                                  {"upper": upper})
        px = px * np.exp2(d)
        px /= px.sum()
    raise ConvergenceError(f"Blahut-Arimoto did not converge in {max_iter} iterations")


def channel_capacity(w):
    w = info.check_channel(w)
    if w.shape[0] == 2:
        alpha, value = maximize_1d(lambda a: binary_input_mi(a, w), 0.0, 1.0,
                                   ALPHA_STEP, ALPHA_XTOL)
        return CapacityResult(value, np.array([alpha, 1 - alpha]), "alpha_grid",
                              meta={"alpha": alpha, "step": ALPHA_STEP})
    return blahut_arimoto(w)


def capacity_xy(spec):
    return channel_capacity(spec.link)


def capacity_xyz(spec):
    return channel_capacity(info.product_channel(spec.link))


def broadcast_mi(px, spec):
    """I(X; Y, Z) under input px."""
    return info.mutual_information(px, info.product_channel(spec.link))
