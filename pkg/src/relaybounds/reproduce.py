"""Published reference numbers and sweeps that regenerate the figures' data."""

from dataclasses import dataclass

import numpy as np

from relaybounds import bounds, channels, cover, info, reliability

BAC_PARAMS = (0.01, 0.3)

# Reference values for BAC(0.01, 0.3); alpha is the probability of input 0.
BAC_REFERENCE = {
    "C_XY": 0.46432,
    "alpha_XY": 0.58,
    "C_XYZ": 0.72022,
    "alpha_XYZ": 0.54,
    "E(C_XYZ)": 0.05951,
    "xue_a": 0.00008,
    "xue_r0": 0.25598,
    "thm1_I_XY": 0.46223,
    "thm1_a": 0.00546,
    "thm1_r0": 0.26345,
}

BAC_TOLERANCE = {"alpha_XY": 0.01, "alpha_XYZ": 0.01}
DEFAULT_TOLERANCE = 5e-4


@dataclass
class ReferenceRow:
    name: str
    computed: float
    reference: float
    tolerance: float

    @property
    def deviation(self):
        return abs(self.computed - self.reference)

    @property
    def ok(self):
        return self.deviation <= self.tolerance


def bac_example():
    """Recompute the BAC(0.01, 0.3) quantities next to their reference values."""
    spec = channels.make_bac(*BAC_PARAMS)
    cxy = channels.capacity_xy(spec)
    cxyz = channels.capacity_xyz(spec)
    xc = bounds.xue_critical(spec)
    tc = bounds.theorem1_critical(spec)
    computed = {
        "C_XY": cxy.value,
        "alpha_XY": float(cxy.argmax_input[0]),
        "C_XYZ": cxyz.value,
        "alpha_XYZ": float(cxyz.argmax_input[0]),
        "E(C_XYZ)": xc.exponent,
        "xue_a": xc.a,
        "xue_r0": xc.r0,
        "thm1_I_XY": tc.mi_xy,
        "thm1_a": tc.a,
        "thm1_r0": tc.r0,
    }
    return [ReferenceRow(k, computed[k], v, BAC_TOLERANCE.get(k, DEFAULT_TOLERANCE))
            for k, v in BAC_REFERENCE.items()]


def bac_at_reference_alpha():
    """Mutual informations evaluated at the reference maximizers themselves."""
    spec = channels.make_bac(*BAC_PARAMS)
    a_xy, a_xyz = BAC_REFERENCE["alpha_XY"], BAC_REFERENCE["alpha_XYZ"]
    return {
        "I_XY(alpha_XY)": info.mutual_information([a_xy, 1 - a_xy], spec.link),
        "I_XYZ(alpha_XYZ)": channels.broadcast_mi([a_xyz, 1 - a_xyz], spec),
        "I_XY(alpha_XYZ)": info.mutual_information([a_xyz, 1 - a_xyz], spec.link),
    }


def grid(lo, hi, step):
    n = int(round((hi - lo) / step))
    return np.round(lo + step * np.arange(n + 1), 12)


def bounds_sweep(p, r0s):
    """Rows (r0, cutset, xue, thm1, thm2) for a BSC(p) link."""
    rows = []
    for r0 in r0s:
        res = bounds.bsc_suite(p, float(r0))
        rows.append((float(r0),) + tuple(res[n].value for n in bounds.BOUND_NAMES))
    return rows


def cover_sweep(ps):
    rows = []
    for p in ps:
        b = cover.cover_bounds(float(p))
        rows.append((b.p, b.hf_upper, b.cutset_lower, b.thm1_lower, b.thm2_lower,
                     b.thm3_lower))
    return rows


def exponent_table(spec, rates):
    e = reliability.error_exponent(np.asarray(rates, dtype=float), spec)
    alt = reliability.exponent_alt_form(np.asarray(rates, dtype=float), spec)
    return list(zip(map(float, rates), map(float, e), map(float, alt)))
