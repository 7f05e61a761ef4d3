"""Log-log power-law fits used by the scaling experiments."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class PowerLawFit:
    slope: float
    intercept: float
    r_squared: float

    def predict(self, x) -> np.ndarray:
        return np.exp(self.intercept) * np.asarray(x, dtype=float) ** self.slope


def fit_exponent(x, y) -> PowerLawFit:
    """Least-squares fit of log y = slope * log x + intercept.

    Both inputs must be strictly positive.  A constant y column fits with
    slope 0 and r_squared 1.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.size != y.size or x.size < 2:
        raise ValueError("need at least two matching points")
    if np.any(x <= 0) or np.any(y <= 0):
        raise ValueError("power-law fit requires positive data")
    lx, ly = np.log(x), np.log(y)
    slope, intercept = np.polyfit(lx, ly, 1)
    resid = ly - (slope * lx + intercept)
    ss_tot = float(np.sum((ly - ly.mean()) ** 2))
    ss_res = float(np.sum(resid**2))
    r2 = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return PowerLawFit(float(slope), float(intercept), r2)


def fit_against(feature, y) -> PowerLawFit:
    """OLS of y on an arbitrary positive feature (no logs), returning the
    same triple; used for e.g. y vs sqrt(log N) growth checks."""
    f = np.asarray(feature, dtype=float)
    y = np.asarray(y, dtype=float)
    if f.size != y.size or f.size < 2:
        raise ValueError("need at least two matching points")
    slope, intercept = np.polyfit(f, y, 1)
    resid = y - (slope * f + intercept)
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    ss_res = float(np.sum(resid**2))
    r2 = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return PowerLawFit(float(slope), float(intercept), r2)
