import math

import numpy as np

from poroshock.core.exceptions import RangeError


def lp_norm(values, dx: float, p: float = 2.0) -> float:
    """(dx * sum |v|^p)^(1/p); ``p = inf`` gives max |v|."""
    if p < 1.0:
        raise RangeError(f"L^p norms need p >= 1, got {p}")
    v = np.abs(np.asarray(values, dtype=float))
    if v.size == 0:
        return 0.0
    if math.isinf(p):
        return float(np.max(v))
    if p == 1.0:
        return float(dx * np.sum(v))
    peak = float(np.max(v))
    if peak == 0.0:
        return 0.0
    # scaled to keep |v|^p representable for large p
    return peak * float(dx * np.sum((v / peak) ** p)) ** (1.0 / p)


def h1_norm(values, dx: float) -> float:
    """sqrt(||v||_2^2 + ||dv/dx||_2^2) with forward differences."""
    v = np.asarray(values, dtype=float)
    slope = np.diff(v) / dx
    return math.sqrt(dx * float(np.sum(v * v)) + dx * float(np.sum(slope * slope)))
