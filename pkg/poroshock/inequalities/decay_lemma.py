import logging
from typing import Optional, Tuple

import numpy as np
from scipy.integrate import trapezoid
from scipy.signal import argrelmax
from scipy.stats import linregress

from poroshock.core.exceptions import PreconditionError, RangeError
from poroshock.schemas.report import InequalityReport

logger = logging.getLogger(__name__)

# relative slack on the derivative hypothesis for sampled secants
SLOPE_RTOL = 1e-9
# the bump train's decay exponent must be within this share of alpha/2
EXPONENT_RTOL = 0.10


def bump_train(alpha: float, first: int = 10, last: int = 60, points: int = 17) -> Tuple[np.ndarray, np.ndarray]:
    """Near-extremal test function: triangular bumps peaking at t_k = 2^k.

    Bump k has height (1 + t_k)^{-alpha/2} k^{-0.51} and rises with slope
    exactly (1 + t_k)^{-alpha}, so f' <= (1 + t)^{-alpha} holds on each rise
    and the areas k^{-1.02} are summable.
    """
    if not 0.0 < alpha <= 2.0:
        raise RangeError(f"alpha must lie in (0, 2], got {alpha}")
    times = [np.array([0.0])]
    previous_end = 0.0
    values = [np.array([0.0])]
    for k in range(first, last + 1):
        peak = 2.0 ** k
        height = (1.0 + peak) ** (-alpha / 2.0) * k ** -0.51
        half = height * (1.0 + peak) ** alpha
        if peak - half <= previous_end:
            raise RangeError(f"Bump {k} overlaps its neighbour for alpha={alpha}; start the train later")
        previous_end = peak + half
        rise = np.linspace(peak - half, peak, points)
        fall = np.linspace(peak, peak + half, points)[1:]
        times.append(np.concatenate((rise, fall)))
        values.append(np.concatenate((height * (rise - rise[0]) / half, height * (fall[-1] - fall) / half)))
    return np.concatenate(times), np.concatenate(values)


def verify_decay_lemma(alpha: float, times, values) -> InequalityReport:
    """Fit C in f(t) <= C (1 + t)^{-alpha/2} for a sampled f >= 0 with f' <= (1 + t)^{-alpha}.

    The hypothesis on f' is checked on sample secants against the bound at the
    left end of each interval. When f has interior peaks, the log-log slope of
    the peaks is reported as the attained decay exponent.
    """
    if not 0.0 < alpha <= 2.0:
        raise RangeError(f"alpha must lie in (0, 2], got {alpha}")
    t = np.asarray(times, dtype=float)
    f = np.asarray(values, dtype=float)
    if np.any(np.diff(t) <= 0.0):
        raise PreconditionError("Sample times must be strictly increasing")
    if np.any(f < 0.0):
        raise PreconditionError(f"f takes the negative value {float(np.min(f)):.3e}")
    secant = np.diff(f) / np.diff(t)
    allowed = (1.0 + t[:-1]) ** -alpha
    excess = secant - allowed * (1.0 + SLOPE_RTOL)
    if np.any(excess > 0.0):
        worst = int(np.argmax(excess))
        raise PreconditionError(
            f"f' = {secant[worst]:.6e} exceeds (1+t)^-alpha = {allowed[worst]:.6e} at t = {t[worst]:.6g}"
        )

    constant = float(np.max(f * (1.0 + t) ** (alpha / 2.0)))
    integral = float(trapezoid(f, t))

    exponent: Optional[float] = None
    peaks = argrelmax(f)[0]
    if peaks.size >= 3:
        exponent = float(linregress(np.log1p(t[peaks]), np.log(f[peaks])).slope)
    target = -alpha / 2.0
    attained = exponent is None or abs(exponent - target) <= EXPONENT_RTOL * abs(target)
    passed = np.isfinite(constant) and attained
    return InequalityReport(
        prop="decay-lemma",
        params={"alpha": alpha, "integral": integral, "target_exponent": target},
        empirical_constant=constant,
        samples=int(t.size),
        scale_exponent=exponent,
        passed=bool(passed),
        detail="" if attained else f"peaks decay like (1+t)^{exponent:.4g}",
    )
