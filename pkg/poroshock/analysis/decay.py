import logging
from typing import Dict, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import linregress

from poroshock.analysis.norms import h1_norm, lp_norm
from poroshock.analysis.perturbation import antiderivative
from poroshock.core.config import get_settings
from poroshock.core.exceptions import InsufficientDataError
from poroshock.models.series import DecaySeries
from poroshock.schemas.report import DecayFit

logger = logging.getLogger(__name__)

MIN_FIT_RECORDS = 10


def theorem_rate(m: float) -> float:
    """Guaranteed L2 decay rate 1/(4(11m+7)) of the perturbation."""
    return 1.0 / (4.0 * (11.0 * m + 7.0))


def sup_rate(m: float) -> float:
    """Guaranteed L^inf decay rate, two thirds of the L2 rate."""
    return theorem_rate(m) * 2.0 / 3.0


NORM_BOUNDS = {"l2_phi": theorem_rate, "linf_phi": sup_rate}


def decay_record(t: float, phi: np.ndarray, dx: float, moments: Sequence[int]) -> Dict[str, float]:
    """Norms of phi and of its antiderivative Phi at one time."""
    Phi = antiderivative(phi, dx)
    record = {
        "t": float(t),
        "l1_phi": lp_norm(phi, dx, 1.0),
        "l2_phi": lp_norm(phi, dx, 2.0),
        "linf_phi": lp_norm(phi, dx, np.inf),
        "l2_Phi": lp_norm(Phi, dx, 2.0),
        "h1_Phi": h1_norm(Phi, dx),
    }
    for p in moments:
        record[f"lp_Phi_{p}"] = lp_norm(Phi, dx, float(p))
    return record


def fit_power_law(times: np.ndarray, values: np.ndarray) -> Tuple[float, float, float]:
    """Slope, stderr and intercept of log(values) against log(1 + t)."""
    fit = linregress(np.log1p(times), np.log(values))
    return float(fit.slope), float(fit.stderr), float(fit.intercept)


def decay_fit(
    series: DecaySeries,
    window: Tuple[float, float],
    m: float,
    norm: str = "l2_phi",
    bound: Optional[float] = None,
    q: Optional[int] = None,
    p: Optional[float] = None,
    min_records: int = MIN_FIT_RECORDS,
) -> DecayFit:
    """Fitted decay exponent of one norm column on [t_a, t_b].

    Passes when the fitted decay magnitude is at least ``bound - DELTA_TOL``;
    the bound defaults to the guaranteed rate of the norm. Records at or below
    DECAY_NORM_FLOOR count as fully decayed and are left out of the fit.
    """
    app_settings = get_settings()
    if bound is None:
        if norm not in NORM_BOUNDS:
            raise KeyError(f"No guaranteed rate for {norm}; pass bound explicitly")
        bound = NORM_BOUNDS[norm](m)

    t_a, t_b = window
    times = series.times
    values = series.column(norm)
    inside = (times >= t_a) & (times <= t_b)
    times, values = times[inside], values[inside]
    if np.any(values <= 0.0):
        raise InsufficientDataError(f"{norm} vanishes inside [{t_a:g}, {t_b:g}]; nothing to fit")

    usable = values > app_settings.DECAY_NORM_FLOOR
    note = ""
    if not np.all(usable):
        note = f"{int(np.count_nonzero(~usable))} records at the norm floor left out"
        times, values = times[usable], values[usable]
    if len(times) < min_records:
        raise InsufficientDataError(
            f"{len(times)} usable records of {norm} in [{t_a:g}, {t_b:g}], need {min_records}"
        )

    slope, stderr, _ = fit_power_law(times, values)
    passed = -slope >= bound - app_settings.DELTA_TOL
    if not passed:
        logger.error(f"{norm} decays like (1+t)^{slope:.4g}, slower than the guaranteed rate {bound:.5g}")
    return DecayFit(
        norm=norm,
        m=m,
        p=p,
        q=q,
        exponent=slope,
        stderr=stderr,
        bound=bound,
        samples=len(times),
        passed=bool(passed),
        note=note,
    )


def interpolation_ratio(phi: np.ndarray, dx: float, p: float) -> Optional[float]:
    """||phi||_inf / (||phi_xi||_inf^{(p+1)/(2p+1)} ||Phi||_p^{p/(2p+1)}); None when undefined."""
    if phi.size < 2:
        return None
    Phi = antiderivative(phi, dx)
    slope = lp_norm(np.diff(phi) / dx, dx, np.inf)
    moment = lp_norm(Phi, dx, p)
    denominator = slope ** ((p + 1.0) / (2.0 * p + 1.0)) * moment ** (p / (2.0 * p + 1.0))
    if denominator == 0.0:
        return None
    return lp_norm(phi, dx, np.inf) / denominator
