import numpy as np
from numpy.polynomial import Polynomial

from poroshock.core.config import get_settings
from poroshock.core.exceptions import RangeError
from poroshock.schemas.report import InequalityReport


def gauge(N: float) -> Polynomial:
    """G(r) = (N/3) r (4 - r)."""
    return Polynomial([0.0, 4.0 * N / 3.0, -N / 3.0])


def g_gauge_check(N: float, samples: int = 1001) -> InequalityReport:
    """Check the gauge properties on a uniform grid of r in [0, 1].

    0 <= G <= N, (2/3)N <= G' <= (4/3)N, G'' = -(2/3)N, |G''/G'| <= 1 and
    (G''/G')' = -(G'')^2/(G')^2 <= -1/4, all to ROUNDOFF_TOL relative to N.
    """
    if N <= 0.0:
        raise RangeError(f"The gauge needs N > 0, got {N}")
    tol = get_settings().ROUNDOFF_TOL
    r = np.linspace(0.0, 1.0, samples)
    G = gauge(N)
    d1, d2 = G.deriv(1), G.deriv(2)
    g, g1, g2 = G(r), d1(r), d2(r) * np.ones_like(r)
    log_slope = g2 / g1
    log_slope_derivative = -(g2 * g2) / (g1 * g1)

    gaps = {
        "range": max(float(np.max(-g)), float(np.max(g - N))) / N,
        "slope": max(float(np.max(2.0 * N / 3.0 - g1)), float(np.max(g1 - 4.0 * N / 3.0))) / N,
        "curvature": float(np.max(np.abs(g2 + 2.0 * N / 3.0))) / N,
        "log_slope": float(np.max(np.abs(log_slope) - 1.0)),
        "log_slope_derivative": float(np.max(log_slope_derivative + 0.25)),
    }
    failed = [name for name, gap in gaps.items() if gap > tol]
    return InequalityReport(
        prop="G-gauge",
        params={"N": N, "gaps": gaps, "G0": float(G(0.0)), "G1": float(G(1.0))},
        empirical_constant=float(np.max(log_slope_derivative)),
        samples=samples,
        passed=not failed,
        detail=", ".join(failed),
    )
