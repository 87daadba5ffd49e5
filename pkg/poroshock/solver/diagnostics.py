import logging
from typing import Optional, Sequence

import numpy as np
from scipy.stats import linregress

from poroshock.models.grid import FieldState, Grid1D
from poroshock.schemas.report import GradientReport

logger = logging.getLogger(__name__)


def _sup_difference(values: np.ndarray, dx: float) -> float:
    return float(np.max(np.abs(np.diff(values)))) / dx if values.size > 1 else 0.0


def holder_exponent(snapshots: Sequence[FieldState], min_lags: int = 3):
    """Fit sup_x |u(t) - u(s)| ~ C |t - s|^a over the recorded lags.

    Snapshots must be equally spaced in time. Returns (a, stderr) or (None, None)
    when fewer than ``min_lags`` non-zero lags are available.
    """
    if len(snapshots) < min_lags + 1:
        return None, None
    times = np.array([s.t for s in snapshots])
    fields = np.stack([s.u for s in snapshots])
    lags, sups = [], []
    for lag in range(1, len(snapshots)):
        delta = np.max(np.abs(fields[lag:] - fields[:-lag]))
        span = float(np.max(times[lag:] - times[:-lag]))
        if delta > 0.0 and span > 0.0:
            lags.append(span)
            sups.append(float(delta))
    if len(lags) < min_lags:
        return None, None
    fit = linregress(np.log(lags), np.log(sups))
    return float(fit.slope), float(fit.stderr)


def gradient_diagnostics(
    snapshots: Sequence[FieldState],
    grid: Grid1D,
    m: float,
    tol: float = 1e-12,
    M: Optional[float] = None,
) -> GradientReport:
    """Gradient series of a trajectory and the max(K, M^m) bound on d(u^m)/dx.

    K is the Lipschitz constant of u0^m on the grid; M defaults to the largest
    value of the initial data and the far-field states. Near-vacuum gradients
    are central differences restricted to cells with u < dx^2.
    """
    dx = grid.dx
    first = snapshots[0].u
    if M is None:
        M = max(float(np.max(first)), grid.u_left, grid.u_right)
    K = _sup_difference(first ** m, dx)
    bound = max(K, M ** m)

    sup_dumx, sup_dum1x, sup_dux, near_vacuum = [], [], [], []
    for snapshot in snapshots:
        u = snapshot.u
        sup_dumx.append(_sup_difference(u ** m, dx))
        sup_dum1x.append(_sup_difference(u ** (m - 1.0), dx))
        sup_dux.append(_sup_difference(u, dx))
        vacuum = u < dx * dx
        if np.any(vacuum):
            central = np.gradient(u, dx)
            near_vacuum.append(float(np.max(np.abs(central[vacuum]))))
        else:
            near_vacuum.append(0.0)

    ratio = max(sup_dumx) / bound if bound > 0.0 else 0.0
    bound_ok = ratio <= 1.0 + tol
    if not bound_ok:
        logger.warning(f"sup|d(u^m)/dx| exceeded max(K, M^m)={bound:.6g} by ratio {ratio:.6g}")

    exponent, stderr = holder_exponent(snapshots)
    return GradientReport(
        times=[s.t for s in snapshots],
        sup_dumx=sup_dumx,
        sup_dum1x=sup_dum1x,
        sup_dux=sup_dux,
        near_vacuum_dux=near_vacuum,
        lipschitz_bound=bound,
        max_bound_ratio=ratio,
        bound_ok=bound_ok,
        holder_exponent=exponent,
        holder_stderr=stderr,
    )
