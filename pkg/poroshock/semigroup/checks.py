"""
Scheme-level checks of the semigroup properties of the evolution.

Each check evolves a pair of initial data with one common step sequence so the
comparison sees identical time levels. For a monotone conservative scheme the
properties hold exactly in exact arithmetic; the returned numbers are roundoff.
"""
import logging
import math
from typing import Optional, Tuple

import numpy as np
import pandas as pd

from poroshock.core.config import get_settings
from poroshock.core.exceptions import AlignmentError, OrderingError, RunInvalidError
from poroshock.models.flux import FluxSpec
from poroshock.models.grid import FieldState, Grid1D, Trajectory
from poroshock.solver.evolve import evolve_pair

logger = logging.getLogger(__name__)


def grid_offset(y: float, dx: float) -> int:
    """Number of cells in a shift; raises unless ``y`` is an integer multiple of ``dx``."""
    cells = y / dx
    k = int(round(cells))
    if abs(cells - k) > 1e-9 * max(1.0, abs(cells)):
        raise AlignmentError(f"Shift y={y} is {cells:.6g} cells; only integer multiples of dx={dx} are exact")
    return k


def translate(u: np.ndarray, k: int, grid: Grid1D) -> np.ndarray:
    """u(x - k dx) on the grid, filling vacated cells with the far-field values."""
    if k == 0:
        return np.array(u, copy=True)
    out = np.empty_like(u)
    if k > 0:
        out[:k] = grid.u_left
        out[k:] = u[:-k]
    else:
        out[k:] = grid.u_right
        out[:k] = u[-k:]
    return out


def _pair(
    u0: FieldState,
    v0: FieldState,
    grid: Grid1D,
    flux: FluxSpec,
    m: float,
    t_end: float,
    cadence: Optional[float],
    dt: Optional[float] = None,
    gamma: float = 0.0,
    enforce_cfl: bool = True,
) -> Tuple[Trajectory, Trajectory]:
    return evolve_pair(
        u0, v0, grid, flux, m, t_end, cadence=cadence, dt=dt, gamma=gamma, enforce_cfl=enforce_cfl
    )


def far_field_gap(u: np.ndarray, grid: Grid1D, k: int) -> float:
    """Largest departure from the far-field values in the cells a shift by ``k`` reads across a boundary."""
    width = get_settings().BOUNDARY_MARGIN_CELLS + abs(k)
    left = float(np.max(np.abs(u[:width] - grid.u_left)))
    right = float(np.max(np.abs(u[-width:] - grid.u_right)))
    return max(left, right)


def translation_tolerance(u0: FieldState, grid: Grid1D, y: float) -> float:
    """Roundoff plus the far-field gap of ``u0`` next to the boundaries."""
    k = grid_offset(y, grid.dx)
    return get_settings().ROUNDOFF_TOL + far_field_gap(u0.u, grid, k)


def check_translation(
    u0: FieldState,
    grid: Grid1D,
    flux: FluxSpec,
    m: float,
    y: float,
    t_end: float,
    gamma: float = 0.0,
) -> float:
    """max_i |T(t) u0(. - y) - (T(t) u0)(. - y)| at t_end over the cells both runs evolved."""
    k = grid_offset(y, grid.dx)
    shifted = FieldState(t=u0.t, u=translate(u0.u, k, grid), frame=u0.frame)
    if k == 0:
        return 0.0
    plain, moved = _pair(u0, shifted, grid, flux, m, t_end, cadence=None, gamma=gamma)
    if k > 0:
        difference = moved.final.u[k:] - plain.final.u[:-k]
    else:
        difference = moved.final.u[:k] - plain.final.u[-k:]
    discrepancy = float(np.max(np.abs(difference)))
    logger.debug(f"Translation by {k} cells: discrepancy {discrepancy:.3e}")
    return discrepancy


def check_monotone(
    u0: FieldState,
    v0: FieldState,
    grid: Grid1D,
    flux: FluxSpec,
    m: float,
    t_end: float,
    cadence: Optional[float] = None,
    dt: Optional[float] = None,
    gamma: float = 0.0,
    enforce_cfl: bool = True,
) -> float:
    """Worst max(0, T(t)u0 - T(t)v0) over the recorded times for u0 <= v0."""
    if np.any(u0.u > v0.u):
        worst = float(np.max(u0.u - v0.u))
        raise OrderingError(f"Comparison needs u0 <= v0 pointwise; u0 exceeds v0 by {worst:.3e}")
    first, second = _pair(u0, v0, grid, flux, m, t_end, cadence, dt=dt, gamma=gamma, enforce_cfl=enforce_cfl)
    violation = 0.0
    for a, b in zip(first.snapshots, second.snapshots):
        violation = max(violation, float(np.max(a.u - b.u)))
    return max(violation, 0.0)


def _check_interior(difference: np.ndarray, t: float) -> None:
    app_settings = get_settings()
    margin = app_settings.BOUNDARY_MARGIN_CELLS
    edge = max(float(np.max(np.abs(difference[:margin]))), float(np.max(np.abs(difference[-margin:]))))
    if edge > app_settings.BOUNDARY_ATOL:
        raise RunInvalidError(
            f"Difference of the pair reached the boundary margin at t={t:.6g} (|u - v| = {edge:.3e})"
        )


def check_l1_contraction(
    u0: FieldState,
    v0: FieldState,
    grid: Grid1D,
    flux: FluxSpec,
    m: float,
    t_end: float,
    cadence: Optional[float] = None,
    gamma: float = 0.0,
) -> pd.Series:
    """Series of ||T(t)u0 - T(t)v0||_1 indexed by the recorded times."""
    first, second = _pair(u0, v0, grid, flux, m, t_end, cadence, gamma=gamma)
    values = []
    for a, b in zip(first.snapshots, second.snapshots):
        difference = a.u - b.u
        _check_interior(difference, a.t)
        values.append(grid.dx * float(np.sum(np.abs(difference))))
    return pd.Series(values, index=first.times, name="l1_distance")


def contraction_excess(series: pd.Series) -> float:
    """Largest increase of an L1-distance series relative to its initial value."""
    values = series.to_numpy()
    if len(values) < 2:
        return 0.0
    increase = float(np.max(np.diff(values)))
    scale = values[0] if values[0] > 0.0 else 1.0
    return max(increase, 0.0) / scale


def constancy_gap(series: pd.Series) -> float:
    """Largest deviation of an L1-distance series from its initial value, relative."""
    values = series.to_numpy()
    scale = values[0] if values[0] > 0.0 else 1.0
    return float(np.max(np.abs(values - values[0]))) / scale


def check_conservation(
    u0: FieldState,
    v0: FieldState,
    grid: Grid1D,
    flux: FluxSpec,
    m: float,
    t_end: float,
    cadence: Optional[float] = None,
    gamma: float = 0.0,
) -> float:
    """Largest drift of the integral of T(t)u0 - T(t)v0 over the recorded times."""
    first, second = _pair(u0, v0, grid, flux, m, t_end, cadence, gamma=gamma)
    initial = grid.dx * float(np.sum(u0.u - v0.u))
    drift = 0.0
    for a, b in zip(first.snapshots, second.snapshots):
        _check_interior(a.u - b.u, a.t)
        drift = max(drift, abs(grid.dx * float(np.sum(a.u - b.u)) - initial))
    return drift


def conservation_scale(u0: FieldState, v0: FieldState, grid: Grid1D) -> float:
    """||u0||_1 + ||v0||_1, the scale of the relative conservation threshold."""
    scale = grid.dx * (float(np.sum(u0.u)) + float(np.sum(v0.u)))
    return scale if scale > 0.0 else math.inf
