import logging
import math
from typing import Tuple

import numpy as np

from poroshock.core.config import get_settings
from poroshock.core.exceptions import InvalidStateError, StepRejectedError
from poroshock.models.flux import FluxSpec
from poroshock.models.grid import FieldState, Grid1D

logger = logging.getLogger(__name__)


def godunov_flux(flux: FluxSpec, left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Godunov interface flux of a convex f: max(f(max(a, u*)), f(min(b, u*)))."""
    u_star = flux.sonic_point
    return np.maximum(flux.eval(np.maximum(left, u_star)), flux.eval(np.minimum(right, u_star)))


def cfl_dt(state: FieldState, grid: Grid1D, flux: FluxSpec, m: float, safety: float) -> float:
    """Largest monotone time step times ``safety``.

    dt = safety / (max|f'(u)|/dx + 2 m max(u)^{m-1}/dx^2), with the extrema taken
    over the cells and both far-field values. For convex f the largest |f'| sits
    at one end of the range. Returns inf when both terms vanish.
    """
    if not 0.0 < safety <= 1.0:
        raise ValueError(f"safety must lie in (0, 1], got {safety}")
    dx = grid.dx
    u_min = min(float(np.min(state.u)), grid.u_left, grid.u_right)
    u_max = max(float(np.max(state.u)), grid.u_left, grid.u_right)
    speed = max(abs(float(flux.deriv(u_min))), abs(float(flux.deriv(u_max))))
    if m == 1.0:
        diffusivity = 1.0
    else:
        diffusivity = m * u_max ** (m - 1.0)
    denominator = speed / dx + 2.0 * diffusivity / dx ** 2
    if denominator == 0.0:
        return math.inf
    return safety / denominator


def interface_fluxes(u: np.ndarray, grid: Grid1D, flux: FluxSpec, m: float) -> np.ndarray:
    """Total flux f(u) - (u^m)_x at the n+1 interfaces, ghosts included."""
    ext = np.concatenate(([grid.u_left], u, [grid.u_right]))
    convective = godunov_flux(flux, ext[:-1], ext[1:])
    potential = ext if m == 1.0 else ext ** m
    diffusive = np.diff(potential) / grid.dx
    return convective - diffusive


def advance(
    state: FieldState,
    dt: float,
    grid: Grid1D,
    flux: FluxSpec,
    m: float,
    enforce_cfl: bool = True,
) -> Tuple[FieldState, float]:
    """One forward-Euler step; returns the new state and the net boundary inflow.

    The inflow is dt * (G_{1/2} - G_{n+1/2}) with G the total interface flux, so
    ``dx * sum(u_new) - dx * sum(u) == inflow`` up to roundoff.
    A cell below zero by more than roundoff raises InvalidStateError instead of
    being clipped.
    """
    u = state.u
    if u.shape != (grid.n_cells,):
        raise InvalidStateError(f"Field has {u.shape[0]} cells, grid has {grid.n_cells}")
    if enforce_cfl:
        bound = cfl_dt(state, grid, flux, m, 1.0)
        if dt > bound * (1.0 + 1e-12):
            raise StepRejectedError(f"dt={dt:.6e} exceeds the monotonicity bound {bound:.6e}")
    total = interface_fluxes(u, grid, flux, m)
    ratio = dt / grid.dx
    updated = u - ratio * (total[1:] - total[:-1])
    inflow = dt * (total[0] - total[-1])
    floor = -get_settings().ROUNDOFF_TOL * max(1.0, float(np.max(u)))
    worst = float(np.min(updated))
    if worst < floor:
        raise InvalidStateError(
            f"Step from t={state.t:.6g} with dt={dt:.3e} drove u to {worst:.3e} at "
            f"x={grid.centers[int(np.argmin(updated))]:.4g}; the step exceeds the monotonicity bound"
        )
    # roundoff below zero
    updated = np.maximum(updated, 0.0)
    return FieldState(t=state.t + dt, u=updated, frame=state.frame), float(inflow)


def step(
    state: FieldState,
    dt: float,
    grid: Grid1D,
    flux: FluxSpec,
    m: float,
    enforce_cfl: bool = True,
) -> FieldState:
    """Conservative monotone update of u_t + f(u)_x = (u^m)_xx with Dirichlet ghosts."""
    new_state, _ = advance(state, dt, grid, flux, m, enforce_cfl=enforce_cfl)
    return new_state
