import logging
import math
from dataclasses import replace
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from poroshock.core.config import get_settings
from poroshock.core.exceptions import InvalidStateError, RunInvalidError
from poroshock.models.flux import FluxSpec
from poroshock.models.grid import FieldState, Frame, Grid1D, Trajectory
from poroshock.solver.observers import BaseObserver, ObservationContext, create_observers
from poroshock.solver.scheme import advance, cfl_dt
from poroshock.utilities.pool import parallel_map

logger = logging.getLogger(__name__)

DEFAULT_OBSERVERS = ("mass", "extrema", "gradients")


def record_times(t0: float, t_end: float, cadence: Optional[float]) -> np.ndarray:
    """t0, t0 + cadence, ... up to t_end, always ending at t_end."""
    if cadence is None or cadence <= 0.0 or t_end == t0:
        return np.array([t0, t_end]) if t_end > t0 else np.array([t0])
    count = int(math.floor((t_end - t0) / cadence + 1e-9))
    times = t0 + cadence * np.arange(count + 1)
    if t_end - times[-1] > 1e-9 * max(1.0, abs(t_end)):
        times = np.append(times, t_end)
    else:
        times[-1] = t_end
    return times


def working_flux(flux: FluxSpec, frame: Frame, gamma: float) -> FluxSpec:
    """Flux of the frame: f in the lab, f(u) - gamma*u in the traveling frame."""
    return flux.shifted(gamma) if Frame(frame) == Frame.TRAVELING else flux


def check_clearance(u: np.ndarray, grid: Grid1D, t: float) -> None:
    """Margin cells next to each boundary must still hold the far-field values."""
    app_settings = get_settings()
    margin = app_settings.BOUNDARY_MARGIN_CELLS
    atol = app_settings.BOUNDARY_ATOL
    left_gap = float(np.max(np.abs(u[:margin] - grid.u_left)))
    right_gap = float(np.max(np.abs(u[-margin:] - grid.u_right)))
    if left_gap > atol or right_gap > atol:
        raise RunInvalidError(
            f"Solution reached the boundary at t={t:.6g}: far-field gap "
            f"left={left_gap:.3e} right={right_gap:.3e} exceeds {atol:.1e} in the outer {margin} cells"
        )


def evolve(
    state: FieldState,
    grid: Grid1D,
    flux: FluxSpec,
    m: float,
    t_end: float,
    cadence: Optional[float] = None,
    observers: Optional[Sequence[BaseObserver]] = None,
    dt: Optional[float] = None,
    safety: Optional[float] = None,
    gamma: float = 0.0,
    monitor_boundary: bool = True,
    keep_snapshots: bool = True,
    enforce_cfl: bool = True,
) -> Trajectory:
    """Advance ``state`` to ``t_end`` and record observers at the cadence.

    With ``dt`` the step is fixed (shortened only to land on record times);
    otherwise it is recomputed from the CFL bound every step.
    """
    if t_end < state.t:
        raise InvalidStateError(f"t_end={t_end} precedes the state time {state.t}")
    safety = safety or get_settings().CFL_SAFETY
    active = working_flux(flux, state.frame, gamma)
    if observers is None:
        observers = create_observers(DEFAULT_OBSERVERS)

    targets = record_times(state.t, t_end, cadence)
    initial_mass = state.mass(grid.dx)
    inflow_total = 0.0
    steps = 0
    snapshots: List[FieldState] = []
    rows = []

    def record(current: FieldState):
        if monitor_boundary:
            check_clearance(current.u, grid, current.t)
        context = ObservationContext(
            state=current,
            grid=grid,
            flux=active,
            m=m,
            steps=steps,
            initial_mass=initial_mass,
            boundary_flux=inflow_total,
        )
        row = {"t": current.t}
        for observer in observers:
            row.update(observer.observe(context))
        rows.append(row)
        if keep_snapshots or current.t == t_end:
            snapshots.append(current)

    record(state)
    for target in targets[1:]:
        while state.t < target:
            h = dt if dt is not None else cfl_dt(state, grid, active, m, safety)
            remaining = target - state.t
            landing = h >= remaining * (1.0 - 1e-12)
            if landing:
                h = remaining
            state, inflow = advance(state, h, grid, active, m, enforce_cfl=enforce_cfl)
            inflow_total += inflow
            steps += 1
            if landing:
                state = replace(state, t=float(target))
        record(state)

    if steps:
        logger.debug(f"Evolved to t={state.t:.6g} in {steps} steps ({'fixed' if dt else 'cfl'} dt)")
    return Trajectory(
        final=state,
        snapshots=snapshots,
        rows=rows,
        steps=steps,
        boundary_flux=inflow_total,
        dt_policy="fixed" if dt is not None else "cfl",
        grid=grid,
    )


def pair_dt(states: Iterable[FieldState], grid: Grid1D, flux: FluxSpec, m: float, safety: Optional[float] = None) -> float:
    """Common fixed step valid for every member of a group of initial data."""
    safety = safety or get_settings().CFL_SAFETY
    return min(cfl_dt(s, grid, flux, m, safety) for s in states)


def evolve_pair(
    first: FieldState,
    second: FieldState,
    grid: Grid1D,
    flux: FluxSpec,
    m: float,
    t_end: float,
    cadence: Optional[float] = None,
    dt: Optional[float] = None,
    gamma: float = 0.0,
    monitor_boundary: bool = False,
    enforce_cfl: bool = True,
) -> Tuple[Trajectory, Trajectory]:
    """Evolve two data sets with the identical step sequence."""
    active = working_flux(flux, first.frame, gamma)
    if dt is None:
        dt = pair_dt((first, second), grid, active, m)

    def run(initial: FieldState) -> Trajectory:
        return evolve(
            initial,
            grid,
            flux,
            m,
            t_end,
            cadence=cadence,
            observers=[],
            dt=dt,
            gamma=gamma,
            monitor_boundary=monitor_boundary,
            enforce_cfl=enforce_cfl,
        )

    left, right = parallel_map(run, [first, second])
    return left, right
