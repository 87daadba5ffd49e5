import logging
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from poroshock.core.exceptions import SchemeInstabilityError
from poroshock.models.flux import FluxSpec
from poroshock.models.grid import FieldState, Grid1D, RegularizedRun, Trajectory
from poroshock.solver.evolve import evolve
from poroshock.utilities.pool import parallel_map

logger = logging.getLogger(__name__)

# relative slack on the band [1/n, M^m] for roundoff
_BAND_RTOL = 1e-12


def regularized_initial(run: RegularizedRun, x: np.ndarray, u0: np.ndarray) -> np.ndarray:
    """v = w_n(x): u0^m clamped to [1/n, M^m] inside |x| <= n-2, M^m beyond n-1,
    linear in between."""
    v = np.clip(np.asarray(u0, dtype=float) ** run.m, run.floor, run.v_max)
    r = np.abs(x)
    inner = float(run.n - 2)
    blend = np.clip(r - inner, 0.0, 1.0)
    return (1.0 - blend) * v + blend * run.v_max


def regularized_grid(run: RegularizedRun, dx: float) -> Grid1D:
    return Grid1D.from_spacing(-float(run.n), float(run.n), dx, u_left=run.M, u_right=run.M)


def check_band(run: RegularizedRun, state: FieldState) -> Tuple[float, float]:
    """Raise if v = u^m left [1/n, M^m]; return (min v, max v)."""
    v = state.u ** run.m
    v_min, v_max = float(np.min(v)), float(np.max(v))
    if v_min < run.floor * (1.0 - _BAND_RTOL) or v_max > run.v_max * (1.0 + _BAND_RTOL):
        raise SchemeInstabilityError(
            f"Regularized run n={run.n} left its band at t={state.t:.6g}: "
            f"min v={v_min:.6e} (floor {run.floor:.6e}), max v={v_max:.6e} (cap {run.v_max:.6e})"
        )
    return v_min, v_max


def regularized_solve(
    run: RegularizedRun,
    flux: FluxSpec,
    m: float,
    t_end: float,
    u0: Callable[[np.ndarray], np.ndarray],
    dx: float,
    cadence: Optional[float] = None,
    dt: Optional[float] = None,
) -> Tuple[FieldState, Grid1D, Trajectory]:
    """Solve the uniformly parabolic problem of index n and return u = v^{1/m} at t_end.

    ``u0`` maps cell centres to initial values. The problem in v = u^m is the
    same conservation law in u, advanced with the monotone scheme on [-n, n]
    with Dirichlet value M; the band 1/n <= v <= M^m is checked at every record.
    """
    grid = regularized_grid(run, dx)
    v0 = regularized_initial(run, grid.centers, u0(grid.centers))
    state = FieldState(t=0.0, u=v0 ** (1.0 / m))
    check_band(run, state)

    trajectory = evolve(
        state,
        grid,
        flux,
        m,
        t_end,
        cadence=cadence,
        observers=[],
        dt=dt,
        monitor_boundary=False,
    )
    for snapshot in trajectory.snapshots:
        check_band(run, snapshot)
    logger.info(f"Regularized run n={run.n} reached t={t_end:g} in {trajectory.steps} steps")
    return trajectory.final, grid, trajectory


def cascade(
    indices: Sequence[int],
    M: float,
    flux: FluxSpec,
    m: float,
    t_end: float,
    u0: Callable[[np.ndarray], np.ndarray],
    dx: float,
    reference: Tuple[np.ndarray, np.ndarray],
    window: Tuple[float, float] = (-4.0, 4.0),
    cadence: Optional[float] = None,
) -> List[Dict[str, float]]:
    """Sup-distance on ``window`` between each regularized run and a reference solution.

    ``reference`` is (cell centres, values) of the direct degenerate solver at t_end.
    Runs over n are independent and fan out over the worker pool.
    """
    ref_x, ref_u = reference
    lo, hi = window
    mask = (ref_x >= lo) & (ref_x <= hi)

    def solve_one(n: int) -> Dict[str, float]:
        run = RegularizedRun(n=n, M=M, m=m)
        final, grid, trajectory = regularized_solve(run, flux, m, t_end, u0, dx, cadence=cadence)
        approx = np.interp(ref_x[mask], grid.centers, final.u)
        distance = float(np.max(np.abs(approx - ref_u[mask])))
        return {
            "n": n,
            "sup_distance": distance,
            "floor_u": run.u_floor,
            "min_v": float(np.min(final.u ** m)),
            "steps": trajectory.steps,
        }

    return parallel_map(solve_one, list(indices))
