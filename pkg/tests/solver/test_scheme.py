import numpy as np
import pytest

from poroshock.core.exceptions import InvalidStateError, StepRejectedError
from poroshock.models.grid import FieldState, Frame, Grid1D
from poroshock.semigroup import check_monotone
from poroshock.solver import InitialData, advance, cfl_dt, godunov_flux, step
from tests.utils.utils import shock_state, small_bump


def test_godunov_flux_is_upwind_for_burgers(burgers) -> None:
    left = np.array([1.0, 0.0, 1.0, -1.0])
    right = np.array([0.0, 1.0, 1.0, 1.0])
    # shock, rarefaction through the sonic point, constant, transonic rarefaction
    assert np.allclose(godunov_flux(burgers, left, right), [0.5, 0.0, 0.5, 0.0])


def test_advance_balances_mass(profile, burgers) -> None:
    state, grid = shock_state(profile, bumps=[small_bump()])
    dt = cfl_dt(state, grid, burgers, 1.25, 0.4)
    new_state, inflow = advance(state, dt, grid, burgers, 1.25)
    change = new_state.mass(grid.dx) - state.mass(grid.dx)
    assert change == pytest.approx(inflow, abs=1e-12)
    assert new_state.t == pytest.approx(dt)


def test_far_field_state_is_steady(burgers) -> None:
    grid = Grid1D.from_spacing(-1.0, 1.0, 0.1, u_left=0.0, u_right=0.0)
    state = FieldState(t=0.0, u=np.zeros(grid.n_cells))
    dt = cfl_dt(FieldState(t=0.0, u=np.full(grid.n_cells, 1.0)), grid, burgers, 1.25, 0.4)
    assert np.all(step(state, dt, grid, burgers, 1.25).u == 0.0)


def test_step_above_cfl_rejected(profile, burgers) -> None:
    state, grid = shock_state(profile)
    bound = cfl_dt(state, grid, burgers, 1.25, 1.0)
    with pytest.raises(StepRejectedError):
        step(state, 2.0 * bound, grid, burgers, 1.25)


def test_cfl_safety_range(profile, burgers) -> None:
    state, grid = shock_state(profile)
    with pytest.raises(ValueError):
        cfl_dt(state, grid, burgers, 1.25, 1.5)


def test_wrong_shape_rejected(profile, burgers) -> None:
    state, grid = shock_state(profile)
    short = FieldState(t=0.0, u=state.u[:-1])
    with pytest.raises(InvalidStateError):
        step(short, 1e-4, grid, burgers, 1.25)


def test_negative_field_rejected() -> None:
    with pytest.raises(InvalidStateError):
        FieldState(t=0.0, u=np.array([0.0, -1e-3, 1.0]))


def test_field_is_read_only() -> None:
    state = FieldState(t=0.0, u=np.ones(4), frame="traveling")
    assert state.frame == Frame.TRAVELING
    with pytest.raises(ValueError):
        state.u[0] = 2.0


def test_monotone_under_cfl(profile, burgers) -> None:
    bump = small_bump()
    _, grid = shock_state(profile, bumps=[bump])
    u0 = InitialData(profile).state(grid)
    v0 = InitialData(profile, (bump,)).state(grid)
    assert check_monotone(u0, v0, grid, burgers, 1.25, t_end=0.5, cadence=0.1) <= 1e-12


def test_monotone_violated_above_cfl(profile, burgers) -> None:
    u0, grid = shock_state(profile)
    spiked = np.array(u0.u)
    # a cell in the left far field, where u = u_-
    spiked[20] += 0.1
    v0 = FieldState(t=0.0, u=spiked)
    dt = 3.0 * cfl_dt(v0, grid, burgers, 1.25, 1.0)
    violation = check_monotone(u0, v0, grid, burgers, 1.25, t_end=dt, dt=dt, enforce_cfl=False)
    assert violation > 1e-3


def test_negative_update_is_not_clipped(burgers) -> None:
    grid = Grid1D.from_spacing(-1.0, 1.0, 0.1, u_left=1.0, u_right=0.0)
    state = FieldState(t=0.0, u=np.where(grid.centers < 0.0, 1.0, 0.0))
    bound = cfl_dt(state, grid, burgers, 1.25, 1.0)
    with pytest.raises(InvalidStateError):
        advance(state, 5.0 * bound, grid, burgers, 1.25, enforce_cfl=False)
    new_state, _ = advance(state, bound, grid, burgers, 1.25)
    assert float(np.min(new_state.u)) >= 0.0
