import numpy as np
import pytest

from poroshock.core.exceptions import InvalidStateError, RunInvalidError
from poroshock.models.grid import Frame, Grid1D, FieldState
from poroshock.solver import Bump, create_observers, evolve, norms_table, record_times, registered_observers
from poroshock.solver.evolve import working_flux
from tests.utils.utils import shock_state, small_bump


def test_record_times() -> None:
    assert np.allclose(record_times(0.0, 1.0, 0.25), [0.0, 0.25, 0.5, 0.75, 1.0])
    assert np.allclose(record_times(0.0, 1.0, 0.3), [0.0, 0.3, 0.6, 0.9, 1.0])
    assert np.allclose(record_times(0.0, 1.0, None), [0.0, 1.0])
    assert np.allclose(record_times(2.0, 2.0, 0.5), [2.0])


def test_registered_observers() -> None:
    assert {"mass", "extrema", "gradients", "steps"} <= set(registered_observers())


def test_unknown_observer() -> None:
    with pytest.raises(KeyError):
        create_observers(["entropy"])


def test_lab_evolution(profile, burgers) -> None:
    state, grid = shock_state(profile, bumps=[small_bump()], travel=1.0)
    trajectory = evolve(
        state, grid, burgers, 1.25, 1.0, cadence=0.25,
        observers=create_observers(["mass", "extrema", "gradients", "steps"]),
    )
    assert np.allclose(trajectory.times, [0.0, 0.25, 0.5, 0.75, 1.0])
    assert trajectory.final.t == 1.0
    series = trajectory.series()
    assert series["min_u"].min() >= 0.0
    assert series["max_u"].max() <= float(np.max(state.u)) * (1.0 + 1e-12)
    assert series["mass_drift"].abs().max() <= 1e-10 * series["mass"].abs().max()
    assert series["steps"].iloc[-1] == trajectory.steps
    assert list(norms_table(trajectory).columns) == ["t", "mass", "min_u", "max_u", "sup_dux", "sup_dumx"]


def test_traveling_frame_keeps_the_wave(profile, burgers) -> None:
    state, grid = shock_state(profile, travel=2.0)
    moving = FieldState(t=0.0, u=state.u, frame=Frame.TRAVELING)
    trajectory = evolve(moving, grid, burgers, 1.25, 1.0, gamma=profile.gamma)
    # the discrete wave stays within a few cells of the exact one
    gap = np.max(np.abs(trajectory.final.u - state.u))
    assert gap < 0.2
    assert trajectory.final.frame == Frame.TRAVELING


def test_working_flux(burgers) -> None:
    assert working_flux(burgers, Frame.LAB, 0.5) is burgers
    shifted = working_flux(burgers, Frame.TRAVELING, 0.5)
    assert float(shifted.eval(1.0)) == pytest.approx(0.0)
    assert float(shifted.deriv(0.0)) == pytest.approx(-0.5)


def test_boundary_reached(profile, burgers) -> None:
    state, grid = shock_state(profile, travel=0.0)
    # the lab-frame wave runs into the right margin
    with pytest.raises(RunInvalidError):
        evolve(state, grid, burgers, 1.25, 10.0, cadence=1.0, observers=[])


def test_backwards_run_rejected(burgers) -> None:
    grid = Grid1D.from_spacing(-1.0, 1.0, 0.1)
    state = FieldState(t=1.0, u=np.zeros(grid.n_cells))
    with pytest.raises(InvalidStateError):
        evolve(state, grid, burgers, 1.25, 0.5)


def test_dipole_evolution(profile, burgers) -> None:
    bump = Bump("dipole", -1.0, 1.0, 0.05)
    state, grid = shock_state(profile, bumps=[bump], travel=1.0)
    trajectory = evolve(state, grid, burgers, 1.25, 1.0, cadence=0.5, observers=create_observers(["mass", "extrema"]))
    series = trajectory.series()
    assert series["min_u"].min() >= 0.0
    assert series["mass_drift"].abs().max() <= 1e-10 * series["mass"].abs().max()
