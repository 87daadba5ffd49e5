import numpy as np
import pytest

from poroshock.models.grid import FieldState, Grid1D
from poroshock.solver import evolve, gradient_diagnostics, holder_exponent
from tests.utils.utils import shock_state, small_bump


def test_holder_exponent_of_square_root_motion() -> None:
    x = np.linspace(0.0, 1.0, 11)
    snapshots = [FieldState(t=t, u=1.0 + np.sqrt(t) * x) for t in np.linspace(0.0, 1.0, 6)]
    exponent, stderr = holder_exponent(snapshots)
    assert exponent == pytest.approx(0.5, abs=1e-10)
    assert stderr == pytest.approx(0.0, abs=1e-10)


def test_holder_exponent_needs_lags() -> None:
    snapshots = [FieldState(t=t, u=np.ones(4)) for t in (0.0, 0.5)]
    assert holder_exponent(snapshots) == (None, None)


def test_gradient_bound_on_evolution(profile, burgers) -> None:
    state, grid = shock_state(profile, bumps=[small_bump()], travel=1.0)
    trajectory = evolve(state, grid, burgers, 1.25, 0.5, cadence=0.1, observers=[])
    report = gradient_diagnostics(trajectory.snapshots, grid, 1.25)
    assert report.bound_ok
    assert len(report.sup_dumx) == len(trajectory.snapshots) == 6
    assert report.lipschitz_bound >= float(np.max(state.u)) ** 1.25
    assert 0.5 < report.holder_exponent < 1.2


def test_gradient_bound_violation_is_reported() -> None:
    grid = Grid1D.from_spacing(0.0, 1.0, 0.1)
    flat = FieldState(t=0.0, u=np.ones(grid.n_cells))
    steep = FieldState(t=0.1, u=np.where(grid.centers < 0.5, 1.0, 0.0))
    report = gradient_diagnostics([flat, steep], grid, 1.25)
    assert report.lipschitz_bound == pytest.approx(1.0)
    assert report.max_bound_ratio == pytest.approx(10.0)
    assert not report.bound_ok
    assert report.holder_exponent is None
