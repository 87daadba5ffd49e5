import numpy as np
import pytest

from poroshock.core.exceptions import InvalidStateError, SchemeInstabilityError
from poroshock.models.grid import FieldState, Grid1D, RegularizedRun
from poroshock.solver import evolve
from poroshock.solver.regularized import cascade, check_band, regularized_grid, regularized_initial, regularized_solve


def test_run_validation() -> None:
    with pytest.raises(InvalidStateError):
        RegularizedRun(n=0, M=1.2, m=1.25)
    with pytest.raises(InvalidStateError):
        RegularizedRun(n=10, M=-1.0, m=1.25)


def test_initial_clamp() -> None:
    run = RegularizedRun(n=10, M=1.2, m=1.25)
    x = np.linspace(-10.0, 10.0, 2001)
    v = regularized_initial(run, x, np.zeros_like(x))
    assert np.all(v >= run.floor)
    assert np.all(v <= run.v_max)
    assert np.allclose(v[np.abs(x) >= 9.0], run.v_max)
    assert np.allclose(v[np.abs(x) <= 8.0], run.floor)


def test_band_violation() -> None:
    run = RegularizedRun(n=10, M=1.2, m=1.25)
    state = FieldState(t=0.0, u=np.array([0.0, 0.5, 1.0]))
    with pytest.raises(SchemeInstabilityError):
        check_band(run, state)


def test_regularized_solve_stays_in_band(burgers) -> None:
    run = RegularizedRun(n=5, M=1.2, m=1.25)

    def u0(x: np.ndarray) -> np.ndarray:
        return np.where(x < 0.0, 1.0, 0.0)

    final, grid, trajectory = regularized_solve(run, burgers, 1.25, 0.2, u0, 0.1, cadence=0.1)
    assert grid == regularized_grid(run, 0.1)
    v_min, v_max = check_band(run, final)
    assert v_min >= run.floor * (1.0 - 1e-12)
    assert v_max <= run.v_max * (1.0 + 1e-12)
    assert len(trajectory.snapshots) == 3


def test_constant_data_stays_constant(burgers) -> None:
    run = RegularizedRun(n=4, M=1.2, m=1.25)

    def u0(x: np.ndarray) -> np.ndarray:
        return np.full_like(x, 1.2)

    final, _, _ = regularized_solve(run, burgers, 1.25, 0.3, u0, 0.1)
    assert final.t == 0.3
    assert np.allclose(final.u, 1.2, rtol=0.0, atol=1e-13)


def test_cascade_distance_decreases_with_n(burgers) -> None:
    def u0(x: np.ndarray) -> np.ndarray:
        return np.where(x < 0.0, 1.0, 0.0)

    grid = Grid1D.from_spacing(-8.0, 8.0, 0.1, u_left=1.0, u_right=0.0)
    direct = evolve(FieldState(t=0.0, u=u0(grid.centers)), grid, burgers, 1.25, 0.5, observers=[])
    rows = cascade(
        [4, 16, 64], 1.2, burgers, 1.25, 0.5, u0, 0.1,
        reference=(grid.centers, direct.final.u), window=(-1.0, 1.0),
    )
    assert [row["n"] for row in rows] == [4, 16, 64]
    distances = [row["sup_distance"] for row in rows]
    assert distances[0] > distances[1] > distances[2]
    assert all(row["min_v"] >= 1.0 / row["n"] * (1.0 - 1e-12) for row in rows)
