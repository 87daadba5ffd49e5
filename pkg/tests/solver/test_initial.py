import math

import numpy as np
import pytest

from poroshock.core.exceptions import InvalidStateError, RangeError
from poroshock.models.grid import Grid1D
from poroshock.solver import Bump, InitialData, bumps_from_specs, profile_grid


@pytest.mark.parametrize("shape", ["gaussian", "cosine"])
def test_bump_with_mass(shape: str) -> None:
    bump = Bump.with_mass(shape, 0.0, 1.5, 0.2)
    assert bump.mass == pytest.approx(0.2)
    grid = Grid1D.from_spacing(-12.0, 12.0, 0.05)
    cells = bump.cell_averages(grid.edges)
    assert grid.dx * float(np.sum(cells)) == pytest.approx(0.2, abs=1e-12)


def test_dipole_has_no_mass() -> None:
    bump = Bump("dipole", 1.0, 0.5, 0.3)
    assert bump.mass == 0.0
    grid = Grid1D.from_spacing(-6.0, 8.0, 0.1)
    assert abs(grid.dx * float(np.sum(bump.cell_averages(grid.edges)))) < 1e-12
    with pytest.raises(RangeError):
        Bump.with_mass("dipole", 0.0, 1.0, 0.1)


def test_bump_width_must_be_positive() -> None:
    with pytest.raises(RangeError):
        Bump("gaussian", 0.0, 0.0, 1.0)


def test_bumps_from_specs() -> None:
    bumps = bumps_from_specs(
        [
            {"shape": "gaussian", "center": -2.0, "width": 1.0, "amplitude": 0.1, "mass": None},
            {"shape": "cosine", "center": 0.0, "width": 2.0, "amplitude": None, "mass": 0.4},
        ]
    )
    assert bumps[0].amplitude == 0.1
    assert bumps[1].amplitude == pytest.approx(0.2)


def test_initial_mass(profile) -> None:
    bump = Bump("gaussian", -3.0, 1.0, 0.05)
    data = InitialData(profile, (bump,))
    grid = profile_grid(profile, 0.05, bumps=[bump])
    state = data.state(grid)
    profile_mass = float(profile.antiderivative(math.inf) - profile.antiderivative(grid.x_left))
    assert state.mass(grid.dx) == pytest.approx(profile_mass + bump.mass, abs=1e-10)
    assert data.perturbation_mass == pytest.approx(bump.mass)


def test_profile_grid_margins(profile) -> None:
    grid = profile_grid(profile, 0.05, travel=2.0)
    state = InitialData(profile).state(grid)
    assert np.all(state.u[:10] == profile.u_minus)
    assert np.all(state.u[-10:] == 0.0)
    assert grid.u_left == profile.u_minus
    assert grid.x_right >= profile.x_R + 2.0


def test_shifted_data(profile) -> None:
    grid = profile_grid(profile, 0.05, travel=1.0)
    base = InitialData(profile).state(grid)
    moved = InitialData(profile).shifted(0.5).state(grid)
    # U(x - 0.5) is U moved right by ten cells
    assert np.allclose(moved.u[10:], base.u[:-10], atol=1e-12)


def test_negative_initial_data(profile) -> None:
    bump = Bump("gaussian", -3.0, 1.0, -2.0)
    grid = profile_grid(profile, 0.05, bumps=[bump])
    with pytest.raises(InvalidStateError):
        InitialData(profile, (bump,)).state(grid)


@pytest.mark.parametrize("shape", ["gaussian", "dipole"])
def test_tails_are_cut_at_support(shape: str) -> None:
    bump = Bump(shape, 1.0, 0.5, 0.3)
    radius = bump.support_radius
    outside = np.array([1.0 - radius - 0.01, 1.0 + radius + 0.01, 1.0 + 2.0 * radius])
    assert np.all(bump.value(outside) == 0.0)
    grid = Grid1D.from_spacing(-6.0, 8.0, 0.1)
    cells = bump.cell_averages(grid.edges)
    assert np.all(cells[grid.centers > 1.0 + radius + grid.dx] == 0.0)
    assert np.all(cells[grid.centers < 1.0 - radius - grid.dx] == 0.0)
    assert grid.dx * float(np.sum(cells)) == pytest.approx(bump.mass, abs=1e-12)


def test_dipole_leaves_vacuum_untouched(profile) -> None:
    bump = Bump("dipole", -1.0, 1.0, 0.05)
    grid = profile_grid(profile, 0.05, bumps=[bump])
    state = InitialData(profile, (bump,)).state(grid)
    ahead = grid.centers > profile.x_R + grid.dx
    assert np.all(state.u[ahead] == 0.0)
