import logging
from typing import Literal, Optional, Tuple

import numpy as np
from scipy.integrate import cumulative_trapezoid

from poroshock.core.exceptions import InvalidStateError, WindowError
from poroshock.models.grid import FieldState, Frame, Grid1D
from poroshock.models.profile import ShockProfile

logger = logging.getLogger(__name__)

Sampling = Literal["average", "point"]


def frame_offset(state: FieldState, profile: ShockProfile) -> float:
    """Distance gamma*t between lab and traveling coordinates; zero in the traveling frame."""
    return profile.gamma * state.t if state.frame == Frame.LAB else 0.0


def traveling_window(
    grid: Grid1D, offset: float, window: Optional[Tuple[float, float]] = None
) -> np.ndarray:
    """Mask of the cells whose xi = x - offset lies in ``window``."""
    xi = grid.centers - offset
    if window is None:
        return np.ones(grid.n_cells, dtype=bool)
    lo, hi = window
    if lo < grid.x_left - offset or hi > grid.x_right - offset:
        raise WindowError(
            f"Window [{lo:g}, {hi:g}] leaves the domain, which covers "
            f"xi in [{grid.x_left - offset:.6g}, {grid.x_right - offset:.6g}]"
        )
    return (xi >= lo) & (xi <= hi)


def perturbation(
    state: FieldState,
    grid: Grid1D,
    profile: ShockProfile,
    window: Optional[Tuple[float, float]] = None,
    reference: Optional[FieldState] = None,
    sampling: Sampling = "average",
) -> Tuple[np.ndarray, np.ndarray]:
    """phi(xi) = u(t, xi + gamma t) - U(xi) on the traveling grid; returns (xi, phi).

    With ``reference`` (the evolved unperturbed wave on the same grid) phi is the
    difference of the two fields. Otherwise ``sampling`` picks exact cell
    averages of U or its point values at cell centres.
    """
    offset = frame_offset(state, profile)
    mask = traveling_window(grid, offset, window)
    xi = grid.centers - offset
    if reference is not None:
        if reference.u.shape != state.u.shape:
            raise InvalidStateError("Reference field lives on a different grid")
        base = reference.u
    elif sampling == "point":
        base = profile.value(xi)
    else:
        base = profile.cell_averages(grid.edges, offset)
    phi = state.u - base
    return xi[mask], phi[mask]


def antiderivative(phi, dx: float) -> np.ndarray:
    """Phi(xi) = integral of phi from the left end by the cumulative trapezoid rule."""
    phi = np.asarray(phi, dtype=float)
    if phi.size == 0:
        return phi.copy()
    return cumulative_trapezoid(phi, dx=dx, initial=0.0)


def perturbation_mass(phi, dx: float) -> float:
    """Exact integral of a cell-average perturbation."""
    return float(dx * np.sum(phi))
