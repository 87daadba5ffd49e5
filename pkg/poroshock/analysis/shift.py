import logging
import math
from typing import Optional, Tuple

import numpy as np
from scipy.optimize import bisect

from poroshock.core.exceptions import DegenerateJumpError
from poroshock.models.grid import FieldState, Grid1D
from poroshock.models.profile import ShockProfile

logger = logging.getLogger(__name__)


def _check_left_state(profile: ShockProfile) -> None:
    if profile.u_minus == 0.0:
        raise DegenerateJumpError("The mass-neutral shift is undefined for u_minus = 0")


def _profile_mass_right_of(profile: ShockProfile, a: float) -> float:
    """Integral of U over [a, inf)."""
    return float(profile.antiderivative(math.inf) - profile.antiderivative(a))


def compute_shift(state: FieldState, grid: Grid1D, profile: ShockProfile) -> float:
    """x_0 with integral of u0(x) - U(x + x_0) equal to zero.

    The constraint has derivative u_- in x_0, so x_0 = -(integral of u0 - U) / u_-.
    Left of the grid u0 and U both equal u_-; right of it u0 vanishes.
    """
    _check_left_state(profile)
    excess = state.mass(grid.dx) - _profile_mass_right_of(profile, grid.x_left)
    return -excess / profile.u_minus


def compute_shift_bisect(
    state: FieldState,
    grid: Grid1D,
    profile: ShockProfile,
    bracket: Optional[Tuple[float, float]] = None,
    xtol: float = 1e-13,
) -> float:
    """Root of the shift constraint by bisection on exact profile cell averages."""
    _check_left_state(profile)
    mass = state.mass(grid.dx)

    def residual(shift: float) -> float:
        # U(x + shift) is U shifted by -shift
        cells = profile.cell_averages(grid.edges, -shift)
        tail = float(profile.antiderivative(math.inf) - profile.antiderivative(grid.x_right + shift))
        return mass - grid.dx * float(np.sum(cells)) - tail

    lo, hi = bracket or (-0.25 * (grid.x_right - grid.x_left), 0.25 * (grid.x_right - grid.x_left))
    root = bisect(residual, lo, hi, xtol=xtol, maxiter=200)
    logger.debug(f"Bisection shift {root:.15g} on [{lo:g}, {hi:g}]")
    return float(root)
